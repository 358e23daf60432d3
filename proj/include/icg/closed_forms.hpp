#pragma once

// Closed-form energies of ICG_n({1, p^g}) and ICG_n({p, q}).
//
// Notation: n = p_1^a_1 ... p_k^a_k, k distinct primes.
//
// ICG_n({1, p^g}), 1 <= g <= a_p:
//   a_p = 1              2^{k-1} (phi(n) + phi(n/p))
//   g = a_p >= 2         2^{k-1} (2 phi(n) + (p^g - 2p + 2) phi(n/p^g))
//   g < a_p              2^k (phi(n) + (p^g - p + 1) phi(n/p^g))
//
// ICG_n({p, q}), p < q:
//   a_p = 1, a_q = 1          2^k phi(n)
//   p = 2, a_p = 1, a_q >= 2  3 * 2^{k-1} phi(n)
//   p odd, a_p = 1, a_q >= 2  2^{k-1} (2 phi(n) + phi(n/q) phi(q))
//   a_p >= 2, a_q = 1         2^{k-1} (2 phi(n) + phi(n/p) phi(p))
//   a_p >= 2, a_q >= 2        2^{k-1} (2 phi(n) + phi(n/p) phi(p) + phi(n/q) phi(q))

#include <optional>
#include <string>
#include <vector>

#include "icg/graph.hpp"

namespace icg {

enum class ClosedFormFamily { OneAndPrimePower, TwoPrimes };

enum class ClosedFormBranch {
    // {1, p^g}
    PrimeExactlyDivides,
    FullPowerAtLeastSquare,
    PartialPower,
    // {p, q}
    BothExact,
    TwoExactOtherSquare,
    OddExactOtherSquare,
    SquareOtherExact,
    BothSquare,
};

struct ClosedFormCase {
    ClosedFormFamily family;
    ClosedFormBranch branch;
    Int n;
    Int p;
    /// The exponent g for OneAndPrimePower, the prime q for TwoPrimes.
    Int second;

    /// 1-based position of the branch within its family's case list.
    int branch_number() const;
    /// The divisor set the formula describes: {1, p^g} or {p, q}.
    IcgSpec graph() const;

    friend bool operator==(const ClosedFormCase&, const ClosedFormCase&) = default;
};

std::string to_string(ClosedFormFamily family);

/// Throws std::invalid_argument when the parameters are inadmissible:
/// n < 4, p or q not a prime divisor of n, g outside [1, a_p], p^g = n,
/// p >= q.
ClosedFormCase classify_case(Int n, ClosedFormFamily family, Int p, Int second);

Int energy_one_prime_power(Int n, Int p, Int gamma);
Int energy_two_primes(Int n, Int p, Int q);
Int closed_form_energy(const ClosedFormCase& c);

/// Recognizes D = {1, p^g} or D = {p, q}; empty when neither shape applies
/// or the parameters are inadmissible.
std::optional<ClosedFormCase> match_closed_form(const IcgSpec& spec);

struct CrossValidationRow {
    ClosedFormCase formula_case;
    Int formula = 0;
    Int direct = 0;
    bool match = false;
};

/// Every admissible (n, p, g) and (n, p, q) with 4 <= n <= n_max, ordered by
/// n, then family, then parameters.
std::vector<CrossValidationRow> cross_validate(Int n_max);

}  // namespace icg
