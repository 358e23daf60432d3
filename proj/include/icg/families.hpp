#pragma once

// Equienergetic non-cospectral families, cospectrality checks over all
// divisor sets, and minimal-energy searches.

#include <optional>
#include <utility>
#include <vector>

#include "icg/graph.hpp"

namespace icg {

struct FamilyReport {
    Int n = 0;
    std::vector<IcgSpec> members;
    std::vector<Int> member_energies;
    /// Energy of the first member; equal to every member's when `equal_energy`.
    Int common_energy = 0;
    bool equal_energy = false;
    /// Symmetric, true on the diagonal.
    std::vector<std::vector<bool>> pairwise_cospectral;
    bool all_hyperenergetic = false;

    /// Common energy and no two distinct members cospectral.
    bool holds() const;
};

/// ICG_n({1}) together with ICG_n({p, q}) for every pair p < q of primes
/// dividing n exactly once. Throws std::invalid_argument when fewer than two
/// such primes exist.
FamilyReport equienergetic_family(Int n);

/// ICG_n({2, p}) for every prime p with p^2 | n; requires n = 2 mod 4 and at
/// least two such primes, otherwise std::invalid_argument.
FamilyReport equienergetic_family_second(Int n);

/// Largest |lambda_j| over 1 <= j <= n - 1 for ICG_n({p_i, p_j}), n square-free
/// with at least three prime factors:
///   phi(m) * max{(p_i + p_j - 2) / phi(r), p_i - 2, p_j - 2, 2},
/// m = n / (p_i p_j), r the smallest prime factor of m.
Int second_spectral_value(Int n, Int p_i, Int p_j);

/// Equal spectrum multisets. Throws std::invalid_argument when n differs.
bool cospectral(const IcgSpec& a, const IcgSpec& b);

struct SoCheckReport {
    Int n = 0;
    std::uint64_t sets = 0;
    /// Pairs of distinct divisor sets with equal spectra, ordered.
    std::vector<std::pair<IcgSpec, IcgSpec>> collisions;

    bool verified() const { return collisions.empty(); }
};

/// Throws BudgetExceeded when 2^{tau(n)-1} - 1 > budget.
SoCheckReport so_conjecture_check(Int n, std::uint64_t budget = kDefaultSubsetBudget);

struct ExtremalReport {
    Int n = 0;
    bool connected_only = true;
    std::uint64_t sets_examined = 0;
    Int min_energy = 0;
    /// Every minimizer, in lexicographic order of the divisor sequence.
    std::vector<IcgSpec> argmin_sets;
    /// Even n: n. Odd n: 2n(1 - 1/p), p the smallest prime factor.
    std::optional<Int> conjecture_value;
    /// Even n: all odd proper divisors. Odd n: proper divisors prime to p.
    std::optional<IcgSpec> predicted_set;
    std::optional<bool> conjecture_holds;
};

ExtremalReport min_energy_search(Int n, bool connected_only = true,
                                 std::uint64_t budget = kDefaultSubsetBudget);

/// ICG_n(D*) with D* the odd proper divisors of an even n.
IcgSpec all_odd_divisors_spec(Int n);

/// Spectrum of ICG_n(D*): n/2 at index 0, -n/2 at index n/2, zero elsewhere.
/// Throws std::invalid_argument for odd n.
Spectrum bipartite_extremal_spectrum(Int n);

}  // namespace icg
