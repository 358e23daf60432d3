#pragma once

// Exact arithmetic functions: checked 64-bit operations, factorization,
// Euler's totient, the Moebius function, divisors and Ramanujan sums.
//
// Every function throws std::invalid_argument on a domain error (n = 0 and
// friends) and std::overflow_error whenever an intermediate would not fit in
// a signed 64-bit integer.

#include <cstdint>
#include <utility>
#include <vector>

namespace icg {

using Int = std::int64_t;

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int pow(Int base, unsigned exponent);

}  // namespace checked

struct PrimePower {
    Int prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization n = p_1^a_1 ... p_k^a_k with p_1 < ... < p_k.
/// `factors` is empty exactly when n = 1.
struct Factorization {
    Int n = 1;
    std::vector<PrimePower> factors;

    /// Number of distinct prime factors.
    int omega() const { return static_cast<int>(factors.size()); }
    /// Exponent of `p` in n (0 when p does not divide n).
    int exponent_of(Int p) const;
    bool square_free() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

Int gcd(Int a, Int b);
bool is_prime(Int n);

/// Trial division up to sqrt(n).
Factorization factorize(Int n);

Int euler_phi(Int n);
Int euler_phi(const Factorization& f);

int mobius(Int n);
int mobius(const Factorization& f);

/// All positive divisors of n in increasing order (including 1 and n).
std::vector<Int> divisors(Int n);

/// Ramanujan sum c(k, n) = sum over units a mod n of cos(2 pi a k / n),
/// evaluated exactly through mu(t) * phi(n) / phi(t) with t = n / gcd(k, n).
/// k is reduced mod n first, so negative k is accepted.
Int ramanujan(Int k, Int n);

}  // namespace icg
