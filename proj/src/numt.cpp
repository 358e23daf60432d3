#include "icg/numt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icg {

namespace checked {

Int add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

Int sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

Int mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

Int pow(Int base, unsigned exponent) {
    Int r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        r = mul(r, base);
    }
    return r;
}

}  // namespace checked

namespace {

void require_positive(Int n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": argument must be positive, got " +
                                    std::to_string(n));
    }
}

}  // namespace

int Factorization::exponent_of(Int p) const {
    for (const auto& pp : factors) {
        if (pp.prime == p) return pp.exponent;
    }
    return 0;
}

bool Factorization::square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Factorization factorize(Int n) {
    require_positive(n, "factorize");
    Factorization f;
    f.n = n;
    Int m = n;
    for (Int p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

Int euler_phi(const Factorization& f) {
    Int r = 1;
    for (const auto& [p, e] : f.factors) {
        r = checked::mul(r, checked::mul(checked::pow(p, static_cast<unsigned>(e - 1)), p - 1));
    }
    return r;
}

Int euler_phi(Int n) { return euler_phi(factorize(n)); }

int mobius(const Factorization& f) {
    if (!f.square_free()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(Int n) { return mobius(factorize(n)); }

std::vector<Int> divisors(Int n) {
    require_positive(n, "divisors");
    std::vector<Int> small;
    std::vector<Int> large;
    for (Int d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int ramanujan(Int k, Int n) {
    require_positive(n, "ramanujan");
    Int r = k % n;
    if (r < 0) r += n;
    const Int t = n / gcd(r, n);
    const auto ft = factorize(t);
    const int mu = mobius(ft);
    if (mu == 0) return 0;
    return mu * (euler_phi(n) / euler_phi(ft));
}

}  // namespace icg
