#pragma once

// Integral circulant graphs ICG_n(D): vertices Z_n, a ~ b iff gcd(a - b, n) is in D.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icg/numt.hpp"

namespace icg {

/// A validated (n, D): n >= 2, D a nonempty ascending set of divisors d of n
/// with 1 <= d < n. Equality and ordering are by (n, D).
class IcgSpec {
public:
    /// Throws std::invalid_argument describing the first violated rule.
    /// D may be given in any order; duplicates are rejected, not merged.
    static IcgSpec validate(Int n, std::vector<Int> divisors);

    /// Parses the canonical text form "n:d1,d2,...,dk". Divisors must be
    /// strictly ascending.
    static IcgSpec parse(std::string_view text);

    Int n() const { return n_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    bool contains(Int d) const;

    /// "n:d1,d2,...,dk"
    std::string canonical() const;

    friend bool operator==(const IcgSpec&, const IcgSpec&) = default;
    friend auto operator<=>(const IcgSpec&, const IcgSpec&) = default;

private:
    IcgSpec(Int n, std::vector<Int> divisors) : n_(n), divisors_(std::move(divisors)) {}

    Int n_;
    std::vector<Int> divisors_;
};

inline IcgSpec validate(Int n, std::vector<Int> divisors) {
    return IcgSpec::validate(n, std::move(divisors));
}

/// Eigenvalues stored by index: values[j] = lambda_j. Sorting is a view.
struct Spectrum {
    Int n = 0;
    std::vector<Int> values;

    std::vector<Int> sorted() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(Int order) : order_(order), cells_(order * order, 0) {}

    Int order() const { return order_; }
    bool operator()(Int row, Int col) const { return cells_[row * order_ + col] != 0; }
    void set(Int row, Int col, bool value) { cells_[row * order_ + col] = value ? 1 : 0; }

private:
    Int order_;
    std::vector<std::uint8_t> cells_;
};

inline constexpr Int kMaxDenseOrder = 20000;

/// Union of the gcd classes {s : gcd(s, n) = d, 1 <= s < n} over d in D, ascending.
std::vector<Int> symbol_set(const IcgSpec& spec);

/// Dense adjacency. Throws std::length_error above kMaxDenseOrder.
AdjacencyMatrix adjacency(const IcgSpec& spec);

/// Common vertex degree, sum over d in D of phi(n / d). Equals lambda_0.
Int degree(const IcgSpec& spec);

/// lambda_k = sum over d in D of c(k, n / d).
Spectrum spectrum(const IcgSpec& spec);

/// gcd of D, which is the number of connected components.
Int connectivity(const IcgSpec& spec);

struct ComponentDecomposition {
    Int count;
    IcgSpec quotient;
};

/// ICG_n(D) with gcd(D) = d is d disjoint copies of ICG_{n/d}(D/d).
/// Throws std::invalid_argument if n / d < 2.
ComponentDecomposition component_decomposition(const IcgSpec& spec);

// ---------------------------------------------------------------------------
// Exhaustive enumeration over divisor sets.

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 20;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Int n, std::uint64_t required, std::uint64_t budget);

    Int n() const { return n_; }
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    Int n_;
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Divisors d of n with 1 <= d < n.
std::vector<Int> proper_divisors(Int n);

/// Number of nonempty divisor sets for n, 2^{tau(n) - 1} - 1.
std::uint64_t divisor_set_count(Int n);

/// Throws BudgetExceeded if enumerating every divisor set of n would exceed `budget`.
void check_budget(Int n, std::uint64_t budget);

/// Table of c(k, n / d) for every proper divisor d of n and 0 <= k < n.
/// Adding the columns of the divisors in D yields the spectrum of ICG_n(D).
class RamanujanColumns {
public:
    explicit RamanujanColumns(Int n);

    Int n() const { return n_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    const std::vector<Int>& column(std::size_t index) const { return columns_[index]; }

private:
    Int n_;
    std::vector<Int> divisors_;
    std::vector<std::vector<Int>> columns_;
};

struct EnumerationOptions {
    bool connected_only = false;
    std::uint64_t budget = kDefaultSubsetBudget;
};

using DivisorSetVisitor = std::function<void(const IcgSpec&, const Spectrum&)>;

/// Visits every nonempty divisor set of n (every connected one when
/// `connected_only`) together with its spectrum. Visiting order follows a
/// binary reflected Gray code over the proper divisors and is deterministic;
/// each step updates the spectrum by adding or removing one column.
/// Throws BudgetExceeded before visiting anything if the subset count
/// exceeds the budget.
void for_each_divisor_set(Int n, const EnumerationOptions& options, const DivisorSetVisitor& visit);

}  // namespace icg
