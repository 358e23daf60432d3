#pragma once

// Independent checks on the exact spectrum: floating-point circulant
// eigenvalues, spectral moments with the quadrangle count they imply, and
// energy lower bounds for regular graphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "icg/graph.hpp"

namespace icg {

inline constexpr Int kMaxTrigOrder = 100000;
inline constexpr double kDefaultSpectrumTolerance = 1e-6;

/// lambda_j = sum over s in S of cos(2 pi j s / n), summed in ascending s.
/// The sine parts cancel because S is closed under s -> n - s.
/// Throws std::length_error above kMaxTrigOrder.
std::vector<double> spectrum_trig(const IcgSpec& spec);

/// Per gcd class: column(i)[j] = sum over s with gcd(s, n) = divisors()[i]
/// of cos(2 pi j s / n). The trig spectrum of ICG_n(D) is the sum of the
/// columns of D, since S is the disjoint union of its gcd classes.
class TrigClassColumns {
public:
    explicit TrigClassColumns(Int n);

    Int n() const { return n_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    const std::vector<double>& column(std::size_t index) const { return columns_[index]; }

    std::vector<double> spectrum(const IcgSpec& spec) const;

private:
    Int n_;
    std::vector<Int> divisors_;
    std::vector<std::vector<double>> columns_;
};

struct SpectrumComparison {
    double max_deviation = 0.0;
    bool pass = true;
    std::optional<std::size_t> first_failure;
};

/// Pass iff |exact_j - approx_j| <= tol for every j. Throws
/// std::invalid_argument on a length mismatch.
SpectrumComparison compare_spectra(const Spectrum& exact, const std::vector<double>& approx,
                                   double tol = kDefaultSpectrumTolerance);

/// Spectral moments M2, M4, edge count m and the quadrangle count q solved
/// from M4 = 8q - 2m + 2 * sum_v deg(v)^2.
struct MomentReport {
    Int n = 0;
    Int edges = 0;
    Int m2 = 0;
    Int m4 = 0;
    Int quadrangles = 0;
};

/// Throws std::logic_error if the identity yields a non-integer or negative q.
MomentReport moments(const IcgSpec& spec);

struct EnergyLowerBounds {
    /// M2^2 / sqrt(M2 * M4)
    double moment_bound = 0.0;
    /// n, valid for any regular graph of positive degree.
    Int regular_bound = 0;
    Int m2 = 0;
    Int m4 = 0;

    /// energy >= M2^2 / sqrt(M2 M4), decided exactly as energy^2 * M4 >= M2^3.
    bool moment_bound_holds(Int energy) const;
};

EnergyLowerBounds energy_lower_bounds(const IcgSpec& spec);

}  // namespace icg
