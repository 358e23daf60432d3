#include "icg/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace icg {

namespace {

void guard_trig_order(Int n) {
    if (n > kMaxTrigOrder) {
        throw std::length_error("trigonometric oracle refused for n = " + std::to_string(n) +
                                " (limit " + std::to_string(kMaxTrigOrder) + ")");
    }
}

std::vector<double> cosine_table(Int n) {
    std::vector<double> table(n);
    for (Int r = 0; r < n; ++r) {
        table[r] = std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    }
    return table;
}

}  // namespace

std::vector<double> spectrum_trig(const IcgSpec& spec) {
    const Int n = spec.n();
    guard_trig_order(n);
    const auto table = cosine_table(n);
    const auto symbols = symbol_set(spec);
    std::vector<double> out(n, 0.0);
    for (Int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (Int s : symbols) acc += table[(j * s) % n];
        out[j] = acc;
    }
    return out;
}

TrigClassColumns::TrigClassColumns(Int n) : n_(n), divisors_(proper_divisors(n)) {
    guard_trig_order(n);
    const auto table = cosine_table(n);
    columns_.assign(divisors_.size(), std::vector<double>(n, 0.0));
    std::vector<std::size_t> slot(n + 1, 0);
    for (std::size_t i = 0; i < divisors_.size(); ++i) slot[divisors_[i]] = i;
    for (Int s = 1; s < n; ++s) {
        auto& col = columns_[slot[gcd(s, n)]];
        for (Int j = 0; j < n; ++j) col[j] += table[(j * s) % n];
    }
}

std::vector<double> TrigClassColumns::spectrum(const IcgSpec& spec) const {
    if (spec.n() != n_) throw std::invalid_argument("trig columns built for a different n");
    std::vector<double> out(n_, 0.0);
    std::size_t i = 0;
    for (Int d : spec.divisors()) {
        while (divisors_[i] != d) ++i;
        const auto& col = columns_[i];
        for (Int j = 0; j < n_; ++j) out[j] += col[j];
    }
    return out;
}

SpectrumComparison compare_spectra(const Spectrum& exact, const std::vector<double>& approx, double tol) {
    if (exact.values.size() != approx.size()) {
        throw std::invalid_argument("spectrum length mismatch: " + std::to_string(exact.values.size()) +
                                    " vs " + std::to_string(approx.size()));
    }
    SpectrumComparison cmp;
    for (std::size_t j = 0; j < approx.size(); ++j) {
        const double dev = std::abs(static_cast<double>(exact.values[j]) - approx[j]);
        if (dev > cmp.max_deviation) cmp.max_deviation = dev;
        if (!(dev <= tol) && !cmp.first_failure) {
            cmp.first_failure = j;
            cmp.pass = false;
        }
    }
    return cmp;
}

MomentReport moments(const IcgSpec& spec) {
    const auto spec_values = spectrum(spec);
    MomentReport r;
    r.n = spec.n();
    for (Int lambda : spec_values.values) {
        const Int sq = checked::mul(lambda, lambda);
        r.m2 = checked::add(r.m2, sq);
        r.m4 = checked::add(r.m4, checked::mul(sq, sq));
    }
    const Int deg = spec_values.values.front();
    r.edges = checked::mul(r.n, deg) / 2;
    const Int sum_deg_sq = checked::mul(r.n, checked::mul(deg, deg));
    // 8q = M4 + 2m - 2 * sum deg^2
    const Int eight_q = checked::sub(checked::add(r.m4, checked::mul(2, r.edges)), checked::mul(2, sum_deg_sq));
    if (eight_q < 0 || eight_q % 8 != 0) {
        throw std::logic_error("moment identity gives 8q = " + std::to_string(eight_q) + " for " +
                               spec.canonical());
    }
    r.quadrangles = eight_q / 8;
    return r;
}

bool EnergyLowerBounds::moment_bound_holds(Int energy) const {
    __extension__ using Wide = __int128;
    const Wide e = energy;
    const Wide lhs = e * e * static_cast<Wide>(m4);
    const Wide rhs = static_cast<Wide>(m2) * m2 * m2;
    return lhs >= rhs;
}

EnergyLowerBounds energy_lower_bounds(const IcgSpec& spec) {
    const auto mr = moments(spec);
    EnergyLowerBounds b;
    b.m2 = mr.m2;
    b.m4 = mr.m4;
    b.regular_bound = spec.n();
    const double m2 = static_cast<double>(mr.m2);
    b.moment_bound = m2 * m2 / std::sqrt(m2 * static_cast<double>(mr.m4));
    return b;
}

}  // namespace icg
