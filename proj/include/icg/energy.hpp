#pragma once

#include <optional>

#include "icg/graph.hpp"

namespace icg {

/// Sum of |lambda_j| over the exact spectrum.
Int energy(const IcgSpec& spec);
Int energy(const Spectrum& spectrum);

/// lambda_{n/2} = sum over d in D of (-1)^d phi(n / d). Throws
/// std::invalid_argument for odd n.
Int lambda_half(const IcgSpec& spec);

/// Predicted energy mod 4.
///
/// Odd n: always 0. Even n: 2 exactly when n/2 is in D and lambda_{n/2} < 0,
/// otherwise 0. When n/2 is not in D the energy is always divisible by four;
/// a negative lambda_{n/2} alone does not matter: ICG_6({1}) has
/// lambda_3 = -2 and energy 8.
int mod4_predicted(const IcgSpec& spec);
int mod4_predicted(const IcgSpec& spec, const Spectrum& spectrum);

/// energy > 2n - 2, the energy of K_n.
bool hyperenergetic(const IcgSpec& spec);

struct EnergyReport {
    IcgSpec spec;
    Int energy = 0;
    int residue4 = 0;
    int predicted4 = 0;
    std::optional<Int> lambda_half;
    bool half_in_d = false;
    bool hyperenergetic = false;

    bool conforms() const { return residue4 == predicted4; }
};

EnergyReport energy_report(const IcgSpec& spec);
/// Same, reusing an already computed spectrum of `spec`.
EnergyReport energy_report(const IcgSpec& spec, const Spectrum& spectrum);

}  // namespace icg
