#include "icg/energy.hpp"

#include <stdexcept>
#include <string>

namespace icg {

Int energy(const Spectrum& spectrum) {
    Int total = 0;
    for (Int lambda : spectrum.values) total = checked::add(total, lambda < 0 ? -lambda : lambda);
    return total;
}

Int energy(const IcgSpec& spec) { return energy(spectrum(spec)); }

Int lambda_half(const IcgSpec& spec) {
    if (spec.n() % 2 != 0) {
        throw std::invalid_argument("lambda_{n/2} requires even n, got " + std::to_string(spec.n()));
    }
    Int total = 0;
    for (Int d : spec.divisors()) {
        const Int phi = euler_phi(spec.n() / d);
        total = checked::add(total, d % 2 == 0 ? phi : -phi);
    }
    return total;
}

int mod4_predicted(const IcgSpec& spec, const Spectrum& spectrum) {
    const Int n = spec.n();
    if (n % 2 != 0) return 0;
    return spec.contains(n / 2) && spectrum.values[n / 2] < 0 ? 2 : 0;
}

int mod4_predicted(const IcgSpec& spec) {
    if (spec.n() % 2 != 0) return 0;
    return spec.contains(spec.n() / 2) && lambda_half(spec) < 0 ? 2 : 0;
}

bool hyperenergetic(const IcgSpec& spec) { return energy(spec) > 2 * spec.n() - 2; }

EnergyReport energy_report(const IcgSpec& spec, const Spectrum& spectrum) {
    EnergyReport r{spec, 0, 0, 0, std::nullopt, false, false};
    r.energy = energy(spectrum);
    r.residue4 = static_cast<int>(r.energy % 4);
    r.predicted4 = mod4_predicted(spec, spectrum);
    if (spec.n() % 2 == 0) {
        r.lambda_half = spectrum.values[spec.n() / 2];
        r.half_in_d = spec.contains(spec.n() / 2);
    }
    r.hyperenergetic = r.energy > 2 * spec.n() - 2;
    return r;
}

EnergyReport energy_report(const IcgSpec& spec) { return energy_report(spec, spectrum(spec)); }

}  // namespace icg
