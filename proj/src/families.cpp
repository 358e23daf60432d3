#include "icg/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "icg/energy.hpp"

namespace icg {

namespace {

FamilyReport build_family(Int n, std::vector<IcgSpec> members) {
    FamilyReport r;
    r.n = n;
    std::vector<std::vector<Int>> sorted_spectra;
    r.all_hyperenergetic = true;
    for (const auto& m : members) {
        const auto s = spectrum(m);
        const Int e = energy(s);
        r.member_energies.push_back(e);
        r.all_hyperenergetic = r.all_hyperenergetic && e > 2 * n - 2;
        sorted_spectra.push_back(s.sorted());
    }
    r.common_energy = r.member_energies.front();
    r.equal_energy = std::all_of(r.member_energies.begin(), r.member_energies.end(),
                                 [&](Int e) { return e == r.common_energy; });
    const auto size = members.size();
    r.pairwise_cospectral.assign(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            r.pairwise_cospectral[i][j] = sorted_spectra[i] == sorted_spectra[j];
        }
    }
    r.members = std::move(members);
    return r;
}

/// Run-length form of a sorted spectrum; ICG spectra have few distinct values.
std::vector<std::pair<Int, Int>> multiset_key(const Spectrum& s) {
    auto v = s.sorted();
    std::vector<std::pair<Int, Int>> key;
    for (Int x : v) {
        if (!key.empty() && key.back().first == x) {
            ++key.back().second;
        } else {
            key.emplace_back(x, 1);
        }
    }
    return key;
}

}  // namespace

bool FamilyReport::holds() const {
    if (!equal_energy) return false;
    for (std::size_t i = 0; i < pairwise_cospectral.size(); ++i) {
        for (std::size_t j = 0; j < pairwise_cospectral.size(); ++j) {
            if (i != j && pairwise_cospectral[i][j]) return false;
        }
    }
    return true;
}

FamilyReport equienergetic_family(Int n) {
    const auto f = factorize(n);
    std::vector<Int> simple;
    for (const auto& [p, a] : f.factors) {
        if (a == 1) simple.push_back(p);
    }
    if (simple.size() < 2) {
        throw std::invalid_argument("first equienergetic class needs two primes dividing " +
                                    std::to_string(n) + " exactly once");
    }
    std::vector<IcgSpec> members{IcgSpec::validate(n, {1})};
    for (std::size_t i = 0; i < simple.size(); ++i) {
        for (std::size_t j = i + 1; j < simple.size(); ++j) {
            members.push_back(IcgSpec::validate(n, {simple[i], simple[j]}));
        }
    }
    return build_family(n, std::move(members));
}

FamilyReport equienergetic_family_second(Int n) {
    if (n % 4 != 2) {
        throw std::invalid_argument("second equienergetic class needs n = 2 mod 4, got " +
                                    std::to_string(n));
    }
    const auto f = factorize(n);
    std::vector<IcgSpec> members;
    for (const auto& [p, a] : f.factors) {
        if (a >= 2) members.push_back(IcgSpec::validate(n, {2, p}));
    }
    if (members.size() < 2) {
        throw std::invalid_argument("second equienergetic class needs two primes whose square divides " +
                                    std::to_string(n));
    }
    return build_family(n, std::move(members));
}

Int second_spectral_value(Int n, Int p_i, Int p_j) {
    const auto f = factorize(n);
    if (!f.square_free() || f.omega() < 3) {
        throw std::invalid_argument("n must be square-free with at least three prime factors, got " +
                                    std::to_string(n));
    }
    if (p_i == p_j || !is_prime(p_i) || !is_prime(p_j) || n % p_i != 0 || n % p_j != 0) {
        throw std::invalid_argument("p_i and p_j must be distinct primes dividing n");
    }
    const Int m = n / (p_i * p_j);
    const Int r = factorize(m).factors.front().prime;
    const Int phi_m = euler_phi(m);
    const Int phi_r = r - 1;

    // Candidates as fractions num / den; only the first has den != 1.
    const Int first_num = checked::mul(phi_m, p_i + p_j - 2);
    Int best_num = checked::mul(2, phi_m);
    Int best_den = 1;
    for (Int c : {checked::mul(phi_m, p_i - 2), checked::mul(phi_m, p_j - 2)}) {
        if (c > best_num) best_num = c;
    }
    if (first_num > checked::mul(best_num, phi_r)) {
        best_num = first_num;
        best_den = phi_r;
    }
    if (best_num % best_den != 0) {
        throw std::logic_error("second spectral value is not an integer for n = " + std::to_string(n));
    }
    return best_num / best_den;
}

bool cospectral(const IcgSpec& a, const IcgSpec& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("cospectrality compares graphs of equal order, got " +
                                    a.canonical() + " and " + b.canonical());
    }
    return spectrum(a).sorted() == spectrum(b).sorted();
}

SoCheckReport so_conjecture_check(Int n, std::uint64_t budget) {
    SoCheckReport r;
    r.n = n;
    std::map<std::vector<std::pair<Int, Int>>, std::vector<IcgSpec>> groups;
    for_each_divisor_set(n, {false, budget}, [&](const IcgSpec& spec, const Spectrum& s) {
        ++r.sets;
        groups[multiset_key(s)].push_back(spec);
    });
    for (auto& [key, specs] : groups) {
        if (specs.size() < 2) continue;
        std::sort(specs.begin(), specs.end());
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (std::size_t j = i + 1; j < specs.size(); ++j) r.collisions.emplace_back(specs[i], specs[j]);
        }
    }
    std::sort(r.collisions.begin(), r.collisions.end());
    return r;
}

IcgSpec all_odd_divisors_spec(Int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("all-odd-divisors graph needs even n, got " + std::to_string(n));
    }
    std::vector<Int> odd;
    for (Int d : proper_divisors(n)) {
        if (d % 2 != 0) odd.push_back(d);
    }
    return IcgSpec::validate(n, std::move(odd));
}

Spectrum bipartite_extremal_spectrum(Int n) { return spectrum(all_odd_divisors_spec(n)); }

ExtremalReport min_energy_search(Int n, bool connected_only, std::uint64_t budget) {
    ExtremalReport r;
    r.n = n;
    r.connected_only = connected_only;
    bool first = true;
    for_each_divisor_set(n, {connected_only, budget}, [&](const IcgSpec& spec, const Spectrum& s) {
        ++r.sets_examined;
        const Int e = energy(s);
        if (first || e < r.min_energy) {
            first = false;
            r.min_energy = e;
            r.argmin_sets.clear();
        }
        if (e == r.min_energy) r.argmin_sets.push_back(spec);
    });
    std::sort(r.argmin_sets.begin(), r.argmin_sets.end());

    if (n % 2 == 0) {
        r.conjecture_value = n;
        r.predicted_set = all_odd_divisors_spec(n);
    } else {
        const Int p = factorize(n).factors.front().prime;
        r.conjecture_value = 2 * (n - n / p);
        std::vector<Int> prime_to_p;
        for (Int d : proper_divisors(n)) {
            if (d % p != 0) prime_to_p.push_back(d);
        }
        r.predicted_set = IcgSpec::validate(n, std::move(prime_to_p));
    }
    const bool present = std::binary_search(r.argmin_sets.begin(), r.argmin_sets.end(), *r.predicted_set);
    r.conjecture_holds = r.min_energy == *r.conjecture_value && present;
    return r;
}

}  // namespace icg
