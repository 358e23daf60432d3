#include "icg/closed_forms.hpp"

#include <stdexcept>

#include "icg/energy.hpp"

namespace icg {

namespace {

[[noreturn]] void inadmissible(const std::string& message) { throw std::invalid_argument(message); }

void require_prime_divisor(Int n, Int p) {
    if (!is_prime(p)) inadmissible(std::to_string(p) + " is not prime");
    if (n % p != 0) inadmissible(std::to_string(p) + " does not divide " + std::to_string(n));
}

}  // namespace

int ClosedFormCase::branch_number() const {
    switch (branch) {
        case ClosedFormBranch::PrimeExactlyDivides: return 1;
        case ClosedFormBranch::FullPowerAtLeastSquare: return 2;
        case ClosedFormBranch::PartialPower: return 3;
        case ClosedFormBranch::BothExact: return 1;
        case ClosedFormBranch::TwoExactOtherSquare: return 2;
        case ClosedFormBranch::OddExactOtherSquare: return 3;
        case ClosedFormBranch::SquareOtherExact: return 4;
        case ClosedFormBranch::BothSquare: return 5;
    }
    return 0;
}

IcgSpec ClosedFormCase::graph() const {
    if (family == ClosedFormFamily::OneAndPrimePower) {
        return IcgSpec::validate(n, {1, checked::pow(p, static_cast<unsigned>(second))});
    }
    return IcgSpec::validate(n, {p, second});
}

std::string to_string(ClosedFormFamily family) {
    return family == ClosedFormFamily::OneAndPrimePower ? "one_and_prime_power" : "two_primes";
}

ClosedFormCase classify_case(Int n, ClosedFormFamily family, Int p, Int second) {
    if (n < 4) inadmissible("closed forms require n >= 4, got " + std::to_string(n));
    require_prime_divisor(n, p);
    const auto f = factorize(n);
    const int ap = f.exponent_of(p);

    if (family == ClosedFormFamily::OneAndPrimePower) {
        const Int gamma = second;
        if (gamma < 1) inadmissible("exponent must be at least 1");
        if (gamma > ap) {
            inadmissible(std::to_string(p) + "^" + std::to_string(gamma) + " does not divide " +
                         std::to_string(n));
        }
        if (checked::pow(p, static_cast<unsigned>(gamma)) == n) {
            inadmissible("p^g equals n; divisor sets hold proper divisors only");
        }
        ClosedFormBranch branch = ClosedFormBranch::PartialPower;
        if (ap == 1) {
            branch = ClosedFormBranch::PrimeExactlyDivides;
        } else if (gamma == ap) {
            branch = ClosedFormBranch::FullPowerAtLeastSquare;
        }
        return {family, branch, n, p, gamma};
    }

    const Int q = second;
    require_prime_divisor(n, q);
    if (p == q) inadmissible("the two primes must be distinct");
    if (p > q) inadmissible("primes must be given in ascending order");
    const int aq = f.exponent_of(q);
    ClosedFormBranch branch;
    if (ap == 1 && aq == 1) {
        branch = ClosedFormBranch::BothExact;
    } else if (ap == 1 && p == 2) {
        branch = ClosedFormBranch::TwoExactOtherSquare;
    } else if (ap == 1) {
        branch = ClosedFormBranch::OddExactOtherSquare;
    } else if (aq == 1) {
        branch = ClosedFormBranch::SquareOtherExact;
    } else {
        branch = ClosedFormBranch::BothSquare;
    }
    return {family, branch, n, p, q};
}

Int closed_form_energy(const ClosedFormCase& c) {
    using namespace checked;
    const Int n = c.n;
    const Int p = c.p;
    const auto f = factorize(n);
    const Int pow2_k_minus_1 = pow(2, static_cast<unsigned>(f.omega() - 1));
    const Int phi_n = euler_phi(f);
    const Int phi_n_p = euler_phi(n / p);

    switch (c.branch) {
        case ClosedFormBranch::PrimeExactlyDivides:
            return mul(pow2_k_minus_1, add(phi_n, phi_n_p));
        // the cofactor is phi(n/p^g); phi(n/p) only agrees when g = 1
        case ClosedFormBranch::FullPowerAtLeastSquare: {
            const Int pg = pow(p, static_cast<unsigned>(c.second));
            const Int phi_cof = euler_phi(n / pg);
            return mul(pow2_k_minus_1, add(mul(2, phi_n), mul(add(sub(pg, mul(2, p)), 2), phi_cof)));
        }
        case ClosedFormBranch::PartialPower: {
            const Int pg = pow(p, static_cast<unsigned>(c.second));
            const Int phi_cof = euler_phi(n / pg);
            return mul(mul(2, pow2_k_minus_1), add(phi_n, mul(add(sub(pg, p), 1), phi_cof)));
        }
        default:
            break;
    }

    const Int q = c.second;
    const Int p_term = mul(phi_n_p, euler_phi(p));
    const Int q_term = mul(euler_phi(n / q), euler_phi(q));
    switch (c.branch) {
        case ClosedFormBranch::BothExact:
            return mul(mul(2, pow2_k_minus_1), phi_n);
        case ClosedFormBranch::TwoExactOtherSquare:
            return mul(mul(3, pow2_k_minus_1), phi_n);
        case ClosedFormBranch::OddExactOtherSquare:
            return mul(pow2_k_minus_1, add(mul(2, phi_n), q_term));
        case ClosedFormBranch::SquareOtherExact:
            return mul(pow2_k_minus_1, add(mul(2, phi_n), p_term));
        case ClosedFormBranch::BothSquare:
            return mul(pow2_k_minus_1, add(add(mul(2, phi_n), p_term), q_term));
        default:
            break;
    }
    throw std::logic_error("unhandled closed-form branch");
}

Int energy_one_prime_power(Int n, Int p, Int gamma) {
    return closed_form_energy(classify_case(n, ClosedFormFamily::OneAndPrimePower, p, gamma));
}

Int energy_two_primes(Int n, Int p, Int q) {
    return closed_form_energy(classify_case(n, ClosedFormFamily::TwoPrimes, p, q));
}

std::optional<ClosedFormCase> match_closed_form(const IcgSpec& spec) {
    const auto& ds = spec.divisors();
    if (ds.size() != 2) return std::nullopt;
    try {
        if (ds[0] == 1) {
            const auto f = factorize(ds[1]);
            if (f.omega() != 1) return std::nullopt;
            return classify_case(spec.n(), ClosedFormFamily::OneAndPrimePower, f.factors[0].prime,
                                 f.factors[0].exponent);
        }
        if (is_prime(ds[0]) && is_prime(ds[1])) {
            return classify_case(spec.n(), ClosedFormFamily::TwoPrimes, ds[0], ds[1]);
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<CrossValidationRow> cross_validate(Int n_max) {
    std::vector<CrossValidationRow> rows;
    auto record = [&rows](const ClosedFormCase& c) {
        CrossValidationRow row{c};
        row.formula = closed_form_energy(c);
        row.direct = energy(c.graph());
        row.match = row.formula == row.direct;
        rows.push_back(row);
    };
    for (Int n = 4; n <= n_max; ++n) {
        const auto f = factorize(n);
        for (const auto& [p, a] : f.factors) {
            for (int g = 1; g <= a; ++g) {
                if (checked::pow(p, static_cast<unsigned>(g)) == n) continue;
                record(classify_case(n, ClosedFormFamily::OneAndPrimePower, p, g));
            }
        }
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
                record(classify_case(n, ClosedFormFamily::TwoPrimes, f.factors[i].prime,
                                     f.factors[j].prime));
            }
        }
    }
    return rows;
}

}  // namespace icg
