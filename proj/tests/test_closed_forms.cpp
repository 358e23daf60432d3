#include <doctest.h>

#include <map>

#include "icg/closed_forms.hpp"
#include "icg/energy.hpp"
#include "icg/oracle.hpp"

using icg::ClosedFormBranch;
using icg::ClosedFormFamily;
using icg::Int;
using icg::IcgSpec;

TEST_CASE("energy_one_prime_power examples") {
    CHECK(icg::energy_one_prime_power(6, 2, 1) == 8);
    CHECK(icg::energy_one_prime_power(4, 2, 1) == 6);
    CHECK(icg::energy_one_prime_power(9, 3, 1) == 16);
    CHECK(icg::energy(IcgSpec::validate(6, {1, 2})) == 8);
    CHECK(icg::energy(IcgSpec::validate(9, {1, 3})) == 16);
}

TEST_CASE("energy_one_prime_power with g >= 2 uses phi(n/p^g)") {
    // phi(n/p) in place of phi(n/p^g) would give 44 here
    CHECK(icg::energy_one_prime_power(18, 3, 2) == 34);
    CHECK(icg::energy(IcgSpec::validate(18, {1, 9})) == 34);
    // 16:1,8 by beta_2 = 4..0: 9 + 7 + 2 + 4 + 8 = 30
    CHECK(icg::energy_one_prime_power(16, 2, 3) == 30);
    CHECK(icg::energy(IcgSpec::validate(16, {1, 8})) == 30);
    CHECK(icg::energy_one_prime_power(8, 2, 2) == 14);
    CHECK(icg::energy(IcgSpec::validate(8, {1, 4})) == 14);
}

TEST_CASE("energy_one_prime_power rejects inadmissible parameters") {
    CHECK_THROWS_AS(icg::energy_one_prime_power(6, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_one_prime_power(12, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_one_prime_power(9, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_one_prime_power(12, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_one_prime_power(12, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_one_prime_power(3, 3, 1), std::invalid_argument);
}

TEST_CASE("energy_two_primes examples") {
    CHECK(icg::energy_two_primes(15, 3, 5) == 32);
    CHECK(icg::energy_two_primes(18, 2, 3) == 36);
    CHECK(icg::energy_two_primes(36, 2, 3) == 76);
    CHECK(icg::energy(IcgSpec::validate(36, {2, 3})) == 76);
}

TEST_CASE("energy_two_primes rejects inadmissible parameters") {
    CHECK_THROWS_AS(icg::energy_two_primes(15, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_two_primes(15, 3, 7), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_two_primes(15, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(icg::energy_two_primes(30, 2, 6), std::invalid_argument);
}

TEST_CASE("classify_case") {
    auto c = icg::classify_case(36, ClosedFormFamily::TwoPrimes, 2, 3);
    CHECK(c.branch == ClosedFormBranch::BothSquare);
    CHECK(c.branch_number() == 5);
    c = icg::classify_case(18, ClosedFormFamily::TwoPrimes, 2, 3);
    CHECK(c.branch == ClosedFormBranch::TwoExactOtherSquare);
    CHECK(c.branch_number() == 2);
    c = icg::classify_case(6, ClosedFormFamily::OneAndPrimePower, 2, 1);
    CHECK(c.branch == ClosedFormBranch::PrimeExactlyDivides);
    CHECK(c.branch_number() == 1);
    CHECK(icg::classify_case(45, ClosedFormFamily::TwoPrimes, 3, 5).branch == ClosedFormBranch::SquareOtherExact);
    CHECK(icg::classify_case(75, ClosedFormFamily::TwoPrimes, 3, 5).branch == ClosedFormBranch::OddExactOtherSquare);
    CHECK(icg::classify_case(27 * 2, ClosedFormFamily::OneAndPrimePower, 3, 3).branch ==
          ClosedFormBranch::FullPowerAtLeastSquare);
    CHECK(icg::classify_case(27 * 2, ClosedFormFamily::OneAndPrimePower, 3, 2).branch ==
          ClosedFormBranch::PartialPower);
}

TEST_CASE("match_closed_form recognises both shapes") {
    auto c = icg::match_closed_form(IcgSpec::validate(12, {1, 4}));
    REQUIRE(c);
    CHECK(c->family == ClosedFormFamily::OneAndPrimePower);
    CHECK(c->p == 2);
    CHECK(c->second == 2);
    c = icg::match_closed_form(IcgSpec::validate(30, {3, 5}));
    REQUIRE(c);
    CHECK(c->family == ClosedFormFamily::TwoPrimes);
    CHECK_FALSE(icg::match_closed_form(IcgSpec::validate(12, {1, 6})));
    CHECK_FALSE(icg::match_closed_form(IcgSpec::validate(12, {1})));
    CHECK_FALSE(icg::match_closed_form(IcgSpec::validate(12, {2, 4})));
}

TEST_CASE("anchor energies agree with the trigonometric oracle") {
    const std::vector<std::pair<IcgSpec, Int>> anchors{
        {IcgSpec::validate(6, {1, 2}), 8},   {IcgSpec::validate(4, {1, 2}), 6},
        {IcgSpec::validate(9, {1, 3}), 16},  {IcgSpec::validate(15, {3, 5}), 32},
        {IcgSpec::validate(18, {2, 3}), 36}, {IcgSpec::validate(36, {2, 3}), 76},
    };
    for (const auto& [spec, expected] : anchors) {
        double trig_energy = 0.0;
        for (double v : icg::spectrum_trig(spec)) trig_energy += std::abs(v);
        CHECK(trig_energy == doctest::Approx(static_cast<double>(expected)).epsilon(1e-9));
        CHECK(icg::energy(spec) == expected);
        const auto c = icg::match_closed_form(spec);
        REQUIRE(c);
        CHECK(icg::closed_form_energy(*c) == expected);
    }
}

TEST_CASE("formula equals direct energy for every admissible case, n <= 500") {
    const auto rows = icg::cross_validate(500);
    std::map<std::pair<int, int>, int> branch_hits;
    for (const auto& row : rows) {
        INFO(row.formula_case.n << " p=" << row.formula_case.p << " second=" << row.formula_case.second);
        REQUIRE(row.match);
        const auto again = icg::classify_case(row.formula_case.n, row.formula_case.family, row.formula_case.p,
                                              row.formula_case.second);
        REQUIRE(again == row.formula_case);
        ++branch_hits[{static_cast<int>(row.formula_case.family), row.formula_case.branch_number()}];
    }
    // every branch of both families is exercised
    CHECK(branch_hits.size() == 8);
}

TEST_CASE("cross_validate small limits") {
    const auto rows = icg::cross_validate(6);
    bool saw = false;
    for (const auto& row : rows) {
        if (row.formula_case.n == 6 && row.formula_case.family == ClosedFormFamily::OneAndPrimePower &&
            row.formula_case.p == 2) {
            saw = true;
            CHECK(row.formula == 8);
            CHECK(row.match);
        }
    }
    CHECK(saw);
    for (const auto& row : icg::cross_validate(36)) {
        if (row.formula_case.n == 36 && row.formula_case.family == ClosedFormFamily::TwoPrimes) {
            CHECK(row.direct == 76);
            CHECK(row.match);
        }
    }
}

TEST_CASE("two-prime energy does not depend on the choice of exactly dividing primes") {
    for (Int n = 4; n <= 500; ++n) {
        const auto f = icg::factorize(n);
        std::vector<Int> simple;
        for (const auto& [p, a] : f.factors) {
            if (a == 1) simple.push_back(p);
        }
        if (simple.size() < 2) continue;
        const Int expected = icg::energy_two_primes(n, simple[0], simple[1]);
        for (std::size_t i = 0; i < simple.size(); ++i) {
            for (std::size_t j = i + 1; j < simple.size(); ++j) {
                REQUIRE(icg::energy_two_primes(n, simple[i], simple[j]) == expected);
            }
        }
    }
}

TEST_CASE("branch conditions are mutually exclusive and exhaustive") {
    for (Int n = 4; n <= 500; ++n) {
        const auto f = icg::factorize(n);
        for (const auto& [p, a] : f.factors) {
            for (int g = 1; g <= a; ++g) {
                if (icg::checked::pow(p, static_cast<unsigned>(g)) == n) continue;
                const bool exact_prime = a == 1;
                const bool exact_power = g == a && g >= 2;
                const bool partial = g < a;
                REQUIRE(exact_prime + exact_power + partial == 1);
                const int expected = exact_prime ? 1 : exact_power ? 2 : 3;
                REQUIRE(icg::classify_case(n, ClosedFormFamily::OneAndPrimePower, p, g).branch_number() ==
                        expected);
            }
        }
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
                const auto [p, ap] = f.factors[i];
                const auto [q, aq] = f.factors[j];
                const bool conditions[5] = {
                    ap == 1 && aq == 1,
                    p == 2 && ap == 1 && aq >= 2,
                    ap == 1 && aq >= 2 && p != 2,
                    ap >= 2 && aq == 1,
                    ap >= 2 && aq >= 2,
                };
                int hits = 0;
                int which = 0;
                for (int b = 0; b < 5; ++b) {
                    if (conditions[b]) {
                        ++hits;
                        which = b + 1;
                    }
                }
                REQUIRE(hits == 1);
                REQUIRE(icg::classify_case(n, ClosedFormFamily::TwoPrimes, p, q).branch_number() == which);
            }
        }
    }
}
