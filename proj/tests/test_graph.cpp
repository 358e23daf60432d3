#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

#include "icg/graph.hpp"
#include "oracles.hpp"

using icg::Int;
using icg::IcgSpec;

namespace {

std::vector<Int> eigen_dense_eigenvalues(const icg::AdjacencyMatrix& a) {
    const Int n = a.order();
    Eigen::MatrixXd m(n, n);
    for (Int i = 0; i < n; ++i) {
        for (Int j = 0; j < n; ++j) m(i, j) = a(i, j) ? 1.0 : 0.0;
    }
    // QR iteration stalls on 60:1,3,4,5,6,12,20; a half-integer shift unsticks it
    double shift = 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        shift = 0.5;
        solver.compute(m + shift * Eigen::MatrixXd::Identity(n, n), Eigen::EigenvaluesOnly);
    }
    REQUIRE(solver.info() == Eigen::Success);
    std::vector<Int> out;
    for (Int i = 0; i < n; ++i) {
        const double v = solver.eigenvalues()(i) - shift;
        REQUIRE(std::abs(v - std::round(v)) < 1e-6);
        out.push_back(std::llround(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("validate") {
    const auto s = IcgSpec::validate(6, {3, 1});
    CHECK(s.n() == 6);
    CHECK(s.divisors() == std::vector<Int>{1, 3});
    CHECK(s.canonical() == "6:1,3");
    CHECK_THROWS_WITH_AS(IcgSpec::validate(6, {4}), "4 does not divide 6", std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {6}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {12}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {0}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(6, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::validate(1, {1}), std::invalid_argument);
}

TEST_CASE("canonical text form") {
    CHECK(IcgSpec::parse("12:2,4") == IcgSpec::validate(12, {2, 4}));
    CHECK(IcgSpec::parse("12:2,4").canonical() == "12:2,4");
    CHECK_THROWS_AS(IcgSpec::parse("12:4,2"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12:2,2"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12:"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12:2,,4"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("x:1"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12:+1"), std::invalid_argument);
    CHECK_THROWS_AS(IcgSpec::parse("12:5"), std::invalid_argument);
}

TEST_CASE("symbol_set") {
    CHECK(icg::symbol_set(IcgSpec::validate(6, {1})) == std::vector<Int>{1, 5});
    CHECK(icg::symbol_set(IcgSpec::validate(4, {1, 2})) == std::vector<Int>{1, 2, 3});
    CHECK(icg::symbol_set(IcgSpec::validate(6, {1, 3})) == std::vector<Int>{1, 3, 5});
    for (const auto& D : oracle::all_divisor_sets(36)) {
        const auto spec = IcgSpec::validate(36, D);
        const auto s = icg::symbol_set(spec);
        std::set<Int> members(s.begin(), s.end());
        REQUIRE_FALSE(members.count(0));
        for (Int x : s) REQUIRE(members.count(36 - x));
        REQUIRE(static_cast<Int>(s.size()) == icg::degree(spec));
    }
}

TEST_CASE("adjacency") {
    const auto c4 = icg::adjacency(IcgSpec::validate(4, {1}));
    for (Int i = 0; i < 4; ++i) {
        for (Int j = 0; j < 4; ++j) {
            CHECK(c4(i, j) == ((j - i + 4) % 4 == 1 || (j - i + 4) % 4 == 3));
        }
    }
    const auto k4 = icg::adjacency(IcgSpec::validate(4, {1, 2}));
    for (Int i = 0; i < 4; ++i) {
        for (Int j = 0; j < 4; ++j) CHECK(k4(i, j) == (i != j));
    }
    const auto k33 = icg::adjacency(IcgSpec::validate(6, {1, 3}));
    for (Int i = 0; i < 6; ++i) {
        for (Int j = 0; j < 6; ++j) CHECK(k33(i, j) == ((i + j) % 2 == 1));
    }
    CHECK_THROWS_AS(icg::adjacency(IcgSpec::validate(icg::kMaxDenseOrder + 2, {1})), std::length_error);
}

TEST_CASE("adjacency matches the gcd rule and is regular") {
    for (Int n = 2; n <= 30; ++n) {
        for (const auto& D : oracle::all_divisor_sets(n)) {
            const auto spec = IcgSpec::validate(n, D);
            const auto a = icg::adjacency(spec);
            const auto ref = oracle::gcd_adjacency(n, D);
            const Int lambda0 = icg::spectrum(spec).values[0];
            for (Int i = 0; i < n; ++i) {
                Int row = 0;
                REQUIRE_FALSE(a(i, i));
                for (Int j = 0; j < n; ++j) {
                    REQUIRE(a(i, j) == (ref[i][j] == 1));
                    REQUIRE(a(i, j) == a(j, i));
                    row += a(i, j) ? 1 : 0;
                }
                REQUIRE(row == lambda0);
            }
        }
    }
}

TEST_CASE("spectrum examples") {
    CHECK(icg::spectrum(IcgSpec::validate(4, {1})).values == std::vector<Int>{2, 0, -2, 0});
    CHECK(icg::spectrum(IcgSpec::validate(6, {1, 3})).values == std::vector<Int>{3, 0, 0, -3, 0, 0});
    CHECK(icg::spectrum(IcgSpec::validate(9, {1})).values ==
          std::vector<Int>{6, 0, 0, -3, 0, 0, -3, 0, 0});
    CHECK(icg::spectrum(IcgSpec::validate(2, {1})).values == std::vector<Int>{1, -1});
}

TEST_CASE("spectrum invariants") {
    for (Int n = 2; n <= 120; ++n) {
        for (const auto& D : oracle::all_divisor_sets(n)) {
            const auto spec = IcgSpec::validate(n, D);
            const auto s = icg::spectrum(spec);
            REQUIRE(static_cast<Int>(s.values.size()) == n);
            Int trace = 0;
            for (Int j = 0; j < n; ++j) {
                trace += s.values[j];
                if (j > 0) REQUIRE(s.values[j] == s.values[n - j]);
                REQUIRE(s.values[j] <= s.values[0]);
            }
            REQUIRE(trace == 0);
            Int lambda0 = 0;
            for (Int d : D) lambda0 += oracle::phi_by_count(n / d);
            REQUIRE(s.values[0] == lambda0);
            REQUIRE(icg::degree(spec) == lambda0);
            if (n % 2 == 0) {
                Int half = 0;
                for (Int d : D) half += (d % 2 == 0 ? 1 : -1) * oracle::phi_by_count(n / d);
                REQUIRE(s.values[n / 2] == half);
            }
        }
    }
}

TEST_CASE("spectrum agrees with a dense symmetric eigensolver for n <= 64") {
    for (Int n = 2; n <= 64; ++n) {
        for (const auto& D : oracle::all_divisor_sets(n)) {
            const auto spec = IcgSpec::validate(n, D);
            REQUIRE(eigen_dense_eigenvalues(icg::adjacency(spec)) == icg::spectrum(spec).sorted());
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(icg::connectivity(IcgSpec::validate(6, {1, 3})) == 1);
    CHECK(icg::connectivity(IcgSpec::validate(12, {2, 4})) == 2);
    CHECK(icg::connectivity(IcgSpec::validate(12, {4, 6})) == 2);
    CHECK(icg::connectivity(IcgSpec::validate(12, {6})) == 6);
}

TEST_CASE("component_decomposition") {
    auto c = icg::component_decomposition(IcgSpec::validate(12, {2, 4}));
    CHECK(c.count == 2);
    CHECK(c.quotient == IcgSpec::validate(6, {1, 2}));
    c = icg::component_decomposition(IcgSpec::validate(6, {1, 3}));
    CHECK(c.count == 1);
    CHECK(c.quotient == IcgSpec::validate(6, {1, 3}));
    c = icg::component_decomposition(IcgSpec::validate(12, {4, 6}));
    CHECK(c.count == 2);
    CHECK(c.quotient == IcgSpec::validate(6, {2, 3}));
}

TEST_CASE("spectrum of a disconnected graph repeats its quotient spectrum") {
    for (Int n = 2; n <= 200; ++n) {
        if (icg::divisor_set_count(n) > 4095) continue;
        for (const auto& D : oracle::all_divisor_sets(n)) {
            const auto spec = IcgSpec::validate(n, D);
            const auto [d, quotient] = icg::component_decomposition(spec);
            if (d == 1) continue;
            std::vector<Int> repeated;
            const auto q = icg::spectrum(quotient).values;
            for (Int i = 0; i < d; ++i) repeated.insert(repeated.end(), q.begin(), q.end());
            std::sort(repeated.begin(), repeated.end());
            REQUIRE(repeated == icg::spectrum(spec).sorted());
        }
    }
}

TEST_CASE("divisor set enumeration visits every set once with the right spectrum") {
    for (Int n : {2, 12, 30, 36, 48, 60}) {
        std::set<std::vector<Int>> seen;
        icg::for_each_divisor_set(n, {}, [&](const IcgSpec& spec, const icg::Spectrum& s) {
            REQUIRE(seen.insert(spec.divisors()).second);
            REQUIRE(s == icg::spectrum(spec));
        });
        const auto expected = oracle::all_divisor_sets(n);
        REQUIRE(seen == std::set<std::vector<Int>>(expected.begin(), expected.end()));
        REQUIRE(seen.size() == icg::divisor_set_count(n));
    }
}

TEST_CASE("connected-only enumeration keeps gcd(D) = 1") {
    std::size_t count = 0;
    icg::for_each_divisor_set(12, {true, icg::kDefaultSubsetBudget}, [&](const IcgSpec& spec, const icg::Spectrum&) {
        REQUIRE(icg::connectivity(spec) == 1);
        ++count;
    });
    // {1} together with any subset of {2,3,4,6}: 16 sets, plus sets without 1
    // having gcd 1: {2,3},{3,4},{2,3,4},{2,3,6},{3,4,6},{2,3,4,6}.
    CHECK(count == 22);
}

TEST_CASE("enumeration budget is enforced before any visit") {
    int visits = 0;
    CHECK_THROWS_AS(icg::for_each_divisor_set(48, {false, 510}, [&](const IcgSpec&, const icg::Spectrum&) { ++visits; }),
                    icg::BudgetExceeded);
    CHECK(visits == 0);
    CHECK_NOTHROW(icg::check_budget(48, 511));
    CHECK(icg::divisor_set_count(48) == 511);
    CHECK(icg::divisor_set_count(2) == 1);
}
