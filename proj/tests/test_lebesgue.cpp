#include "baskakov/evaluator.hpp"
#include "baskakov/lebesgue.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace baskakov;

TEST_SUITE("lebesgue") {

TEST_CASE("order 0 row is the basis row") {
    const auto row = quasi_lagrange_row(9, 0, 1.3, 150);
    const BasisRow basis = basis_row(9, 1.3, 150);
    double sum = 0.0;
    for (int j = 0; j <= 150; ++j) {
        CHECK(row[j] >= 0.0);
        CHECK(row[j] == doctest::Approx(basis.value(j)).epsilon(1e-14));
        sum += row[j];
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
}

TEST_CASE("rows reproduce constants and x") {
    for (int n : {8, 24})
        for (int r = 0; r <= 9; ++r)
            for (double x : {0.0, 0.25, 1.0, 2.0}) {
                const int N = 40 * n;
                const auto row = quasi_lagrange_row(n, r, x, N);
                double s0 = 0.0;
                double s1 = 0.0;
                for (int j = 0; j <= N; ++j) {
                    s0 += row[j];
                    s1 += (static_cast<double>(j) / n) * row[j];
                }
                CAPTURE(r);
                CAPTURE(x);
                CHECK(std::abs(s0 - 1.0) < 1e-9);
                // high orders cancel terms of size ~1e7 at n = 8, x = 2
                CHECK(std::abs(s1 - x) < 1e-8);
            }
}

TEST_CASE("rows reproduce moments up to order 3") {
    for (int r = 0; r <= 9; ++r)
        for (double x : {0.5, 1.0, 2.0}) {
            const int n = 16;
            const int N = lebesgue_terms(n, r);
            const auto row = quasi_lagrange_row(n, r, x, N);
            for (int s = 0; s <= std::min(r, 3); ++s) {
                double acc = 0.0;
                for (int j = 0; j <= N; ++j) acc += std::pow(static_cast<double>(j) / n, s) * row[j];
                CHECK(std::abs(acc - std::pow(x, s)) < 1e-6);
            }
        }
}

TEST_CASE("Lebesgue function of the positive operator") {
    for (double x : {0.0, 0.3, 2.0, 7.5}) {
        CHECK(std::abs(lebesgue_function(12, 0, x, 200) - 1.0) < 1e-10);
        CHECK(lebesgue_function(12, 1, x, 200) == lebesgue_function(12, 0, x, 200));
    }
    CHECK(norm_estimate(8, 0).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Lebesgue function is at least one") {
    for (int r = 2; r <= 9; ++r)
        for (double x = 0.0; x <= 6.0; x += 0.37) CHECK(lebesgue_function(10, r, x, lebesgue_terms(10, r)) >= 1.0 - 1e-12);
}

TEST_CASE("adaptive truncation reports its tail") {
    const EtaPolys& eta = eta_polys(8, 9);
    const LebesgueValue v = lebesgue_value(8, 6, 9.0, 20, eta);
    CHECK(v.terms > 20);
    CHECK(v.tail_bound <= kLebesgueTailTolerance);
    CHECK(v.value == doctest::Approx(lebesgue_function(8, 6, 9.0, 400)).epsilon(1e-9));
}

TEST_CASE("published norm examples") {
    CHECK(std::abs(norm_estimate(16, 2).value - 1.12) <= 0.05);
    CHECK(std::abs(norm_estimate(32, 4).value - 1.80) <= 0.05);
    CHECK(std::abs(norm_estimate(8, 8).value - 7.50) <= 0.15);
    CHECK(std::abs(norm_estimate(48, 9).value - 13.8) <= 0.3);
}

TEST_CASE("norms grow with n") {
    for (int r : {2, 5, 9}) {
        double prev = 0.0;
        for (int n : {8, 16, 24, 32, 40, 48}) {
            const double v = norm_estimate(n, r).value;
            CHECK(v >= prev - 0.01);
            prev = v;
        }
    }
}

TEST_CASE("argmax is reported inside the domain") {
    const LebesgueEstimate e = norm_estimate(8, 7);
    CHECK(e.argmax >= 0.0);
    CHECK(e.argmax <= e.x_max);
    CHECK(lebesgue_function(8, 7, e.argmax, lebesgue_terms(8, 7)) == doctest::Approx(e.value).epsilon(1e-9));
    CHECK_THROWS_AS(norm_estimate(8, 2, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(quasi_lagrange_row(8, 2, -0.1, 50), std::invalid_argument);
}

}
