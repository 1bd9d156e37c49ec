#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "hyperlab/geometry.hpp"
#include "hyperlab/special_functions.hpp"

using namespace hyperlab;
using std::numbers::e;
using std::numbers::pi;

TEST_CASE("truncated exponential against closed forms") {
    CHECK(truncated_exp(2, 0.0) == 0.0);
    CHECK(truncated_exp(2, 1.0) == Approx(e - 1.0).epsilon(1e-14));
    CHECK(truncated_exp(3, 2.0) == Approx(std::exp(2.0) - 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(truncated_exp(2, -1.0), std::domain_error);
    CHECK_THROWS_AS(truncated_exp(1, 1.0), std::domain_error);
}

TEST_CASE("truncated exponential small-t leading term") {
    for (int n : {2, 3, 4, 5}) {
        const double t = 1e-6;
        double fact = 1.0;
        for (int k = 2; k <= n - 1; ++k) {
            fact *= k;
        }
        const double ratio = truncated_exp(n, t) / std::pow(t, n - 1) * fact;
        CHECK(ratio == Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("truncated exponential is increasing and convex") {
    for (int n : {2, 3, 4}) {
        const double h = 1e-4;
        for (double t : {0.05, 0.4, 1.3, 2.7, 5.0, 9.0}) {
            const double fm = truncated_exp(n, t - h);
            const double f0 = truncated_exp(n, t);
            const double fp = truncated_exp(n, t + h);
            CHECK(fp > f0);
            CHECK(f0 > fm);
            CHECK(fp - 2.0 * f0 + fm > 0.0);
        }
    }
}

TEST_CASE("truncated exponential recurrence and branch seam") {
    for (int n : {2, 3, 4, 6}) {
        double fact = 1.0;
        for (int k = 2; k <= n - 1; ++k) {
            fact *= k;
        }
        for (double t : {0.1, 0.9, 2.0, 4.0, 8.0}) {
            const double lhs = truncated_exp(n + 1, t);
            const double rhs = truncated_exp(n, t) - std::pow(t, n - 1) / fact;
            CHECK(lhs == Approx(rhs).epsilon(1e-12));
        }
        // continuity across the series/compensated-head switch at t = n-1
        const double seam = n - 1.0;
        CHECK(truncated_exp(n, seam - 1e-9) == Approx(truncated_exp(n, seam + 1e-9)).epsilon(1e-8));
        CHECK(truncated_exp(n, std::nextafter(seam, 0.0)) ==
              Approx(truncated_exp(n, seam)).epsilon(1e-12));
    }
}

TEST_CASE("log_gamma agrees with the standard library") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-13);
    CHECK(std::abs(log_gamma(2.0)) < 1e-13);
    CHECK(log_gamma(0.5) == Approx(std::log(std::sqrt(pi))).epsilon(1e-13));
    CHECK(log_gamma(6.0) == Approx(std::log(120.0)).epsilon(1e-13));
    for (double x : {0.1, 0.37, 0.9, 1.5, 3.25, 10.0, 123.4, 6670.0, 1e8}) {
        CHECK(log_gamma(x) == Approx(std::lgamma(x)).epsilon(1e-12).margin(1e-13));
    }
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("stirling ratio collapses to 1") {
    CHECK(std::abs(stirling_ratio(200.0, 2) - 1.0) < 0.05);
    CHECK(std::abs(stirling_ratio(2000.0, 2) - 1.0) < 0.01);
    CHECK(std::abs(stirling_ratio(1000.0, 3) - 1.0) < 0.02);
    CHECK(std::abs(stirling_ratio(1e6, 2) - 1.0) < 1e-4);
    CHECK_THROWS_AS(stirling_ratio(1.5, 2), std::domain_error);
}

TEST_CASE("critical map values and inversion") {
    CHECK(critical_map(1.0, 2, CriticalDirection::ConstantToAlpha) ==
          Approx(1.0 / (2.0 * e)).epsilon(1e-14));
    const ModelParams p2 = ModelParams::make(2);
    CHECK(critical_map(4.0 * pi, 2, CriticalDirection::AlphaToConstant) ==
          Approx(sharp_constant_B(p2, 0.0)).epsilon(1e-12));
    for (int n : {2, 3, 5}) {
        for (double c : {1e-3, 0.2, 1.0, 7.5, 1e3}) {
            const double alpha = critical_map(c, n, CriticalDirection::ConstantToAlpha);
            CHECK(critical_map(alpha, n, CriticalDirection::AlphaToConstant) ==
                  Approx(c).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(critical_map(0.0, 2, CriticalDirection::ConstantToAlpha), std::domain_error);
}

TEST_CASE("equivalence series verdict flips at the critical exponent") {
    SECTION("alpha = 0 is trivially convergent") {
        const SeriesDiagnosis diag = equivalence_series(0.0, 1.0, 2, 1.0, 100);
        CHECK(diag.partial_sum == 0.0);
        CHECK(diag.verdict == SeriesVerdict::Converged);
    }
    SECTION("flip across 0.9/1.1 of the threshold") {
        for (int n : {2, 3, 4}) {
            for (double c : {0.1, 1.0, 10.0}) {
                const double astar = critical_map(c, n, CriticalDirection::ConstantToAlpha);
                const SeriesDiagnosis below = equivalence_series(0.9 * astar, c, n, 1.0, 600);
                const SeriesDiagnosis above = equivalence_series(1.1 * astar, c, n, 1.0, 600);
                INFO("n=" << n << " C=" << c);
                CHECK(below.verdict == SeriesVerdict::Converged);
                CHECK(above.verdict == SeriesVerdict::Diverging);
                CHECK(below.last_term < kSeriesTailTol * below.partial_sum);
                CHECK(below.term_ratio_estimate < 1.0);
                CHECK(above.term_ratio_estimate > 1.0);
            }
        }
    }
    SECTION("too few terms is Inconclusive, not an error") {
        const double astar = critical_map(1.0, 2, CriticalDirection::ConstantToAlpha);
        CHECK(equivalence_series(astar, 1.0, 2, 1.0, 50).verdict ==
              SeriesVerdict::Inconclusive);
        CHECK(equivalence_series(0.9 * astar, 1.0, 2, 1.0, 5).verdict ==
              SeriesVerdict::Inconclusive);
    }
    CHECK_THROWS_AS(equivalence_series(1.0, -1.0, 2, 1.0, 100), std::domain_error);
    CHECK_THROWS_AS(equivalence_series(1.0, 1.0, 2, 1.0, 1), std::domain_error);
}
