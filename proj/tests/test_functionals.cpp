#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "hyperlab/functionals.hpp"
#include "hyperlab/geometry.hpp"
#include "hyperlab/moser.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/radial_profile.hpp"

using namespace hyperlab;
using std::numbers::pi;

TEST_CASE("hardy_ratio on the tent against the closed forms") {
    const ModelParams p2 = ModelParams::make(2);
    const RadialProfile tent = tent_profile(1.0);

    const double lhs_oracle = std::sqrt(2.0 * pi * (2.0 * std::cosh(1.0) - 3.0));
    const double dir_oracle = std::sqrt(2.0 * pi * (std::cosh(1.0) - 1.0));

    const InequalityReport rep = hardy_ratio(tent, 2.0, 0.0, p2);
    CHECK(rep.lhs == Approx(lhs_oracle).epsilon(1e-8));
    CHECK(rep.rhs == Approx(std::sqrt(2.0) * dir_oracle).epsilon(1e-8));
    CHECK(rep.ratio == Approx(lhs_oracle / (std::sqrt(2.0) * dir_oracle)).epsilon(1e-8));
    CHECK(rep.ratio == Approx(0.2817).margin(1e-4));
    CHECK(rep.ratio * rep.rhs == Approx(rep.lhs).epsilon(1e-10));

    const InequalityReport sob = hardy_ratio(tent, 2.0, 0.0, p2, HardyDenominator::FullSobolev);
    const double sob_oracle =
        std::sqrt(2.0 * pi * (std::cosh(1.0) - 1.0 + 2.0 * std::cosh(1.0) - 3.0));
    CHECK(sob.rhs == Approx(std::sqrt(2.0) * sob_oracle).epsilon(1e-8));
    CHECK(sob.ratio < rep.ratio);
}

TEST_CASE("hardy_ratio contracts") {
    const ModelParams p2 = ModelParams::make(2);
    const RadialProfile tent = tent_profile(1.0);
    CHECK_THROWS_AS(hardy_ratio(scale(tent, 0.0), 2.0, 0.0, p2), std::domain_error);
    CHECK_THROWS_AS(hardy_ratio(tent, 1.5, 0.0, p2), std::domain_error);
    CHECK_THROWS_AS(hardy_ratio(tent, 2.0, 2.0, p2), std::domain_error);

    SECTION("scale invariance") {
        for (std::uint64_t seed : {21u, 22u, 23u}) {
            const RadialProfile f = random_profile(seed, 10, 2.0);
            const double base = hardy_ratio(f, 3.0, 0.5, p2).ratio;
            for (double c : {1e-3, 1.0, 1e3}) {
                CHECK(hardy_ratio(scale(f, c), 3.0, 0.5, p2).ratio ==
                      Approx(base).epsilon(1e-10));
            }
        }
    }
    SECTION("lhs is continuous in q") {
        const RadialProfile f = random_profile(31, 12, 1.5);
        double prev = hardy_ratio(f, 4.0, 0.0, p2).lhs;
        for (double h : {1e-2, 1e-4, 1e-6}) {
            const double cur = hardy_ratio(f, 4.0 + h, 0.0, p2).lhs;
            CHECK(std::abs(cur - prev) < 10.0 * h + 1e-9);
            prev = hardy_ratio(f, 4.0, 0.0, p2).lhs;
        }
    }
    SECTION("moser profile at large q sits near the asymptotic constant") {
        const auto [f, mp] = moser_profile(20.0, 0.0, 2, 2048);
        const double ratio = hardy_ratio(f, 50.0, 0.0, p2).ratio;
        CHECK(ratio < sharp_constant_B(p2, 0.0) * 1.5);
        CHECK(ratio > 0.0);
    }
}

TEST_CASE("tm_functional") {
    const ModelParams p2 = ModelParams::make(2);
    const RadialProfile tent = tent_profile(1.0);
    const double a0 = alpha_beta(p2, 0.0);

    CHECK(tm_functional(scale(tent, 0.0), a0, 0.0, p2) == 0.0);

    SECTION("monotone in alpha") {
        const double lo = tm_functional(tent, 1.0, 0.0, p2);
        const double hi = tm_functional(tent, 2.0, 0.0, p2);
        CHECK(hi >= lo);
        CHECK(lo > 0.0);
    }
    SECTION("small-amplitude limit isolates the leading series term") {
        // Phi_2(t) ~ t, so F(eps f) / eps^2 -> alpha * int |f|^2 rho^{-beta} dV
        const double eps = 1e-3;
        const double alpha = 2.5;
        const double beta = 0.5;
        const double value = tm_functional(scale(tent, eps), alpha, beta, p2);
        const double mass = weighted_power_integral(tent, 2.0, -beta, p2).value;
        CHECK(value / (eps * eps) == Approx(alpha * mass).epsilon(1e-2));
    }
    SECTION("n = 3 small-amplitude limit") {
        const ModelParams p3 = ModelParams::make(3);
        // Phi_3(t) ~ t^2/2 with t = alpha |f|^{3/2}: F(eps f)/eps^3 -> alpha^2/2 int |f|^3
        const double eps = 1e-3;
        const double alpha = 1.5;
        const double value = tm_functional(scale(tent, eps), alpha, 0.0, p3);
        const double mass = weighted_power_integral(tent, 3.0, 0.0, p3).value;
        CHECK(value / (eps * eps * eps) == Approx(alpha * alpha / 2.0 * mass).epsilon(1e-2));
    }
    CHECK_THROWS_AS(tm_functional(tent, -1.0, 0.0, p2), std::domain_error);
}

TEST_CASE("tm_weighted_ratio") {
    const ModelParams p2 = ModelParams::make(2);
    const double a0 = alpha_beta(p2, 0.0);

    SECTION("zero profile degenerates to a zero report") {
        const InequalityReport rep =
            tm_weighted_ratio(scale(tent_profile(1.0), 0.0), a0, 0.0, 0.0, 0.0, p2);
        CHECK(rep.degenerate);
        CHECK(rep.ratio == 0.0);
    }
    SECTION("single-weight specialization matches the functional quotient") {
        const RadialProfile f = random_profile(41, 10, 1.5);
        const RadialProfile g = scale(f, 1.0 / dirichlet_norm(f, p2));
        const InequalityReport rep = tm_weighted_ratio(f, 0.7 * a0, 0.5, 0.5, 0.0, p2);
        const double expected =
            tm_functional(g, 0.7 * a0, 0.5, p2) / weighted_power_integral(g, 2.0, -0.5, p2).value;
        CHECK(rep.ratio == Approx(expected).epsilon(1e-10));
    }
    SECTION("the quotient grows along the Moser sequence at the critical exponent") {
        double prev = 0.0;
        for (double j : {5.0, 10.0, 20.0}) {
            const auto [f, mp] = moser_profile(j, 0.0, 2, 2048);
            const double ratio = tm_weighted_ratio(f, a0, 0.0, 0.0, 0.0, p2).ratio;
            CHECK(ratio > prev);
            prev = ratio;
        }
    }
    SECTION("subcritical exponent keeps the quotient within a factor 2") {
        double lo = 1e300;
        double hi = 0.0;
        for (double j : {5.0, 10.0, 20.0}) {
            const auto [f, mp] = moser_profile(j, 0.0, 2, 2048);
            const double ratio = tm_weighted_ratio(f, 0.5 * a0, 0.0, 0.0, 0.0, p2).ratio;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi / lo < 2.0);
    }
    SECTION("inadmissible delta is rejected") {
        const RadialProfile f = tent_profile(1.0);
        CHECK_THROWS_AS(tm_weighted_ratio(f, 1.0, 0.0, 0.0, 0.5, p2), std::domain_error);
        CHECK_THROWS_AS(tm_weighted_ratio(f, 1.0, 1.0, 0.0, 0.3, p2), std::domain_error);
        CHECK_NOTHROW(tm_weighted_ratio(f, 1.0, 1.0, 0.0, 0.8, p2));
    }
}

TEST_CASE("tm_denominated_ratio") {
    const ModelParams p2 = ModelParams::make(2);
    const double a0 = alpha_beta(p2, 0.0);

    SECTION("zero profile reports ratio 0") {
        const InequalityReport rep = tm_denominated_ratio(scale(tent_profile(1.0), 0.0), a0, 0.0, p2);
        CHECK(rep.lhs == 0.0);
        CHECK(rep.ratio == 0.0);
        CHECK(rep.degenerate);
    }
    SECTION("the damping dominates pointwise") {
        for (double j : {5.0, 10.0}) {
            const auto [f, mp] = moser_profile(j, 0.0, 2, 1024);
            const RadialProfile g = scale(f, 1.0 / dirichlet_norm(f, p2));
            const double damped = tm_denominated_ratio(f, 0.9 * a0, 0.0, p2).lhs;
            const double plain = tm_functional(g, 0.9 * a0, 0.0, p2);
            CHECK(damped <= plain * (1.0 + 1e-10));
        }
    }
    SECTION("above the critical exponent the damped functional grows slower") {
        // diagnostic pair: the (1+|f|)^{-n'} damping eats a factor that grows
        // with the plateau height
        const double alpha = 1.05 * a0;
        const auto [f10, m10] = moser_profile(10.0, 0.0, 2, 1024);
        const auto [f20, m20] = moser_profile(20.0, 0.0, 2, 1024);
        const double plain10 = tm_functional(scale(f10, 1.0 / dirichlet_norm(f10, p2)), alpha, 0.0, p2);
        const double plain20 = tm_functional(scale(f20, 1.0 / dirichlet_norm(f20, p2)), alpha, 0.0, p2);
        const double damp10 = tm_denominated_ratio(f10, alpha, 0.0, p2).lhs;
        const double damp20 = tm_denominated_ratio(f20, alpha, 0.0, p2).lhs;
        CHECK(std::isfinite(damp20));
        CHECK(damp20 / damp10 < plain20 / plain10);
    }
}

TEST_CASE("delta admissibility intervals") {
    SECTION("equal weights pin delta to zero") {
        const DeltaRange r = delta_admissible(0.7, 0.7, 2);
        CHECK(r.fixed_zero);
        CHECK(r.contains(0.0));
        CHECK(!r.contains(0.5));
    }
    SECTION("beta1=1, beta2=0, n=2 gives (1/2, 1]") {
        const DeltaRange r = delta_admissible(1.0, 0.0, 2);
        CHECK(!r.fixed_zero);
        CHECK(r.lo == Approx(0.5));
        CHECK(r.lo_open);
        CHECK(!r.contains(0.5));
        CHECK(r.contains(0.500001));
        CHECK(r.contains(1.0));
    }
    SECTION("beta1=0, beta2=1, n=2 leaves only delta = 1") {
        const DeltaRange r = delta_admissible(0.0, 1.0, 2);
        CHECK(r.lo == Approx(1.0));
        CHECK(!r.lo_open);
        CHECK(r.contains(1.0));
        CHECK(!r.contains(0.999));
    }
    SECTION("negative beta2") {
        const DeltaRange r = delta_admissible(1.0, -1.0, 2);
        CHECK(r.lo == Approx(2.0 / 3.0));
        CHECK(r.contains(0.7));
        CHECK(!r.contains(0.6));
    }
    SECTION("delta = 1 is always admissible (the constraint collapses to 0 <= beta1 < n)") {
        for (double beta2 : {-3.0, 0.0, 1.0, 3.0, 10.0}) {
            for (double beta1 : {0.0, 0.5, 1.9}) {
                if (beta1 == beta2) {
                    continue;
                }
                CHECK(delta_admissible(beta1, beta2, 2).contains(1.0));
            }
        }
        // beta2 >= n relaxes the strict side entirely; only the >= side binds
        const DeltaRange r = delta_admissible(1.5, 3.0, 2);
        CHECK(r.lo == Approx(0.5));
        CHECK(!r.lo_open);
        CHECK(r.contains(0.5));
    }
    CHECK_THROWS_AS(delta_admissible(2.0, 0.0, 2), std::domain_error);
}

TEST_CASE("explicit CKN inequality") {
    const ModelParams p2 = ModelParams::make(2);

    SECTION("delta = 1 collapses onto the Hardy quotient") {
        const CknParams p{3.0, 4.0, 0.0, -0.1, 1.0, 2};
        const RadialProfile f = random_profile(55, 12, 2.0);
        const double c2_hat = 0.5;
        const InequalityReport ckn = ckn_explicit(f, p, c2_hat, p2);
        const InequalityReport hardy = hardy_ratio(f, 4.0, 0.4, p2);  // beta = -c p3
        CHECK(ckn.lhs == Approx(hardy.lhs).epsilon(1e-12));
        CHECK(ckn.ratio == Approx(hardy.ratio / c2_hat).epsilon(1e-10));
    }
    SECTION("Hoelder factorization has nonnegative slack") {
        const CknParams p{2.0, 3.0, 0.2, -0.3, 0.75, 2};
        validate_ckn(p);
        for (std::uint64_t seed = 100; seed < 140; ++seed) {
            const RadialProfile f = random_profile(seed, 10, 1.5);
            const InequalityReport rep = ckn_explicit(f, p, 1.0, p2, 1e-12);
            INFO("seed=" << seed);
            CHECK(rep.extras.at("holder_slack_rel") >= -1e-12);
        }
    }
    SECTION("inequality holds once the Hardy constant dominates the family") {
        const CknParams p{2.0, 3.0, 0.2, -0.3, 0.75, 2};
        const double q_star = ckn_interpolation_exponent(p);
        const double beta_star = ckn_hardy_beta(p);
        std::vector<RadialProfile> family;
        family.push_back(tent_profile(1.0));
        family.push_back(plateau_profile(0.5, 2.0));
        for (std::uint64_t seed = 60; seed < 66; ++seed) {
            family.push_back(random_profile(seed, 9, 1.8));
        }
        double c2_hat = 0.0;
        for (const auto& f : family) {
            c2_hat = std::max(c2_hat, hardy_ratio(f, q_star, beta_star, p2).ratio);
        }
        for (const auto& f : family) {
            const InequalityReport rep = ckn_explicit(f, p, c2_hat, p2);
            CHECK(rep.ratio <= 1.0 + 1e-10);
        }
    }
    SECTION("hypothesis violations are named") {
        CHECK_THROWS_WITH(validate_ckn(CknParams{2.0, 3.0, 0.2, -0.3, 0.1, 2}),
                          Catch::Contains("delta"));
        CHECK_THROWS_WITH(validate_ckn(CknParams{2.0, 3.0, 0.0, 0.5, 0.75, 2}),
                          Catch::Contains("b(1-delta) - c"));
        CHECK_THROWS_WITH(validate_ckn(CknParams{0.5, 3.0, 0.2, -0.3, 0.9, 2}),
                          Catch::Contains("p2"));
        // n <= p* fails: p2=4, p3=2, delta=0.45 -> p* = 3.6/3.1 < 2
        CHECK_THROWS_WITH(validate_ckn(CknParams{4.0, 2.0, 0.2, -0.05, 0.45, 2}),
                          Catch::Contains("delta*p2*p3"));
    }
}

TEST_CASE("interpolation CKN quotient (gn)") {
    const ModelParams p2 = ModelParams::make(2);

    SECTION("scale invariance") {
        const RadialProfile f = random_profile(71, 10, 2.0);
        const double base = gn_ratio(f, 5.0, 1.0, 0.0, 0.75, p2).ratio;
        for (double c : {1e-3, 1e3}) {
            CHECK(gn_ratio(scale(f, c), 5.0, 1.0, 0.0, 0.75, p2).ratio ==
                  Approx(base).epsilon(1e-10));
        }
    }
    SECTION("exponent collapse at q = n, delta = 0") {
        const RadialProfile f = random_profile(72, 9, 1.5);
        const InequalityReport rep = gn_ratio(f, 2.0, 0.5, 0.5, 0.0, p2);
        CHECK(rep.ratio == Approx(std::pow(2.0, 1.0 / 2.0 - 1.0)).epsilon(1e-12));
    }
    SECTION("reports carry the full admissible delta interval") {
        const RadialProfile f = random_profile(74, 9, 1.5);
        const InequalityReport rep = gn_ratio(f, 5.0, 1.0, 0.0, 0.8, p2);
        CHECK(rep.extras.at("delta_min") == Approx(0.5));
        CHECK(rep.extras.at("delta_max") == 1.0);
        const InequalityReport pinned = tm_weighted_ratio(f, 1.0, 0.5, 0.5, 0.0, p2);
        CHECK(pinned.extras.at("delta_min") == 0.0);
        CHECK(pinned.extras.at("delta_max") == 0.0);
    }
    SECTION("t-parametrization produces the identical quotient") {
        const RadialProfile f = random_profile(73, 11, 1.8);
        for (double q : {3.0, 5.0, 17.0}) {
            const double t = 2.0 * q / (q - 2.0);
            const InequalityReport direct = gn_ratio(f, q, 1.0, 0.0, 0.8, p2);
            const InequalityReport via_t = gn_ratio_t_form(f, t, 1.0, 0.0, 0.8, p2);
            CHECK(via_t.extras.at("q") == Approx(q).epsilon(1e-14));
            CHECK(via_t.ratio == Approx(direct.ratio).epsilon(1e-12));
            // round trip of the substitution: 1 - n/q = n/t
            CHECK(1.0 - 2.0 / q == Approx(2.0 / t).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(gn_ratio(tent_profile(1.0), 5.0, 1.0, 0.0, 0.2, p2), std::domain_error);
}

TEST_CASE("denominated CKN quotient (gn3)") {
    const ModelParams p2 = ModelParams::make(2);
    const RadialProfile tent = tent_profile(1.0);

    SECTION("the damped norm never exceeds the plain one") {
        for (std::uint64_t seed : {81u, 82u, 83u}) {
            const RadialProfile f = random_profile(seed, 10, 1.5);
            const InequalityReport rep = gn3_ratio(f, 4.0, 0.5, p2);
            const double plain = weighted_lq_norm(f, NormSpec(4.0, 0.5), p2);
            CHECK(rep.lhs <= plain * (1.0 + 1e-10));
        }
    }
    SECTION("zero profile is rejected") {
        CHECK_THROWS_AS(gn3_ratio(scale(tent, 0.0), 4.0, 0.0, p2), std::domain_error);
    }
    SECTION("stable under tolerance refinement") {
        const InequalityReport coarse = gn3_ratio(tent, 4.0, 0.0, p2, 1e-8);
        const InequalityReport fine = gn3_ratio(tent, 4.0, 0.0, p2, 1e-12);
        CHECK(coarse.ratio == Approx(fine.ratio).epsilon(1e-6));
    }
    SECTION("the plain quotient is scale invariant; the damped one deliberately is not") {
        const RadialProfile f = random_profile(84, 10, 2.0);
        const InequalityReport base = gn3_ratio(f, 6.0, 0.8, p2);
        for (double c : {1e-3, 1e3}) {
            const InequalityReport scaled = gn3_ratio(scale(f, c), 6.0, 0.8, p2);
            CHECK(scaled.extras.at("b5_quotient") ==
                  Approx(base.extras.at("b5_quotient")).epsilon(1e-10));
        }
        // the (1+|f|)^{n'/q} damping suppresses large-amplitude profiles
        CHECK(gn3_ratio(scale(f, 1e3), 6.0, 0.8, p2).ratio < base.ratio);
        // and the damped ratio climbs to the plain quotient as the scale vanishes
        CHECK(gn3_ratio(scale(f, 1e-6), 6.0, 0.8, p2).ratio ==
              Approx(base.extras.at("b5_quotient")).epsilon(1e-4));
    }
}

TEST_CASE("uncertainty-type principle") {
    const ModelParams p2 = ModelParams::make(2);

    SECTION("zero profile gives the trivial 0 >= 0 report") {
        const InequalityReport rep =
            uncertainty_check(scale(tent_profile(1.0), 0.0), 4.0, 0.0, 1.0, p2);
        CHECK(rep.degenerate);
        CHECK(rep.lhs == 0.0);
        CHECK(rep.rhs == 0.0);
    }
    SECTION("holds whenever the Hardy constant dominates the family") {
        std::vector<RadialProfile> family;
        family.push_back(tent_profile(1.0));
        family.push_back(plateau_profile(0.5, 1.5));
        for (std::uint64_t seed = 90; seed < 96; ++seed) {
            family.push_back(random_profile(seed, 9, 1.6));
        }
        for (double beta : {0.0, 1.0}) {
            const double q = 4.0;
            double c2_hat = 0.0;
            for (const auto& f : family) {
                c2_hat = std::max(c2_hat, hardy_ratio(f, q, beta, p2).ratio);
            }
            for (const auto& f : family) {
                const InequalityReport rep = uncertainty_check(f, q, beta, c2_hat, p2);
                CHECK(rep.rhs <= rep.lhs * (1.0 + 1e-10));
            }
        }
    }
    SECTION("Hoelder sub-step has nonnegative slack") {
        for (std::uint64_t seed = 200; seed < 230; ++seed) {
            const RadialProfile f = random_profile(seed, 8 + seed % 5, 1.0 + (seed % 3) * 0.7);
            const InequalityReport rep = uncertainty_check(f, 3.7, 0.6, 1.0, p2, 1e-12);
            INFO("seed=" << seed);
            CHECK(rep.extras.at("holder_slack_rel") >= -1e-12);
        }
    }
}

TEST_CASE("report invariants") {
    const ModelParams p2 = ModelParams::make(2);
    const RadialProfile f = random_profile(300, 10, 1.5);
    const InequalityReport rep = hardy_ratio(f, 3.0, 0.5, p2);
    CHECK(rep.ratio * rep.rhs == Approx(rep.lhs).epsilon(1e-10));
    CHECK(rep.quad_error >= 0.0);
    CHECK(rep.params.at("q") == 3.0);
    CHECK(rep.params.at("beta") == 0.5);
}
