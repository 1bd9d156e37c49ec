#pragma once

// Empirical estimation of the inequality constants: multistart simplex
// maximization of the quotients over radial profiles on a fixed knot grid,
// q-sweeps toward the asymptotic constant B, the certified constant extracted
// from a Trudinger-Moser bound, and the Moser-sequence blow-up diagnostics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/functionals.hpp"
#include "hyperlab/geometry.hpp"
#include "hyperlab/moser.hpp"
#include "hyperlab/nelder_mead.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/radial_profile.hpp"
#include "hyperlab/special_functions.hpp"

namespace hyperlab {

struct OptimizerConfig {
    int knot_count = 12;
    double support_radius = 5.0;
    int multistarts = 4;  // seeded random starts, added on top of the fixed ones
    int max_iters = 400;
    double simplex_tol = 1e-8;
    std::uint64_t seed = 1u;
    double quad_tol = 1e-9;

    void validate() const {
        if (knot_count < 4) {
            throw std::domain_error("OptimizerConfig: requires knot_count >= 4");
        }
        if (!(support_radius > 0.0)) {
            throw std::domain_error("OptimizerConfig: requires support_radius > 0");
        }
        if (multistarts < 1) {
            throw std::domain_error("OptimizerConfig: requires multistarts >= 1");
        }
        if (max_iters < 1 || !(simplex_tol > 0.0)) {
            throw std::domain_error("OptimizerConfig: requires positive max_iters and simplex_tol");
        }
    }
};

/// Which quotient the optimizer maximizes.
struct Objective {
    enum class Kind { Hardy, GN, GN3 } kind = Kind::Hardy;
    double q = 0.0;
    double beta1 = 0.0;  // Hardy/GN3 use this slot as their single beta
    double beta2 = 0.0;
    double delta = 0.0;
    HardyDenominator den = HardyDenominator::GradientOnly;

    static Objective hardy(double q, double beta,
                           HardyDenominator den = HardyDenominator::GradientOnly) {
        Objective o;
        o.kind = Kind::Hardy;
        o.q = q;
        o.beta1 = beta;
        o.den = den;
        return o;
    }
    static Objective gn(double q, double beta1, double beta2, double delta) {
        Objective o;
        o.kind = Kind::GN;
        o.q = q;
        o.beta1 = beta1;
        o.beta2 = beta2;
        o.delta = delta;
        return o;
    }
    static Objective gn3(double q, double beta) {
        Objective o;
        o.kind = Kind::GN3;
        o.q = q;
        o.beta1 = beta;
        return o;
    }
    Objective with_q(double new_q) const {
        Objective o = *this;
        o.q = new_q;
        return o;
    }
    const char* name() const {
        switch (kind) {
            case Kind::Hardy: return "hardy";
            case Kind::GN: return "gn";
            default: return "gn3";
        }
    }
};

inline double objective_ratio(const Objective& obj, const RadialProfile& f,
                              const ModelParams& params, double tol = 1e-9) {
    switch (obj.kind) {
        case Objective::Kind::Hardy:
            return hardy_ratio(f, obj.q, obj.beta1, params, obj.den, tol).ratio;
        case Objective::Kind::GN:
            return gn_ratio(f, obj.q, obj.beta1, obj.beta2, obj.delta, params, tol).ratio;
        default:
            // the scale-invariant quotient behind the asymptotic constant of
            // the denominated family (plain numerator over the gn3 rhs)
            return gn3_ratio(f, obj.q, obj.beta1, params, tol).extras.at("b5_quotient");
    }
}

struct SupEstimate {
    double constant = 0.0;
    RadialProfile witness;
    std::string witness_id;
    int iterations = 0;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::string compact_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

/// Knot grid graded logarithmically toward the origin, where the weights
/// concentrate: k_0 = 0, k_i = R exp(-L (1 - i/(m-1))).
inline std::vector<double> optimizer_grid(int knot_count, double support_radius) {
    constexpr double kLogRange = 7.0;
    std::vector<double> knots(knot_count);
    knots[0] = 0.0;
    for (int i = 1; i < knot_count; ++i) {
        knots[i] =
            support_radius * std::exp(-kLogRange * (1.0 - static_cast<double>(i) / (knot_count - 1)));
    }
    return knots;
}

}  // namespace detail

/// Multistart Nelder-Mead maximization of the objective quotient over profile
/// values on a fixed knot grid. Fixed starts (tent, plateau, two Moser-type
/// profiles matched to q) are always injected -- the raw Moser profiles are
/// also evaluated as candidates in their own right -- followed by
/// `multistarts` seeded random starts. The result is a lower bound on the
/// supremum; it never decreases when starts are added.
inline SupEstimate estimate_sup_ratio(const Objective& obj, const OptimizerConfig& cfg,
                                      const ModelParams& params) {
    cfg.validate();
    const std::vector<double> grid = detail::optimizer_grid(cfg.knot_count, cfg.support_radius);
    const std::size_t dim = grid.size() - 1;

    auto build = [&](const std::vector<double>& v) {
        std::vector<double> values(grid.size());
        for (std::size_t i = 0; i < dim; ++i) {
            values[i] = std::abs(v[i]);  // the quotients see |f|; keep segments kink-free
        }
        values.back() = 0.0;
        return make_profile(std::vector<double>(grid), std::move(values));
    };
    auto ratio_of = [&](const RadialProfile& f) {
        try {
            return objective_ratio(obj, f, params, cfg.quad_tol);
        } catch (const std::exception&) {
            return -1.0;  // degenerate or non-convergent candidate
        }
    };
    auto objective_fn = [&](const std::vector<double>& v) { return -ratio_of(build(v)); };

    SupEstimate best;
    best.constant = -1.0;
    auto consider = [&](double value, const RadialProfile& witness, const std::string& id,
                        int iterations) {
        if (value > best.constant) {
            best.constant = value;
            best.witness = witness;
            best.witness_id = id;
            best.iterations = iterations;
        }
    };

    struct Start {
        std::string id;
        std::vector<double> v;
    };
    std::vector<Start> starts;
    {
        std::vector<double> tent(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            tent[i] = 1.0 - grid[i] / cfg.support_radius;
        }
        starts.push_back({"tent", std::move(tent)});

        std::vector<double> plateau(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const double r = grid[i];
            const double edge = 0.25 * cfg.support_radius;
            plateau[i] = r <= edge ? 1.0 : (cfg.support_radius - r) / (cfg.support_radius - edge);
        }
        starts.push_back({"plateau", std::move(plateau)});
    }
    for (double jfrac : {0.25, 0.125}) {
        const double j = std::max(1.0, jfrac * obj.q);
        auto [profile, mp] = moser_profile(j, obj.beta1, params.n, 1024);
        consider(ratio_of(profile), profile, "moser:j=" + detail::compact_number(j), 0);
        std::vector<double> v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = evaluate(profile, grid[i]);
        }
        starts.push_back({"nm:moser:j=" + detail::compact_number(j), std::move(v)});
    }
    for (int r = 0; r < cfg.multistarts; ++r) {
        std::uint64_t state = detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(r));
        std::vector<double> v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            state = detail::mix_seed(state, i);
            v[i] = std::ldexp(static_cast<double>(state >> 11), -53);
        }
        starts.push_back({"nm:random:" + std::to_string(r), std::move(v)});
    }

    for (auto& start : starts) {
        // normalize the start to unit Dirichlet norm; the quotient itself is
        // scale-invariant, this just conditions the simplex
        const RadialProfile p0 = build(start.v);
        const double g0 = is_zero_profile(p0) ? 0.0 : dirichlet_norm(p0, params, cfg.quad_tol);
        if (g0 > 0.0) {
            for (double& x : start.v) {
                x /= g0;
            }
        }
        double scale0 = 0.0;
        for (double x : start.v) {
            scale0 = std::max(scale0, std::abs(x));
        }
        const NelderMeadResult run = nelder_mead(objective_fn, start.v, 0.25 * scale0 + 1e-3,
                                                 cfg.simplex_tol, cfg.max_iters);
        const RadialProfile witness = build(run.x);
        consider(ratio_of(witness), witness, start.id, run.iterations);
    }

    if (best.constant <= 0.0) {
        throw std::runtime_error("estimate_sup_ratio: every start degenerated");
    }
    return best;
}

struct SweepEntry {
    double q = 0.0;
    double estimate = 0.0;
    std::string profile_id;
    int iterations = 0;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    double target_B = 0.0;
    double trend_gap = 0.0;  // |last estimate - target_B| / target_B
};

/// estimate_sup_ratio along an ascending q-grid; the target is the asymptotic
/// constant B = (alpha_beta n' e)^{-1/n'} of the q -> infinity limsup. The
/// trend gap at the largest q documents how far a finite-q, radial-only,
/// finite-mesh search lands from the asymptote.
inline SweepResult constant_sweep(std::span<const double> q_grid, const Objective& family,
                                  const OptimizerConfig& cfg, const ModelParams& params) {
    if (q_grid.empty()) {
        throw std::domain_error("constant_sweep: empty q grid");
    }
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (!(q_grid[i] >= params.n) || (i > 0 && !(q_grid[i] > q_grid[i - 1]))) {
            throw std::domain_error("constant_sweep: q grid must be ascending with q >= n");
        }
    }
    SweepResult result;
    result.target_B = sharp_constant_B(params, family.beta1);
    for (double q : q_grid) {
        const SupEstimate est = estimate_sup_ratio(family.with_q(q), cfg, params);
        result.entries.push_back(SweepEntry{q, est.constant, est.witness_id, est.iterations});
    }
    result.trend_gap =
        std::abs(result.entries.back().estimate - result.target_B) / result.target_B;
    return result;
}

/// Hardy-type constant extracted from a Trudinger-Moser bound with constant
/// C_eps at exponent alpha < alpha_beta:
///   C(q) = (C_eps Gamma(q/n' + 2))^{1/q} alpha^{-1/n'},
/// evaluated in log space. C(q)/q^{1/n'} tends to (alpha n' e)^{-1/n'}.
inline double certified_constant_from_tm(double alpha, double c_eps, double q,
                                         const ModelParams& params) {
    const double a_beta_limit = params.n * std::pow(params.omega, 1.0 / (params.n - 1));
    if (!(alpha > 0.0 && alpha < a_beta_limit)) {
        throw std::domain_error("certified_constant_from_tm: requires 0 < alpha < alpha_beta");
    }
    if (!(c_eps > 0.0)) {
        throw std::domain_error("certified_constant_from_tm: requires C_eps > 0");
    }
    if (!(q >= params.n)) {
        throw std::domain_error("certified_constant_from_tm: requires q >= n");
    }
    const double np = params.n_prime;
    return std::exp((std::log(c_eps) + log_gamma(q / np + 2.0)) / q - std::log(alpha) / np);
}

struct MoserDiagnosticRow {
    double j = 0.0;
    double dirichlet = 0.0;       // should sit at 1 by construction
    double decay_integral = 0.0;  // int |f_j|^n rho^{-beta2} dV, O(1/j)
    double tm_ratio = 0.0;
};

enum class MoserTrend { Growth, Bounded, Indeterminate };

inline const char* to_string(MoserTrend t) {
    switch (t) {
        case MoserTrend::Growth: return "Growth";
        case MoserTrend::Bounded: return "Bounded";
        default: return "Indeterminate";
    }
}

struct MoserDiagnostic {
    std::vector<MoserDiagnosticRow> rows;
    MoserTrend trend = MoserTrend::Indeterminate;
    double alpha = 0.0;
    double alpha_critical = 0.0;
};

/// Blow-up table for the Moser sequence: per j the Dirichlet norm, the decay
/// integral and the weighted TM quotient. The trend is Growth when the
/// quotient rises monotonically by at least 2x across the grid (the
/// supercritical signature), Bounded when it stays within a factor 2.
inline MoserDiagnostic moser_blowup_diagnostic(std::span<const double> j_grid, double alpha,
                                               double beta1, double beta2, double delta,
                                               const ModelParams& params, int mesh = 4096,
                                               double tol = 1e-9) {
    if (j_grid.size() < 2) {
        throw std::domain_error("moser_blowup_diagnostic: needs at least two j values");
    }
    for (std::size_t i = 1; i < j_grid.size(); ++i) {
        if (!(j_grid[i] > j_grid[i - 1])) {
            throw std::domain_error("moser_blowup_diagnostic: j grid must be ascending");
        }
    }
    MoserDiagnostic diag;
    diag.alpha = alpha;
    diag.alpha_critical = alpha_beta(params, beta1);
    for (double j : j_grid) {
        auto [profile, mp] = moser_profile(j, beta1, params.n, mesh);
        MoserDiagnosticRow row;
        row.j = j;
        row.dirichlet = dirichlet_norm(profile, params, tol);
        row.decay_integral = weighted_power_integral(profile, params.n, -beta2, params, tol).value;
        row.tm_ratio = tm_weighted_ratio(profile, alpha, beta1, beta2, delta, params, tol).ratio;
        diag.rows.push_back(row);
    }
    bool monotone_up = true;
    double lo = diag.rows.front().tm_ratio;
    double hi = lo;
    for (std::size_t i = 1; i < diag.rows.size(); ++i) {
        monotone_up = monotone_up && diag.rows[i].tm_ratio > diag.rows[i - 1].tm_ratio;
        lo = std::min(lo, diag.rows[i].tm_ratio);
        hi = std::max(hi, diag.rows[i].tm_ratio);
    }
    const double span = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (monotone_up && diag.rows.back().tm_ratio >= 2.0 * diag.rows.front().tm_ratio) {
        diag.trend = MoserTrend::Growth;
    } else if (span <= 2.0) {
        diag.trend = MoserTrend::Bounded;
    }
    return diag;
}

}  // namespace hyperlab
