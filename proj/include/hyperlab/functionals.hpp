#pragma once

// Two-sided evaluators for the inequality families on H^n: Hardy quotients,
// weighted Trudinger-Moser functionals, the explicit CKN inequality and its
// interpolation forms, and the uncertainty-type principle. Each evaluator
// returns an InequalityReport with both sides, their quotient, an echo of the
// scalar inputs, and the worst quadrature error among constituent integrals.
//
// Empirical constants (C2_hat and friends) are always inputs: certified and
// empirically estimated values must be interchangeable.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "hyperlab/geometry.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/radial_profile.hpp"
#include "hyperlab/special_functions.hpp"

namespace hyperlab {

struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs/rhs; 0/0 reports 0 with the degenerate flag set
    bool degenerate = false;
    double quad_error = 0.0;
    std::map<std::string, double> params;
    std::map<std::string, double> extras;
};

namespace detail {

inline void finish_ratio(InequalityReport& rep) {
    if (rep.lhs == 0.0 && rep.rhs == 0.0) {
        rep.ratio = 0.0;
        rep.degenerate = true;
    } else {
        rep.ratio = rep.lhs / rep.rhs;
    }
}

inline void track_error(InequalityReport& rep, const QuadResult& r) {
    rep.quad_error = std::max(rep.quad_error, r.abs_error_estimate);
}

}  // namespace detail

enum class HardyDenominator {
    GradientOnly,  // q^{1-1/n} ||grad f||_n
    FullSobolev,   // q^{1-1/n} ||f||_{W^{1,n}}
};

/// delta-admissibility for the two-weight families: for beta1 == beta2 the
/// exponent is pinned to 0; otherwise delta must satisfy
/// 0 <= beta1 - beta2(1-delta) < n delta with delta in (0, 1].
struct DeltaRange {
    bool fixed_zero = false;
    double lo = 0.0;
    double hi = 1.0;
    bool lo_open = true;

    bool contains(double delta) const {
        if (fixed_zero) {
            return delta == 0.0;
        }
        if (lo_open ? !(delta > lo) : !(delta >= lo)) {
            return false;
        }
        return delta <= hi;
    }
};

inline DeltaRange delta_admissible(double beta1, double beta2, int n) {
    if (!(beta1 >= 0.0 && beta1 < n)) {
        throw std::domain_error("delta_admissible: requires 0 <= beta1 < n");
    }
    if (beta1 == beta2) {
        return DeltaRange{true, 0.0, 0.0, false};
    }
    DeltaRange range{false, 0.0, 1.0, true};
    if (beta2 < n) {
        // beta1 - beta2(1-delta) < n delta  <=>  delta > (beta1-beta2)/(n-beta2)
        const double lo = (beta1 - beta2) / (n - beta2);
        if (lo > range.lo) {
            range.lo = lo;
            range.lo_open = true;
        }
    }
    if (beta2 > 0.0) {
        // 0 <= beta1 - beta2(1-delta)  <=>  delta >= (beta2-beta1)/beta2
        const double lo = (beta2 - beta1) / beta2;
        if (lo > range.lo || (lo == range.lo && range.lo_open)) {
            range.lo = lo;
            range.lo_open = false;
        }
    }
    // for beta2 < 0 the lower-bound side caps delta at (beta2-beta1)/beta2 >= 1,
    // and for beta2 >= n the strict side holds for every delta <= 1: no-ops here
    if (range.lo > 1.0 || (range.lo == 1.0 && range.lo_open)) {
        throw std::domain_error(
            "delta_admissible: no delta in (0,1] satisfies 0 <= beta1 - beta2*(1-delta) < "
            "n*delta for beta1=" +
            std::to_string(beta1) + ", beta2=" + std::to_string(beta2));
    }
    return range;
}

namespace detail {

inline DeltaRange require_delta(double delta, double beta1, double beta2, int n,
                                const char* who) {
    const DeltaRange range = delta_admissible(beta1, beta2, n);
    if (!range.contains(delta)) {
        throw std::domain_error(std::string(who) +
                                ": delta is not admissible for (beta1, beta2); requires " +
                                (range.fixed_zero
                                     ? std::string("delta = 0 when beta1 = beta2")
                                     : std::string("delta in ") + (range.lo_open ? "(" : "[") +
                                           std::to_string(range.lo) + ", 1]"));
    }
    return range;
}

inline void report_delta_range(InequalityReport& rep, const DeltaRange& range) {
    rep.extras["delta_min"] = range.fixed_zero ? 0.0 : range.lo;
    rep.extras["delta_max"] = range.fixed_zero ? 0.0 : range.hi;
}

}  // namespace detail

/// Hardy quotient: lhs = ||f/rho^{beta/q}||_q, rhs = q^{1-1/n} times the
/// gradient norm or the full W^{1,n} norm. The ratio is the constant this f
/// certifies from below.
inline InequalityReport hardy_ratio(const RadialProfile& f, double q, double beta,
                                    const ModelParams& params,
                                    HardyDenominator den = HardyDenominator::GradientOnly,
                                    double tol = 1e-11) {
    if (!(q >= params.n)) {
        throw std::domain_error("hardy_ratio: requires q >= n");
    }
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("hardy_ratio: requires 0 <= beta < n");
    }
    if (is_zero_profile(f)) {
        throw std::domain_error("hardy_ratio: profile is identically zero");
    }
    InequalityReport rep;
    const NormResult lhs = weighted_lq_norm_detail(f, NormSpec(q, beta), params, tol);
    const NormResult den_norm = den == HardyDenominator::GradientOnly
                                    ? dirichlet_norm_detail(f, params, tol)
                                    : sobolev_norm_detail(f, params, tol);
    rep.lhs = lhs.norm;
    rep.rhs = std::pow(q, 1.0 - 1.0 / params.n) * den_norm.norm;
    detail::track_error(rep, lhs.integral);
    detail::track_error(rep, den_norm.integral);
    detail::finish_ratio(rep);
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"q", q},
                  {"beta", beta},
                  {"full_sobolev", den == HardyDenominator::FullSobolev ? 1.0 : 0.0}};
    rep.extras = {{"denominator_norm", den_norm.norm}};
    return rep;
}

/// Weighted Trudinger-Moser functional int Phi_n(alpha |f|^{n'}) rho^{-beta} dV.
/// No normalization is applied here; this is the raw functional.
inline QuadResult tm_functional_detail(const RadialProfile& f, double alpha, double beta,
                                       const ModelParams& params, double tol = 1e-11) {
    if (!(alpha >= 0.0)) {
        throw std::domain_error("tm_functional: requires alpha >= 0");
    }
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("tm_functional: requires 0 <= beta < n");
    }
    if (is_zero_profile(f) || alpha == 0.0) {
        return QuadResult{0.0, 0.0, 0};
    }
    const int n = params.n;
    const double np = params.n_prime;
    // Phi_n(alpha|f|^{n'}) ~ rho^{n'(n-1)} = rho^n near 0 when f(0) = 0
    double mu = -beta + (n - 1);
    if (f.values.front() == 0.0) {
        mu += n;
    }
    auto g = [&](double rho) {
        const double v = std::abs(evaluate(f, rho));
        if (v == 0.0) {
            return 0.0;
        }
        return truncated_exp(n, alpha * std::pow(v, np)) *
               detail::weighted_kernel(1.0, 1.0, rho, -beta, n);
    };
    QuadResult r = radial_integral(g, support_radius(f), -mu, tol, f.knots);
    r.value *= params.omega;
    r.abs_error_estimate *= params.omega;
    return r;
}

inline double tm_functional(const RadialProfile& f, double alpha, double beta,
                            const ModelParams& params, double tol = 1e-11) {
    return tm_functional_detail(f, alpha, beta, params, tol).value;
}

/// Two-weight Trudinger-Moser bound: after normalizing f to unit Dirichlet
/// norm (the theorems assume ||grad f||_n <= 1),
///   lhs = int Phi_n(alpha|f|^{n'}) rho^{-beta1} dV,
///   rhs = (int |f|^n rho^{-beta2} dV)^{1-delta}.
/// The ratio estimates the bounding constant from below. delta = 0 with
/// beta1 = beta2 gives the single-weight form.
inline InequalityReport tm_weighted_ratio(const RadialProfile& f, double alpha, double beta1,
                                          double beta2, double delta, const ModelParams& params,
                                          double tol = 1e-11) {
    if (!(alpha >= 0.0)) {
        throw std::domain_error("tm_weighted_ratio: requires alpha >= 0");
    }
    if (!(beta1 >= 0.0 && beta1 < params.n)) {
        throw std::domain_error("tm_weighted_ratio: requires 0 <= beta1 < n");
    }
    const DeltaRange delta_range =
        detail::require_delta(delta, beta1, beta2, params.n, "tm_weighted_ratio");
    InequalityReport rep;
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"alpha", alpha},
                  {"beta1", beta1},
                  {"beta2", beta2},
                  {"delta", delta}};
    detail::report_delta_range(rep, delta_range);
    if (is_zero_profile(f)) {
        rep.degenerate = true;
        return rep;
    }
    const double grad = dirichlet_norm(f, params, tol);
    const RadialProfile g = scale(f, 1.0 / grad);
    rep.params["dirichlet_norm_input"] = grad;

    const QuadResult lhs = tm_functional_detail(g, alpha, beta1, params, tol);
    rep.lhs = lhs.value;
    detail::track_error(rep, lhs);
    if (delta < 1.0) {
        const QuadResult decay = weighted_power_integral(g, params.n, -beta2, params, tol);
        rep.rhs = std::pow(decay.value, 1.0 - delta);
        rep.extras["decay_integral"] = decay.value;
        detail::track_error(rep, decay);
    } else {
        rep.rhs = 1.0;  // (.)^(1-delta) collapses at delta = 1
    }
    detail::finish_ratio(rep);
    return rep;
}

/// Denominated Trudinger-Moser form: the integrand of the lhs carries the
/// damping (1+|f|)^{-n'}, and the rhs is int |f|^n rho^{-beta} dV (again after
/// unit-Dirichlet normalization).
inline InequalityReport tm_denominated_ratio(const RadialProfile& f, double alpha, double beta,
                                             const ModelParams& params, double tol = 1e-11) {
    if (!(alpha >= 0.0)) {
        throw std::domain_error("tm_denominated_ratio: requires alpha >= 0");
    }
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("tm_denominated_ratio: requires 0 <= beta < n");
    }
    InequalityReport rep;
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"alpha", alpha},
                  {"beta", beta}};
    if (is_zero_profile(f)) {
        rep.degenerate = true;
        return rep;
    }
    const double grad = dirichlet_norm(f, params, tol);
    const RadialProfile g = scale(f, 1.0 / grad);
    rep.params["dirichlet_norm_input"] = grad;

    const int n = params.n;
    const double np = params.n_prime;
    double mu = -beta + (n - 1);
    if (g.values.front() == 0.0) {
        mu += n;
    }
    auto integrand = [&](double rho) {
        const double v = std::abs(evaluate(g, rho));
        if (v == 0.0) {
            return 0.0;
        }
        return truncated_exp(n, alpha * std::pow(v, np)) / std::pow(1.0 + v, np) *
               detail::weighted_kernel(1.0, 1.0, rho, -beta, n);
    };
    QuadResult lhs = alpha == 0.0
                         ? QuadResult{0.0, 0.0, 0}
                         : radial_integral(integrand, support_radius(g), -mu, tol, g.knots);
    lhs.value *= params.omega;
    lhs.abs_error_estimate *= params.omega;
    const QuadResult decay = weighted_power_integral(g, n, -beta, params, tol);
    rep.lhs = lhs.value;
    rep.rhs = decay.value;
    rep.extras["decay_integral"] = decay.value;
    detail::track_error(rep, lhs);
    detail::track_error(rep, decay);
    detail::finish_ratio(rep);
    return rep;
}

/// Hypotheses of the explicit CKN inequality; validation errors name the
/// violated condition.
struct CknParams {
    double p2;
    double p3;
    double b;
    double c;
    double delta;
    int n;
};

inline void validate_ckn(const CknParams& p) {
    if (p.n < 2) {
        throw std::domain_error("ckn: requires n >= 2");
    }
    if (!(p.p2 > 1.0)) {
        throw std::domain_error("ckn: requires 1 < p2 < infinity");
    }
    if (!(p.p3 > 0.0)) {
        throw std::domain_error("ckn: requires 0 < p3 < infinity");
    }
    if (!(p.delta > 0.0 && p.delta <= 1.0) || !(p.delta > (p.p3 - p.p2) / p.p3)) {
        throw std::domain_error("ckn: requires delta in (0,1] with delta > (p3-p2)/p3");
    }
    const double lhs_weight = p.b * (1.0 - p.delta) - p.c;
    const double weight_cap = p.n * (1.0 / p.p3 - (1.0 - p.delta) / p.p2);
    if (!(lhs_weight >= 0.0 && lhs_weight < weight_cap)) {
        throw std::domain_error("ckn: requires 0 <= b(1-delta) - c < n(1/p3 - (1-delta)/p2)");
    }
    const double p_star = p.delta * p.p2 * p.p3 / (p.p2 - (1.0 - p.delta) * p.p3);
    if (!(p.n <= p_star)) {
        throw std::domain_error("ckn: requires n <= delta*p2*p3/(p2 - (1-delta)*p3)");
    }
}

/// Interpolation exponent of the CKN factorization,
/// p* = delta p2 p3 / (p2 - (1-delta) p3).
inline double ckn_interpolation_exponent(const CknParams& p) {
    return p.delta * p.p2 * p.p3 / (p.p2 - (1.0 - p.delta) * p.p3);
}

/// Weight power of the Hardy norm inside the CKN factorization: the middle
/// norm is ||f / rho^{(b(1-delta)-c)/delta}||_{p*}, i.e. beta = gamma * p*.
inline double ckn_hardy_beta(const CknParams& p) {
    return (p.b * (1.0 - p.delta) - p.c) / p.delta * ckn_interpolation_exponent(p);
}

/// Explicit CKN inequality: lhs = ||rho^c f||_{p3},
/// rhs = C3_hat ||grad f||_n^delta ||rho^b f||_{p2}^{1-delta} with
/// C3_hat = C2_hat^delta p*^{delta - delta/n}. Also reports the Hoelder
/// factorization through the middle norm and its slack.
inline InequalityReport ckn_explicit(const RadialProfile& f, const CknParams& p, double c2_hat,
                                     const ModelParams& params, double tol = 1e-11) {
    validate_ckn(p);
    if (p.n != params.n) {
        throw std::domain_error("ckn: dimension mismatch between CknParams and ModelParams");
    }
    if (!(c2_hat > 0.0)) {
        throw std::domain_error("ckn: requires C2_hat > 0");
    }
    const double p_star = ckn_interpolation_exponent(p);
    const double c3_hat = std::pow(c2_hat, p.delta) * std::pow(p_star, p.delta - p.delta / p.n);

    InequalityReport rep;
    rep.params = {{"n", static_cast<double>(p.n)}, {"p2", p.p2},       {"p3", p.p3},
                  {"b", p.b},                      {"c", p.c},         {"delta", p.delta},
                  {"c2_hat", c2_hat}};
    rep.extras = {{"p_star", p_star}, {"c3_hat", c3_hat}};
    if (is_zero_profile(f)) {
        rep.degenerate = true;
        return rep;
    }

    // ||rho^c f||_{p3}: weight rho^{c p3}, i.e. beta = -c p3
    const NormResult lhs = weighted_lq_norm_detail(f, NormSpec(p.p3, -p.c * p.p3), params, tol);
    const NormResult grad = dirichlet_norm_detail(f, params, tol);
    const NormResult outer = weighted_lq_norm_detail(f, NormSpec(p.p2, -p.b * p.p2), params, tol);
    const double gamma = (p.b * (1.0 - p.delta) - p.c) / p.delta;
    const NormResult mid =
        weighted_lq_norm_detail(f, NormSpec(p_star, gamma * p_star), params, tol);

    rep.lhs = lhs.norm;
    rep.rhs = c3_hat * std::pow(grad.norm, p.delta) * std::pow(outer.norm, 1.0 - p.delta);
    detail::track_error(rep, lhs.integral);
    detail::track_error(rep, grad.integral);
    detail::track_error(rep, outer.integral);
    detail::track_error(rep, mid.integral);
    detail::finish_ratio(rep);

    const double holder_rhs = std::pow(mid.norm, p.delta) * std::pow(outer.norm, 1.0 - p.delta);
    rep.extras["middle_norm"] = mid.norm;
    rep.extras["holder_lhs"] = lhs.norm;
    rep.extras["holder_rhs"] = holder_rhs;
    rep.extras["holder_slack_rel"] = holder_rhs > 0.0 ? (holder_rhs - lhs.norm) / holder_rhs : 0.0;
    return rep;
}

/// Interpolation CKN quotient:
///   lhs = ||f/rho^{beta1/q}||_q,
///   rhs = q^{1-1/n} ||grad f||_n^{1-n(1-delta)/q} ||f/rho^{beta2/n}||_n^{n(1-delta)/q}.
inline InequalityReport gn_ratio(const RadialProfile& f, double q, double beta1, double beta2,
                                 double delta, const ModelParams& params, double tol = 1e-11) {
    if (!(q >= params.n)) {
        throw std::domain_error("gn_ratio: requires q >= n");
    }
    if (!(beta1 >= 0.0 && beta1 < params.n)) {
        throw std::domain_error("gn_ratio: requires 0 <= beta1 < n");
    }
    const DeltaRange delta_range =
        detail::require_delta(delta, beta1, beta2, params.n, "gn_ratio");
    if (is_zero_profile(f)) {
        throw std::domain_error("gn_ratio: profile is identically zero");
    }
    InequalityReport rep;
    detail::report_delta_range(rep, delta_range);
    const NormResult lhs = weighted_lq_norm_detail(f, NormSpec(q, beta1), params, tol);
    const NormResult grad = dirichlet_norm_detail(f, params, tol);
    const NormResult decay =
        weighted_lq_norm_detail(f, NormSpec(params.n, beta2), params, tol);
    const double interp = params.n * (1.0 - delta) / q;
    rep.lhs = lhs.norm;
    rep.rhs = std::pow(q, 1.0 - 1.0 / params.n) * std::pow(grad.norm, 1.0 - interp) *
              std::pow(decay.norm, interp);
    detail::track_error(rep, lhs.integral);
    detail::track_error(rep, grad.integral);
    detail::track_error(rep, decay.integral);
    detail::finish_ratio(rep);
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"q", q},
                  {"beta1", beta1},
                  {"beta2", beta2},
                  {"delta", delta}};
    if (q > params.n) {
        rep.extras["t"] = params.n * q / (q - params.n);  // change of variables 1 - n/q = n/t
    }
    return rep;
}

/// t-parametrized route to the same quotient: computes the un-rooted integral
/// form at t = nq/(q-n) and takes the q-th root at the end. Must agree with
/// gn_ratio after the substitution.
inline InequalityReport gn_ratio_t_form(const RadialProfile& f, double t, double beta1,
                                        double beta2, double delta, const ModelParams& params,
                                        double tol = 1e-11) {
    if (!(t > params.n)) {
        throw std::domain_error("gn_ratio_t_form: requires t > n");
    }
    const double q = params.n * t / (t - params.n);
    if (!(q >= params.n)) {
        throw std::domain_error("gn_ratio_t_form: induced q falls below n");
    }
    detail::require_delta(delta, beta1, beta2, params.n, "gn_ratio_t_form");
    if (is_zero_profile(f)) {
        throw std::domain_error("gn_ratio_t_form: profile is identically zero");
    }
    const double exponent = t * params.n / (t - params.n);  // = q
    const QuadResult lhs_int = weighted_power_integral(f, exponent, -beta1, params, tol);
    const QuadResult grad_int = dirichlet_norm_detail(f, params, tol).integral;
    const QuadResult decay_int = weighted_power_integral(f, params.n, -beta2, params, tol);

    // lhs_int <= C^q q^{q(1-1/n)} grad^{t/(t-n)-(1-delta)} decay^{1-delta}
    const double grad_pow = t / (t - params.n) - (1.0 - delta);
    const double log_env = exponent * (1.0 - 1.0 / params.n) * std::log(exponent) +
                           grad_pow * std::log(grad_int.value) +
                           (1.0 - delta) * std::log(decay_int.value);
    InequalityReport rep;
    rep.lhs = std::pow(lhs_int.value, 1.0 / exponent);
    rep.rhs = std::exp(log_env / exponent);
    detail::track_error(rep, lhs_int);
    detail::track_error(rep, grad_int);
    detail::track_error(rep, decay_int);
    detail::finish_ratio(rep);
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"t", t},
                  {"beta1", beta1},
                  {"beta2", beta2},
                  {"delta", delta}};
    rep.extras = {{"q", q}};
    return rep;
}

/// Denominated CKN quotient:
///   lhs = ||f/(rho^{beta/q} (1+|f|)^{n'/q})||_q,
///   rhs = q^{1-1/n} ||grad f||_n^{1-n/q} ||f/rho^{beta/n}||_n^{n/q}.
inline InequalityReport gn3_ratio(const RadialProfile& f, double q, double beta,
                                  const ModelParams& params, double tol = 1e-11) {
    if (!(q >= params.n)) {
        throw std::domain_error("gn3_ratio: requires q >= n");
    }
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("gn3_ratio: requires 0 <= beta < n");
    }
    if (is_zero_profile(f)) {
        throw std::domain_error("gn3_ratio: profile is identically zero");
    }
    const int n = params.n;
    const double np = params.n_prime;
    double mu = -beta + (n - 1);
    if (f.values.front() == 0.0) {
        mu += q;
    }
    auto integrand = [&](double rho) {
        const double v = std::abs(evaluate(f, rho));
        if (v == 0.0) {
            return 0.0;
        }
        return detail::weighted_kernel(v, q, rho, -beta, n) / std::pow(1.0 + v, np);
    };
    QuadResult lhs_int = radial_integral(integrand, support_radius(f), -mu, tol, f.knots);
    lhs_int.value *= params.omega;
    lhs_int.abs_error_estimate *= params.omega;

    const NormResult grad = dirichlet_norm_detail(f, params, tol);
    const NormResult decay = weighted_lq_norm_detail(f, NormSpec(n, beta), params, tol);
    InequalityReport rep;
    rep.lhs = std::pow(lhs_int.value, 1.0 / q);
    rep.rhs = std::pow(q, 1.0 - 1.0 / n) * std::pow(grad.norm, 1.0 - n / q) *
              std::pow(decay.norm, static_cast<double>(n) / q);
    detail::track_error(rep, lhs_int);
    detail::track_error(rep, grad.integral);
    detail::track_error(rep, decay.integral);
    detail::finish_ratio(rep);
    rep.params = {{"n", static_cast<double>(n)}, {"q", q}, {"beta", beta}};
    // The damped numerator is deliberately not 1-homogeneous; its supremum
    // over the scale orbit c f (attained as c -> 0) is the plain quotient,
    // which is the scale-invariant object behind the asymptotic constant.
    const NormResult plain = weighted_lq_norm_detail(f, NormSpec(q, beta), params, tol);
    rep.extras["plain_lhs"] = plain.norm;
    rep.extras["b5_quotient"] = rep.rhs > 0.0 ? plain.norm / rep.rhs : 0.0;
    return rep;
}

/// Uncertainty-type principle: the inequality is lhs >= rhs with
///   lhs = ||grad f||_n (int rho^{q'} |f|^{q'} dV)^{1/q'},
///   rhs = C2_hat^{-1} q^{1/n-1} int rho^{(q-beta)/q} |f|^2 dV.
/// Also reports the Hoelder sub-step pairing the moment against the Hardy
/// norm times the q'-moment.
inline InequalityReport uncertainty_check(const RadialProfile& f, double q, double beta,
                                          double c2_hat, const ModelParams& params,
                                          double tol = 1e-11) {
    if (!(q >= params.n)) {
        throw std::domain_error("uncertainty_check: requires q >= n");
    }
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("uncertainty_check: requires 0 <= beta < n");
    }
    if (!(c2_hat > 0.0)) {
        throw std::domain_error("uncertainty_check: requires C2_hat > 0");
    }
    const double qp = q / (q - 1.0);
    InequalityReport rep;
    rep.params = {{"n", static_cast<double>(params.n)},
                  {"q", q},
                  {"beta", beta},
                  {"c2_hat", c2_hat},
                  {"q_conjugate", qp}};
    if (is_zero_profile(f)) {
        rep.degenerate = true;
        return rep;
    }
    const NormResult grad = dirichlet_norm_detail(f, params, tol);
    const QuadResult moment_int = weighted_power_integral(f, qp, qp, params, tol);
    const QuadResult mixed_int =
        weighted_power_integral(f, 2.0, (q - beta) / q, params, tol);
    const double moment = std::pow(moment_int.value, 1.0 / qp);
    rep.lhs = grad.norm * moment;
    rep.rhs = std::pow(q, 1.0 / params.n - 1.0) / c2_hat * mixed_int.value;
    detail::track_error(rep, grad.integral);
    detail::track_error(rep, moment_int);
    detail::track_error(rep, mixed_int);
    detail::finish_ratio(rep);

    const NormResult hardy_norm = weighted_lq_norm_detail(f, NormSpec(q, beta), params, tol);
    rep.extras["holder_lhs"] = mixed_int.value;
    rep.extras["holder_rhs"] = hardy_norm.norm * moment;
    rep.extras["holder_slack_rel"] =
        rep.extras["holder_rhs"] > 0.0
            ? (rep.extras["holder_rhs"] - mixed_int.value) / rep.extras["holder_rhs"]
            : 0.0;
    rep.extras["moment_norm"] = moment;
    return rep;
}

}  // namespace hyperlab
