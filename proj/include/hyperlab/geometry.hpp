#pragma once

// Poincare ball model of H^n: metric factors, geodesic distance, the polar
// weight sinh^{n-1}(rho), and the constants attached to the sharp inequalities
// (the critical exponent alpha_beta and the asymptotic constant B).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperlab {

/// Surface area of the unit sphere S^{n-1} in R^n, 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(int n) {
    if (n < 2) {
        throw std::domain_error("sphere_area: requires dimension n >= 2, got " + std::to_string(n));
    }
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Ambient-space record consumed by every functional: the dimension n of H^n,
/// the conjugate exponent n' = n/(n-1), and omega = area of S^{n-1}.
struct ModelParams {
    int n;
    double n_prime;
    double omega;

    static ModelParams make(int n) {
        if (n < 2) {
            throw std::domain_error("ModelParams: requires dimension n >= 2, got " + std::to_string(n));
        }
        return ModelParams{n, static_cast<double>(n) / (n - 1), sphere_area(n)};
    }
};

/// Critical Trudinger-Moser exponent n * omega^{1/(n-1)} * (1 - beta/n) for
/// the weight rho^{-beta}.
inline double alpha_beta(const ModelParams& params, double beta) {
    if (!(beta >= 0.0 && beta < params.n)) {
        throw std::domain_error("alpha_beta: requires 0 <= beta < n");
    }
    return params.n * std::pow(params.omega, 1.0 / (params.n - 1)) * (1.0 - beta / params.n);
}

/// Asymptotically sharp Hardy constant B = (alpha_beta * n' * e)^{-1/n'},
/// the q -> infinity limit of the normalized Hardy quotients.
inline double sharp_constant_B(const ModelParams& params, double beta) {
    const double a = alpha_beta(params, beta);
    return std::pow(a * params.n_prime * std::numbers::e, -1.0 / params.n_prime);
}

/// Ball-model quantities at Euclidean radius |x| = x_norm: geodesic distance
/// rho = ln((1+|x|)/(1-|x|)), the volume element factor 2^n/(1-|x|^2)^n and
/// the gradient factor ((1-|x|^2)/2)^2.
struct BallPoint {
    double rho;
    double volume_factor;
    double gradient_factor;
};

inline BallPoint ball_to_geodesic(double x_norm, int n) {
    if (!(x_norm >= 0.0 && x_norm < 1.0)) {
        throw std::domain_error("ball_to_geodesic: requires 0 <= |x| < 1 (interior of the ball)");
    }
    const double one_minus_sq = (1.0 - x_norm) * (1.0 + x_norm);
    return BallPoint{
        std::log1p(x_norm) - std::log1p(-x_norm),
        std::pow(2.0 / one_minus_sq, n),
        0.25 * one_minus_sq * one_minus_sq,
    };
}

/// Radial Jacobian of the polar decomposition on H^n: sinh^{n-1}(rho).
inline double polar_weight(double rho, int n) {
    if (!(rho >= 0.0)) {
        throw std::domain_error("polar_weight: requires rho >= 0");
    }
    return std::pow(std::sinh(rho), n - 1);
}

}  // namespace hyperlab
