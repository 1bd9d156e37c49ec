#pragma once

// The Moser-type extremal sequence on H^n: a plateau of height
// ~ j^{(n-beta1-1)/(n-beta1)} inside rho <= e^{-j}, a logarithmic ramp down to
// rho = 1, normalized by D_j to unit Dirichlet n-norm. These profiles certify
// sharpness of the critical exponent alpha_{beta1} by blow-up.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperlab/geometry.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/radial_profile.hpp"

namespace hyperlab {

struct MoserParams {
    double j;
    double beta1;
    int n;
    double d_j;  // normalization: D_j * j^{-beta1/(n(n-beta1))} -> 1 as j grows
};

/// Sampled profile of
///   f_j(rho) = omega^{-1/n} D_j j^{(n-b1-1)/(n-b1)} * { 1            rho <= e^-j
///                                                     , (-ln rho)/j  e^-j <= rho <= 1
///                                                     , 0            rho > 1 }
/// with D_j = (j^{-n/(n-b1)} int_{e^-j}^1 rho^-n sinh^{n-1} rho drho)^{-1/n}.
/// The mesh is logarithmically graded on [e^-j, 1] so the ramp is resolved;
/// in log radius the ramp is linear, so knot values are exact there.
inline std::pair<RadialProfile, MoserParams> moser_profile(double j, double beta1, int n,
                                                           int mesh) {
    if (!(j > 0.0)) {
        throw std::domain_error("moser_profile: requires j > 0");
    }
    if (!(beta1 >= 0.0 && beta1 < n)) {
        throw std::domain_error("moser_profile: requires 0 <= beta1 < n");
    }
    if (mesh < 16) {
        throw std::domain_error("moser_profile: requires mesh >= 16");
    }
    const ModelParams params = ModelParams::make(n);
    const double inner = std::exp(-j);

    const auto weight_integrand = [n, inner](double rho) {
        if (rho < inner) {
            return 0.0;
        }
        return std::pow(rho, -n) * std::pow(std::sinh(rho), n - 1);
    };
    // log-spaced breakpoints resolve the rho^{-n} growth across [e^-j, 1]
    std::vector<double> breaks;
    constexpr int kNormBreaks = 256;
    breaks.reserve(kNormBreaks + 1);
    for (int i = 0; i <= kNormBreaks; ++i) {
        breaks.push_back(std::exp(-j * (1.0 - static_cast<double>(i) / kNormBreaks)));
    }
    const QuadResult norm_int = radial_integral(weight_integrand, 1.0, 0.0, 1e-12, breaks);
    const double d_j = std::pow(std::pow(j, -n / (n - beta1)) * norm_int.value, -1.0 / n);
    const double amplitude =
        std::pow(params.omega, -1.0 / n) * d_j * std::pow(j, (n - beta1 - 1.0) / (n - beta1));

    std::vector<double> knots;
    std::vector<double> values;
    knots.reserve(mesh + 2);
    values.reserve(mesh + 2);
    knots.push_back(0.0);
    values.push_back(amplitude);
    for (int i = 0; i <= mesh; ++i) {
        const double frac = static_cast<double>(i) / mesh;  // -ln(rho)/j = 1 - frac exactly
        knots.push_back(std::exp(-j * (1.0 - frac)));
        values.push_back(amplitude * (1.0 - frac));
    }
    return {make_profile(std::move(knots), std::move(values)),
            MoserParams{j, beta1, n, d_j}};
}

}  // namespace hyperlab
