#pragma once

// Truncated exponential Phi_n, log-gamma, the Stirling quotient entering the
// large-q collapse of the Hardy constants, and the series kernel that decides
// on which side of the critical exponent a Trudinger-Moser bound sits.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperlab {

/// Natural log of Gamma(x) for x > 0 (Lanczos approximation, g = 7).
inline double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: requires x > 0");
    }
    static constexpr double kCoeff[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // reflection keeps the rational part on its accurate half-line
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = kCoeff[0];
    for (int i = 1; i < 9; ++i) {
        a += kCoeff[i] / (z + i);
    }
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

/// Phi_n(t) = e^t - sum_{k=0}^{n-2} t^k/k!  =  sum_{k>=n-1} t^k/k!, the
/// integrand kernel of every Trudinger-Moser functional here.
///
/// For small t the head subtraction cancels catastrophically, so the tail is
/// summed directly from k = n-1; for t >= n-1 the head is removed from e^t
/// with compensated summation.
inline double truncated_exp(int n, double t) {
    if (n < 2) {
        throw std::domain_error("truncated_exp: requires n >= 2");
    }
    if (!(t >= 0.0)) {
        throw std::domain_error("truncated_exp: requires t >= 0");
    }
    if (t == 0.0) {
        return 0.0;
    }
    if (t < n - 1) {
        double term = 1.0;
        for (int k = 1; k <= n - 1; ++k) {
            term *= t / k;
        }
        double sum = term;
        for (int k = n; term > 1e-17 * sum; ++k) {
            term *= t / k;
            sum += term;
        }
        return sum;
    }
    double sum = std::exp(t);
    double comp = 0.0;
    double head = 1.0;
    for (int k = 0; k <= n - 2; ++k) {
        const double y = -head - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        head *= t / (k + 1);
    }
    return sum;
}

/// Gamma(q/n' + 2)^{1/q} / (q/(e n'))^{1/n'}, evaluated in log space.
/// Tends to 1 as q -> infinity; quantifies how fast the factorial bound in
/// the Hardy chain collapses onto the asymptotic constant.
inline double stirling_ratio(double q, int n) {
    if (n < 2) {
        throw std::domain_error("stirling_ratio: requires n >= 2");
    }
    if (!(q >= n)) {
        throw std::domain_error("stirling_ratio: requires q >= n");
    }
    const double np = static_cast<double>(n) / (n - 1);
    return std::exp(log_gamma(q / np + 2.0) / q - (std::log(q) - 1.0 - std::log(np)) / np);
}

/// Direction of the critical correspondence between a Hardy-type constant C
/// and the Trudinger-Moser exponent threshold alpha* = 1/(n' e C^{n'}).
enum class CriticalDirection {
    ConstantToAlpha,
    AlphaToConstant,
};

/// The two maps are mutual inverses: C -> 1/(n' e C^{n'}) and
/// alpha -> (alpha n' e)^{-1/n'}.
inline double critical_map(double value, int n, CriticalDirection direction) {
    if (n < 2) {
        throw std::domain_error("critical_map: requires n >= 2");
    }
    if (!(value > 0.0)) {
        throw std::domain_error("critical_map: requires a positive value");
    }
    const double np = static_cast<double>(n) / (n - 1);
    if (direction == CriticalDirection::ConstantToAlpha) {
        return 1.0 / (np * std::numbers::e * std::pow(value, np));
    }
    return std::pow(value * np * std::numbers::e, -1.0 / np);
}

enum class SeriesVerdict : std::uint8_t {
    Converged,
    Diverging,
    Inconclusive,
};

inline const char* to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::Converged: return "Converged";
        case SeriesVerdict::Diverging: return "Diverging";
        default: return "Inconclusive";
    }
}

struct SeriesDiagnosis {
    double partial_sum = 0.0;
    double last_term = 0.0;
    double term_ratio_estimate = 0.0;
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
    int terms_used = 0;
};

/// Declared tail tolerance for the Converged verdict: the last term must fall
/// below this fraction of the partial sum.
inline constexpr double kSeriesTailTol = 1e-12;

/// Partial sums of  sum_{k : n'k >= n} (alpha n' k C^{n' w})^k / k!  with
/// w = weight_exponent (w = 1 gives the series bounding the weighted
/// Trudinger-Moser functional by a Hardy constant C; the same kernel serves
/// the CKN variants, whose weight-integral factor the caller attaches).
///
/// Terms are evaluated in log space: near divergence they reach ~1e300 and
/// the term ratio is the only stable quantity. The ratio tends to
/// alpha n' C^{n'w} e from below, so the Diverging verdict requires it to
/// exceed 1 for 10 consecutive terms.
inline SeriesDiagnosis equivalence_series(double alpha, double C, int n, double weight_exponent,
                                          int max_terms) {
    if (n < 2) {
        throw std::domain_error("equivalence_series: requires n >= 2");
    }
    if (!(alpha >= 0.0)) {
        throw std::domain_error("equivalence_series: requires alpha >= 0");
    }
    if (!(C > 0.0)) {
        throw std::domain_error("equivalence_series: requires C > 0");
    }
    if (max_terms < n) {
        throw std::domain_error("equivalence_series: requires max_terms >= n");
    }

    SeriesDiagnosis diag;
    if (alpha == 0.0) {
        diag.verdict = SeriesVerdict::Converged;
        return diag;
    }

    // n'k >= n  <=>  k >= n-1 for integer k
    const double np = static_cast<double>(n) / (n - 1);
    const double base = alpha * np * std::pow(C, np * weight_exponent);
    double prev_log_term = 0.0;
    int consecutive_growing = 0;
    for (int k = n - 1; k < n - 1 + max_terms; ++k) {
        const double log_term = k * std::log(base * k) - log_gamma(k + 1.0);
        const double term = std::exp(log_term);
        diag.partial_sum += term;
        diag.last_term = term;
        ++diag.terms_used;
        if (k > n - 1) {
            diag.term_ratio_estimate = std::exp(log_term - prev_log_term);
            consecutive_growing = diag.term_ratio_estimate > 1.0 ? consecutive_growing + 1 : 0;
            if (consecutive_growing >= 10) {
                diag.verdict = SeriesVerdict::Diverging;
                return diag;
            }
            if (diag.term_ratio_estimate < 1.0 && term <= kSeriesTailTol * diag.partial_sum) {
                diag.verdict = SeriesVerdict::Converged;
                return diag;
            }
        }
        prev_log_term = log_term;
    }
    diag.verdict = SeriesVerdict::Inconclusive;
    return diag;
}

}  // namespace hyperlab
