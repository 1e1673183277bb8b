#include "renyisec/gaussian.hpp"

#include <cmath>

namespace renyisec {

namespace {
constexpr double SQRT2 = 1.4142135623730951;
constexpr double LOG_SQRT_2PI = 0.9189385332046727;
} // namespace

double gaussian_cdf(double t) { return 0.5 * std::erfc(-t / SQRT2); }

double gaussian_pdf(double t) { return std::exp(-0.5 * t * t - LOG_SQRT_2PI); }

double log_gaussian_cdf(double t) {
    if (t > -8.0) return std::log(gaussian_cdf(t));
    // Asymptotic Mills series: Phi(t) = phi(t)/(-t) * (1 - 1/t^2 + 3/t^4 - ...).
    const double inv2 = 1.0 / (t * t);
    double series = 1.0, term = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -(2.0 * k - 1.0) * inv2;
        series += term;
        if (std::abs(term) < 1e-18 * series) break;
    }
    return -0.5 * t * t - LOG_SQRT_2PI - std::log(-t) + std::log(series);
}

double log_neg_log_gaussian_cdf(double t) {
    if (t < 5.0) {
        const double lp = log_gaussian_cdf(t);
        return std::log(-lp);
    }
    // -log Phi(t) = -log(1 - Q) = Q (1 + Q/2 + ...) with Q = Phi(-t) tiny,
    // so log(-log Phi(t)) = log Phi(-t) up to O(Q).
    return log_gaussian_cdf(-t);
}

} // namespace renyisec
