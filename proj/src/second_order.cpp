#include "renyisec/second_order.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "renyisec/gaussian.hpp"
#include "renyisec/logspace.hpp"

namespace renyisec {

namespace {

// log(2^{s/(1-s)} s^{s/(1-s)} (1-s)) evaluated in log form.
double log_const_gamma1(double s) {
    return s / (1.0 - s) * std::log(2.0 * s) + std::log(1.0 - s);
}

// log(2^{s + s/(1-s)} s^{s/(1-s)} (1-s)), the Psi_1 constant.
double log_const_psi1(double s) {
    return (s + s / (1.0 - s)) * std::log(2.0) + s / (1.0 - s) * std::log(s) +
           std::log(1.0 - s);
}

// log(2^{s + 1/(1-s)} s^{s/(1-s)} (1-s)), the case-C Gallager upper offset.
double log_const_caseC2_upper(double s) {
    return (s + 1.0 / (1.0 - s)) * std::log(2.0) + s / (1.0 - s) * std::log(s) +
           std::log(1.0 - s);
}

} // namespace

std::pair<double, double> gamma_bounds(double s, double l, const GaussianSpec& g) {
    if (!(s > 0.0 && s <= 1.0)) raise(Errc::domain_error, "gamma_bounds: s must be in (0,1]");
    if (!(g.v > 0.0)) raise(Errc::domain_error, "gamma_bounds: variance must be positive");
    const double se = std::min(s, 1.0 - 1e-6); // continuity at the s = 1 endpoint
    const double log_phi = log_gaussian_cdf(-l / std::sqrt(g.v));
    const double gamma1 = -log_const_gamma1(se) / se - log_phi / se;
    const double gamma2 = -(1.0 - se) / se * log_phi;
    return {gamma1, gamma2};
}

double log_psi1_integral(double s, double l, const GaussianSpec& g) {
    if (!(s > 0.0 && s < 1.0)) raise(Errc::domain_error, "psi_bounds: s must be in (0,1)");
    const double pw = 1.0 / (1.0 - s);

    if (g.v1 < 1e-14) {
        if (g.v2 < 1e-14) return l < 0.0 ? 0.0 : NEG_INF; // degenerate step
        return pw * log_gaussian_cdf(-l / std::sqrt(g.v2));
    }
    if (g.v2 < 1e-14) {
        // Phi-power degenerates to an indicator of {l + x < 0}.
        return log_gaussian_cdf(-l / std::sqrt(g.v1));
    }

    const double sd1 = std::sqrt(g.v1);
    // The log-integrand peaks near x* = -l V1 / (V1 + (1-s) V2); the window
    // must cover both the peak and the origin or large |l| runs lose the mass.
    const double x_star = -l * g.v1 / (g.v1 + (1.0 - s) * g.v2);
    const double lo = std::min(0.0, x_star) - 14.0 * sd1;
    const double hi = std::max(0.0, x_star) + 14.0 * sd1;

    auto log_integrand = [&](double x) {
        return pw * log_gaussian_cdf(-(l + x) / std::sqrt(g.v2)) -
               x * x / (2.0 * g.v1) - 0.5 * std::log(2.0 * M_PI * g.v1);
    };

    // Composite Simpson in log domain, doubling until stable.
    double prev = 0.0;
    for (int n = 1 << 10; n <= (1 << 18); n <<= 1) {
        const double h = (hi - lo) / n;
        LogAccumulator acc;
        for (int i = 0; i <= n; ++i) {
            double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc.add(std::log(w * h / 3.0) + log_integrand(lo + i * h));
        }
        const double cur = acc.result();
        if (n > (1 << 10) && std::abs(cur - prev) < 1e-11 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

std::pair<double, double> psi_bounds(double s, double l, const GaussianSpec& g) {
    if (!(s > 0.0 && s < 1.0)) raise(Errc::domain_error, "psi_bounds: s must be in (0,1)");
    if (!(g.v > 0.0)) raise(Errc::domain_error, "psi_bounds: variance must be positive");
    const double log_i = log_psi1_integral(s, l, g);
    const double psi1 = -log_const_psi1(s) / s - (1.0 - s) / s * log_i;
    const double psi2 = -(1.0 - s) / s * log_gaussian_cdf(-l / std::sqrt(g.v));
    return {psi1, psi2};
}

SecondOrderResult second_order_limit(const JointSource& source, double s, double l,
                                     SecondOrderCase which, Form form) {
    (void)form; // cases A and B share the same limit across both forms
    SecondOrderResult res;
    const GaussianSpec g = gaussian_spec(source);

    switch (which) {
    case SecondOrderCase::A_pos:
        if (!(s > 0.0 && s <= 1.0) || l < 0.0)
            raise(Errc::case_mismatch, "second_order_limit: case A+ needs s in (0,1], L >= 0");
        res.value = l;
        return res;
    case SecondOrderCase::A_neg:
        if (!(s > 0.0 && s <= 1.0) || l > 0.0)
            raise(Errc::case_mismatch, "second_order_limit: case A- needs s in (0,1], L <= 0");
        res.value = -s * l;
        return res;
    case SecondOrderCase::B: {
        if (!is_shannon(s)) raise(Errc::case_mismatch, "second_order_limit: case B needs s = 0");
        if (g.v < 1e-14) { res.value = std::max(l, 0.0); return res; }
        const double u = l / std::sqrt(g.v);
        res.value = l * gaussian_cdf(u) + std::sqrt(g.v) * gaussian_pdf(u);
        return res;
    }
    case SecondOrderCase::C_std: {
        if (!(s > 0.0 && s <= 1.0))
            raise(Errc::case_mismatch, "second_order_limit: case C needs s in (0,1]");
        const auto [g1, g2] = gamma_bounds(s, l, g);
        const double se = std::min(s, 1.0 - 1e-6);
        res.bounds = {std::max(g1, g2), g2 / (1.0 - se)};
        res.is_pair = true;
        return res;
    }
    case SecondOrderCase::C_up: {
        if (!(s > 0.0 && s < 1.0))
            raise(Errc::case_mismatch, "second_order_limit: case C (gallager) needs s in (0,1)");
        const auto [p1, p2] = psi_bounds(s, l, g);
        res.bounds = {std::max(p1, p2), p1 + log_const_caseC2_upper(s) / s};
        res.is_pair = true;
        return res;
    }
    }
    raise(Errc::case_mismatch, "second_order_limit: unknown case");
}

LargeLApprox large_L_approx(const JointSource& source, double s, double l, Form form,
                            Direction direction) {
    if (!(s > 0.0 && s <= 1.0)) raise(Errc::domain_error, "large_L_approx: s must be in (0,1]");
    if (direction == Direction::pos && l <= 0.0)
        raise(Errc::case_mismatch, "large_L_approx: pos direction needs L > 0");
    if (direction == Direction::neg && l >= 0.0)
        raise(Errc::case_mismatch, "large_L_approx: neg direction needs L < 0");
    const GaussianSpec g = gaussian_spec(source);
    LargeLApprox out;
    if (direction == Direction::neg) {
        out.value = -l * l / (2.0 * g.v);
        return out;
    }
    if (form == Form::std_form) out.value = l * l / (2.0 * s * g.v);
    else out.value = (1.0 - s) / (2.0 * s) * l * l / (g.v1 + g.v2 * (1.0 - s));
    return out;
}

} // namespace renyisec
