#include "renyisec/spectrum.hpp"

#include <cmath>
#include <vector>

#include "renyisec/logspace.hpp"
#include "renyisec/measures.hpp"

namespace renyisec {

namespace {

std::vector<double> log_factorials(unsigned n) {
    std::vector<double> lf(n + 1, 0.0);
    for (unsigned i = 2; i <= n; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));
    return lf;
}

double binom_count(unsigned n, unsigned k) {
    // C(n+k-1, k-1), done in doubles (guard comparison only)
    double v = 1.0;
    for (unsigned i = 1; i < k; ++i) v *= static_cast<double>(n + i) / i;
    return v;
}

} // namespace

double exact_tail(const JointSource& source, unsigned n, double r) {
    const std::size_t k = source.a_size() * source.e_size();
    if (binom_count(n, static_cast<unsigned>(k)) > 1e8)
        raise(Errc::size_overflow, "exact_tail: type count exceeds 1e8");

    const CondView cv = condition(source);
    std::vector<double> log_p(k), dens(k);
    std::vector<bool> zero(k);
    for (std::size_t a = 0; a < source.a_size(); ++a)
        for (std::size_t e = 0; e < source.e_size(); ++e) {
            const std::size_t j = a * source.e_size() + e;
            const double p = source.p(a, e);
            zero[j] = p <= 0.0;
            log_p[j] = safe_log(p);
            dens[j] = zero[j] ? 0.0 : -std::log(cv.cond(a, e));
        }

    const std::vector<double> lf = log_factorials(n);
    const double threshold = n * r - 1e-11 * (1.0 + std::abs(n * r)); // ties included

    LogAccumulator tail, total;
    std::vector<unsigned> counts(k, 0);
    // Streaming enumeration of compositions of n into k parts.
    const auto recurse = [&](auto&& self, std::size_t j, unsigned left, double log_mass,
                             double density) -> void {
        if (j + 1 == k) {
            if (zero[j] && left > 0) return;
            const double lm = log_mass + left * log_p[j] - lf[left];
            const double d = density + left * dens[j];
            total.add(lm);
            if (d >= threshold) tail.add(lm);
            return;
        }
        const unsigned max_c = zero[j] ? 0u : left;
        for (unsigned c = 0; c <= max_c; ++c)
            self(self, j + 1, left - c, log_mass + c * log_p[j] - lf[c], density + c * dens[j]);
    };
    recurse(recurse, 0, n, lf[n], 0.0);

    const double log_total = total.result();
    if (std::abs(std::exp(log_total) - 1.0) > 1e-9)
        raise(Errc::domain_error, "exact_tail: type masses failed to sum to 1");
    const double lt = tail.result();
    return lt == NEG_INF ? 0.0 : std::exp(lt);
}

CramerResult cramer_exponent(const JointSource& source, double r) {
    if (r < 0.0) raise(Errc::domain_error, "cramer_exponent: r must be >= 0");
    // Objective t(r - H_{1-t}) = t r - log E[P_{A|E}^{-t}] (a Legendre transform).
    std::vector<double> log_joint, log_cond;
    const CondView cv = condition(source);
    for (std::size_t a = 0; a < source.a_size(); ++a)
        for (std::size_t e = 0; e < source.e_size(); ++e)
            if (source.p(a, e) > 0.0) {
                log_joint.push_back(std::log(source.p(a, e)));
                log_cond.push_back(std::log(cv.cond(a, e)));
            }
    auto obj = [&](double t) {
        LogAccumulator acc;
        for (std::size_t i = 0; i < log_joint.size(); ++i)
            acc.add(log_joint[i] - t * log_cond[i]);
        return t * r - acc.result();
    };
    constexpr double T_CAP = 50.0;
    const OptResult opt = maximize_concave(obj, 0.0, T_CAP);
    CramerResult res{opt.value, opt.argmax_t, false};
    if (opt.argmax_t > T_CAP - 1e-6) {
        res.capped = true;
        std::fprintf(stderr, "cramer_exponent: optimum capped at t = %.0f (r above the "
                             "entropy-density range; exponent grows without bound)\n", T_CAP);
    }
    return res;
}

double collision_sum_exact(const JointSource& source, unsigned n, std::size_t m) {
    if (n > 1000000u) raise(Errc::size_overflow, "collision_sum_exact: n exceeds 1e6");
    const CondView cv = condition(source);
    const std::size_t ke = source.e_size();

    std::vector<double> log_pe(ke), log_kappa(ke);
    for (std::size_t e = 0; e < ke; ++e) {
        double kappa = 0.0;
        for (std::size_t a = 0; a < source.a_size(); ++a) kappa += cv.cond(a, e) * cv.cond(a, e);
        log_pe[e] = std::log(cv.p_e[e]);
        log_kappa[e] = std::log(kappa);
    }

    const std::vector<double> lf = log_factorials(n);
    const double inv_m = 1.0 / static_cast<double>(m);
    double expectation = 0.0;
    std::vector<unsigned> counts(ke, 0);
    const auto recurse = [&](auto&& self, std::size_t j, unsigned left, double log_mass,
                             double log_pi) -> void {
        if (j + 1 == ke) {
            const double lm = log_mass + left * log_pe[j] - lf[left];
            const double pi = std::exp(log_pi + left * log_kappa[j]);
            expectation += std::exp(lm) * (pi + inv_m * (1.0 - pi));
            return;
        }
        for (unsigned c = 0; c <= left; ++c)
            self(self, j + 1, left - c, log_mass + c * log_pe[j] - lf[c],
                 log_pi + c * log_kappa[j]);
    };
    recurse(recurse, 0, n, lf[n], 0.0);
    return expectation;
}

} // namespace renyisec
