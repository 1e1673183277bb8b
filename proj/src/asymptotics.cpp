#include "renyisec/asymptotics.hpp"

#include <cmath>

#include "renyisec/logspace.hpp"

namespace renyisec {

namespace {

struct Atoms {
    std::vector<double> log_joint; // log P_AE over positive atoms
    std::vector<double> log_cond;  // log P_{A|E} over the same atoms
};

Atoms positive_atoms(const JointSource& src) {
    const CondView cv = condition(src);
    Atoms out;
    for (std::size_t a = 0; a < src.a_size(); ++a)
        for (std::size_t e = 0; e < src.e_size(); ++e) {
            const double p = src.p(a, e);
            if (p > 0.0) {
                out.log_joint.push_back(std::log(p));
                out.log_cond.push_back(std::log(cv.cond(a, e)));
            }
        }
    return out;
}

// f(u) = sum P_AE * P_{A|E}^u and its derivative, scaled jointly for stability.
// Returns (log f(u), f'(u)/f(u)).
std::pair<double, double> log_f_and_ratio(const Atoms& at, double u) {
    LogAccumulator acc;
    for (std::size_t i = 0; i < at.log_joint.size(); ++i)
        acc.add(at.log_joint[i] + u * at.log_cond[i]);
    const double logf = acc.result();
    double ratio = 0.0;
    for (std::size_t i = 0; i < at.log_joint.size(); ++i)
        ratio += std::exp(at.log_joint[i] + u * at.log_cond[i] - logf) * at.log_cond[i];
    return {logf, ratio};
}

// t * H_{1+t}(A|E) = -log f(t); valid for every t where f is finite.
double t_times_H(const Atoms& at, double t) {
    LogAccumulator acc;
    for (std::size_t i = 0; i < at.log_joint.size(); ++i)
        acc.add(at.log_joint[i] + t * at.log_cond[i]);
    return -acc.result();
}

} // namespace

double critical_rate_at(const JointSource& source, double u, Form form) {
    if (u <= -1.0 || u > 1.0)
        raise(Errc::domain_error, "critical_rate_at: derivative argument must be in (-1, 1]");
    if (form == Form::std_form) {
        const Atoms at = positive_atoms(source);
        const auto [logf, ratio] = log_f_and_ratio(at, u);
        (void)logf;
        return -ratio;
    }

    // d/du [ -(1+u) log Z(u) ],  Z(u) = sum_e S_e(u)^{1/(1+u)},
    // S_e(u) = sum_a P_AE(a,e)^{1+u}.
    const double op1 = 1.0 + u;
    double z = 0.0, zp = 0.0;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        LogAccumulator acc;
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const double p = source.p(a, e);
            if (p > 0.0) acc.add(op1 * std::log(p));
        }
        const double log_se = acc.result();
        if (log_se == NEG_INF) continue;
        double ratio = 0.0; // S_e' / S_e
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const double p = source.p(a, e);
            if (p > 0.0) {
                const double lp = std::log(p);
                ratio += std::exp(op1 * lp - log_se) * lp;
            }
        }
        const double term = std::exp(log_se / op1);
        z += term;
        zp += term * (-log_se / (op1 * op1) + ratio / op1);
    }
    return -std::log(z) - op1 * zp / z;
}

double equiv_limit(const JointSource& source, double s, double r, Sign sign, Form form) {
    if (r < 0.0) raise(Errc::domain_error, "equiv_limit: rate must be >= 0");
    if (sign == Sign::plus) {
        if (s < 0.0 || s > 1.0) raise(Errc::domain_error, "equiv_limit: plus needs s in [0,1]");
        const Measure h = (form == Form::std_form) ? cond_renyi_H(source, s)
                                                   : cond_renyi_H_up(source, s);
        return std::max(0.0, r - h.nats);
    }

    if (s <= 0.0 || s > 1.0 || is_shannon(s))
        raise(Errc::domain_error, "equiv_limit: minus needs s in (0,1]");

    const double transition = critical_rate_at(source, -s, form);
    if (form == Form::std_form) {
        if (r >= transition) return r - cond_renyi_H(source, -s).nats;
        const Atoms at = positive_atoms(source);
        auto obj = [&](double t) { return (t * r - t_times_H(at, -t)) / s; };
        return maximize_concave(obj, 0.0, s).value;
    }

    if (r >= transition) return r - cond_renyi_H_up(source, -s).nats;
    // Objective (t/s)(r - H_{1-t|1-s}) with
    // t * H_{1-t|1-s} = (1-s) log Z_{s,t},
    // Z_{s,t} = sum_e P_E(e) (sum_a P_{A|E}(a|e)^{1-t})^{1/(1-s)}.
    const CondView cv = condition(source);
    auto obj = [&](double t) {
        LogAccumulator acc;
        for (std::size_t e = 0; e < source.e_size(); ++e) {
            LogAccumulator inner;
            for (std::size_t a = 0; a < source.a_size(); ++a) {
                const double c = cv.cond(a, e);
                if (c > 0.0) inner.add((1.0 - t) * std::log(c));
            }
            acc.add(std::log(cv.p_e[e]) + inner.result() / (1.0 - s));
        }
        return (t * r - (1.0 - s) * acc.result()) / s;
    };
    return maximize_concave(obj, 0.0, s).value;
}

double key_rate(const JointSource& source, double s, Form form) {
    if (s < -1.0 || s > 1.0) raise(Errc::domain_error, "key_rate: s must be in [-1,1]");
    if (s <= 0.0 || is_shannon(s)) return cond_renyi_H(source, 0.0).nats;
    return (form == Form::std_form) ? cond_renyi_H(source, s).nats
                                    : cond_renyi_H_up(source, s).nats;
}

ExponentResult exponent(const JointSource& source, double s, double r, Sign sign, Form form) {
    if (s < 0.0 || s > 1.0) raise(Errc::domain_error, "exponent: s must be in [0,1]");
    const Atoms at = positive_atoms(source);
    auto obj = [&](double t) { return t_times_H(at, t) - t * r; };

    ExponentResult res;
    res.below_critical = r < critical_rate_at(source, 1.0, form) - 1e-12;

    if (sign == Sign::minus) {
        const OptResult opt = maximize_concave(obj, 0.0, 1.0);
        res.value = opt.value;
        res.argmax_t = opt.argmax_t;
        return res;
    }

    // Half-open sup in the std form realized on the compact [s, 1-1e-9].
    const double hi = (form == Form::std_form) ? 1.0 - 1e-9 : 1.0;
    if (s >= hi) {
        res.value = std::max(0.0, obj(hi));
        res.argmax_t = hi;
        return res;
    }
    const OptResult opt = maximize_concave(obj, s, hi);
    res.value = std::max(0.0, opt.value);
    res.argmax_t = opt.argmax_t;
    return res;
}

} // namespace renyisec
