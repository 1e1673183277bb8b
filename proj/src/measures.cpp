#include "renyisec/measures.hpp"

#include <cmath>
#include <cstdio>

#include "renyisec/logspace.hpp"

namespace renyisec {

namespace {

// log sum_a P_AE(a,e)^{1+s} for one column, in log domain.
double log_col_power_sum(const JointSource& src, std::size_t e, double order) {
    LogAccumulator acc;
    for (std::size_t a = 0; a < src.a_size(); ++a) {
        const double p = src.p(a, e);
        if (p > 0.0) acc.add(order * std::log(p));
    }
    return acc.result();
}

double shannon_cond_entropy(const JointSource& src, const std::vector<double>& q_e) {
    double h = 0.0;
    for (std::size_t a = 0; a < src.a_size(); ++a)
        for (std::size_t e = 0; e < src.e_size(); ++e) {
            const double p = src.p(a, e);
            if (p > 0.0) h += p * (safe_log(q_e[e]) - std::log(p));
        }
    return h;
}

} // namespace

Measure renyi_divergence(const std::vector<double>& p, const std::vector<double>& q, double s) {
    if (s < -1.0) raise(Errc::domain_error, "renyi_divergence: s must be >= -1");
    if (p.size() != q.size()) raise(Errc::domain_error, "renyi_divergence: size mismatch");

    if (is_shannon(s)) {
        double d = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] > 0.0) {
                if (q[i] <= 0.0) return {std::numeric_limits<double>::infinity()};
                d += p[i] * std::log(p[i] / q[i]);
            }
        }
        return {d};
    }

    LogAccumulator acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0) {
            if (s > 0.0) return {std::numeric_limits<double>::infinity()};
            continue; // q^{-s} = q^{|s|} = 0: the atom drops out
        }
        acc.add((1.0 + s) * std::log(p[i]) - s * std::log(q[i]));
    }
    return {acc.result() / s};
}

Measure cond_renyi_H(const JointSource& source, double s,
                     const std::optional<std::vector<double>>& q_e) {
    if (s < -1.0) raise(Errc::domain_error, "cond_renyi_H: s must be >= -1");
    const std::vector<double> q = q_e ? *q_e : source.marginal_e();
    if (q.size() != source.e_size()) raise(Errc::domain_error, "cond_renyi_H: Q_E size mismatch");

    if (is_shannon(s)) return {shannon_cond_entropy(source, q)};

    // -D_{1+s}(P_AE || I_A x Q_E), evaluated columnwise in log domain.
    LogAccumulator acc;
    bool support_violation = false;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        const double col = log_col_power_sum(source, e, 1.0 + s);
        if (col == NEG_INF) continue;
        if (q[e] <= 0.0) { support_violation = true; continue; }
        acc.add(col - s * std::log(q[e]));
    }
    if (support_violation && s > 0.0) return {-std::numeric_limits<double>::infinity()};
    return {-acc.result() / s};
}

Measure cond_renyi_H_up(const JointSource& source, double s) {
    if (s <= -1.0) raise(Errc::domain_error, "cond_renyi_H_up: s must be > -1");
    if (is_shannon(s)) return {shannon_cond_entropy(source, source.marginal_e())};

    LogAccumulator acc;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        const double col = log_col_power_sum(source, e, 1.0 + s);
        if (col != NEG_INF) acc.add(col / (1.0 + s));
    }
    return {-(1.0 + s) / s * acc.result()};
}

Measure two_param_H(const JointSource& source, double s, double t) {
    if (is_shannon(s)) raise(Errc::domain_error, "two_param_H: s = 0 is outside the domain");
    if (t <= -1.0) raise(Errc::domain_error, "two_param_H: t must be > -1");

    const CondView cv = condition(source);
    LogAccumulator acc;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        LogAccumulator inner;
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const double c = cv.cond(a, e);
            if (c > 0.0) inner.add((1.0 + s) * std::log(c));
        }
        const double li = inner.result();
        if (li != NEG_INF) acc.add(std::log(cv.p_e[e]) + li / (1.0 + t));
    }
    return {-(1.0 + t) / s * acc.result()};
}

Measure gallager_phi(const JointSource& source, double s) {
    if (s >= 1.0) raise(Errc::domain_error, "gallager_phi: s must be < 1");
    LogAccumulator acc;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        const double col = log_col_power_sum(source, e, 1.0 / (1.0 - s));
        if (col != NEG_INF) acc.add((1.0 - s) * col);
    }
    return {acc.result()};
}

std::vector<double> tilted_QE(const JointSource& source, double s) {
    if (s <= -1.0) raise(Errc::domain_error, "tilted_QE: s must be > -1");
    std::vector<double> logw(source.e_size(), NEG_INF);
    LogAccumulator norm;
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        const double col = log_col_power_sum(source, e, 1.0 + s);
        if (col != NEG_INF) {
            logw[e] = col / (1.0 + s);
            norm.add(logw[e]);
        }
    }
    const double z = norm.result();
    std::vector<double> q(source.e_size(), 0.0);
    for (std::size_t e = 0; e < source.e_size(); ++e)
        if (logw[e] != NEG_INF) q[e] = std::exp(logw[e] - z);
    return q;
}

namespace {

// log g_s(a) = log sum_e P_AE(a,e)^{1+s} P_E(e)^{-s}
std::vector<double> log_gs(const JointSource& src, double s, const std::vector<double>& pe) {
    std::vector<double> out(src.a_size(), NEG_INF);
    for (std::size_t a = 0; a < src.a_size(); ++a) {
        LogAccumulator acc;
        for (std::size_t e = 0; e < src.e_size(); ++e) {
            const double p = src.p(a, e);
            if (p > 0.0) acc.add((1.0 + s) * std::log(p) - s * std::log(pe[e]));
        }
        out[a] = acc.result();
    }
    return out;
}

} // namespace

std::vector<double> sibson_projection(const JointSource& source, double s) {
    const std::vector<double> pe = source.marginal_e();
    const std::vector<double> lg = log_gs(source, s, pe);
    LogAccumulator norm;
    for (double v : lg)
        if (v != NEG_INF) norm.add(v / (1.0 + s));
    const double z = norm.result();
    std::vector<double> q(source.a_size(), 0.0);
    for (std::size_t a = 0; a < source.a_size(); ++a)
        if (lg[a] != NEG_INF) q[a] = std::exp(lg[a] / (1.0 + s) - z);
    return q;
}

Measure sibson_mi(const JointSource& source, double s) {
    if (s <= -1.0) raise(Errc::domain_error, "sibson_mi: s must be > -1");
    if (is_shannon(s)) {
        // Shannon mutual information D(P_AE || P_A x P_E).
        const std::vector<double> pa = source.marginal_a();
        const std::vector<double> pe = source.marginal_e();
        double mi = 0.0;
        for (std::size_t a = 0; a < source.a_size(); ++a)
            for (std::size_t e = 0; e < source.e_size(); ++e) {
                const double p = source.p(a, e);
                if (p > 0.0) mi += p * std::log(p / (pa[a] * pe[e]));
            }
        return {mi};
    }
    const std::vector<double> pe = source.marginal_e();
    const std::vector<double> lg = log_gs(source, s, pe);
    LogAccumulator acc;
    for (double v : lg)
        if (v != NEG_INF) acc.add(v / (1.0 + s));
    return {(1.0 + s) / s * acc.result()};
}

Measure renyi_entropy(const std::vector<double>& p, double s) {
    if (s < -1.0) raise(Errc::domain_error, "renyi_entropy: s must be >= -1");
    if (is_shannon(s)) {
        double h = 0.0;
        for (double v : p)
            if (v > 0.0) h -= v * std::log(v);
        return {h};
    }
    LogAccumulator acc;
    for (double v : p)
        if (v > 0.0) acc.add((1.0 + s) * std::log(v));
    return {-acc.result() / s};
}

Measure arimoto_mi(const JointSource& source, double s) {
    if (s <= -1.0) raise(Errc::domain_error, "arimoto_mi: s must be > -1");
    if (is_shannon(s)) return sibson_mi(source, 0.0);
    const Measure ha = renyi_entropy(source.marginal_a(), s);
    const Measure hup = cond_renyi_H_up(source, s);
    return {ha.nats - hup.nats};
}

Measure security_measure(const JointSource& source, double s, SecurityKind kind) {
    if (s <= -1.0) raise(Errc::domain_error, "security_measure: s must be > -1");
    const double log_a = std::log(static_cast<double>(source.a_size()));
    const Measure h = (kind == SecurityKind::std_form) ? cond_renyi_H(source, s)
                                                       : cond_renyi_H_up(source, s);
    return {log_a - h.nats};
}

Varentropies varentropies(const JointSource& source) {
    const CondView cv = condition(source);
    const double H = shannon_cond_entropy(source, cv.p_e);

    double v = 0.0, v1 = 0.0;
    std::vector<double> h_col(source.e_size(), 0.0); // H(A | P_{A|E=e})
    for (std::size_t e = 0; e < source.e_size(); ++e)
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const double c = cv.cond(a, e);
            if (c > 0.0) h_col[e] -= c * std::log(c);
        }
    for (std::size_t e = 0; e < source.e_size(); ++e) {
        const double d = H - h_col[e];
        v1 += cv.p_e[e] * d * d;
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const double c = cv.cond(a, e);
            if (c > 0.0) {
                const double t = std::log(c) + H;
                v += source.p(a, e) * t * t;
            }
        }
    }
    double v2 = v - v1;

    auto clamp = [](double& x, const char* name) {
        if (x < -1e-10)
            std::fprintf(stderr, "varentropies: %s = %.3e clamped to 0\n", name, x);
        if (x < 0.0) x = 0.0;
    };
    clamp(v, "V");
    clamp(v1, "V1");
    clamp(v2, "V2");
    return {v, v1, v2};
}

double entropy_density(const CondView& cond, std::size_t a, std::size_t e) {
    const double c = cond.cond(a, e);
    if (c <= 0.0) raise(Errc::zero_atom, "entropy_density: zero-probability atom");
    return -std::log(c);
}

} // namespace renyisec
