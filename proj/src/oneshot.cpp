#include "renyisec/oneshot.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "renyisec/logspace.hpp"

namespace renyisec {

namespace {

// Joint pmf over (bin, e, x) under the family, flattened with bin fastest.
struct AdjoinedJoint {
    std::size_t m = 0, e = 0, x = 0;
    std::vector<double> p; // size m*e*x
    std::vector<double> q; // reference P_mix x P_E x P_X
};

AdjoinedJoint adjoin(const JointSource& source, const HashFamily& family) {
    if (family.a_size != source.a_size())
        raise(Errc::domain_error, "exact_security: family domain does not match source");
    AdjoinedJoint j;
    j.m = family.m_size;
    j.e = source.e_size();
    j.x = family.members.size();
    const double cells = static_cast<double>(j.m) * j.e * j.x;
    if (cells > static_cast<double>(1u << 24))
        raise(Errc::size_overflow, "exact_security: adjoined joint exceeds 2^24 cells");
    j.p.assign(j.m * j.e * j.x, 0.0);
    j.q.assign(j.m * j.e * j.x, 0.0);
    const std::vector<double> pe = source.marginal_e();
    for (std::size_t x = 0; x < j.x; ++x) {
        const auto& f = family.members[x];
        const double w = family.weights[x];
        for (std::size_t a = 0; a < source.a_size(); ++a) {
            const std::size_t bin = f[a] - 1;
            for (std::size_t e = 0; e < j.e; ++e)
                j.p[(x * j.e + e) * j.m + bin] += w * source.p(a, e);
        }
        for (std::size_t e = 0; e < j.e; ++e)
            for (std::size_t bin = 0; bin < j.m; ++bin)
                j.q[(x * j.e + e) * j.m + bin] = w * pe[e] / static_cast<double>(j.m);
    }
    return j;
}

} // namespace

double exact_security(const JointSource& source, const HashFamily& family, double s,
                      SecCriterion kind) {
    const AdjoinedJoint j = adjoin(source, family);
    if (kind == SecCriterion::C) return renyi_divergence(j.p, j.q, s).nats;

    // log M - H^(up)_{1+s}(bin | (e,x)): reuse the joint-source machinery with
    // the conditioning side flattened to e*x columns.
    const JointSource adj = [&] {
        std::vector<double> p(j.m * j.e * j.x);
        for (std::size_t bin = 0; bin < j.m; ++bin)
            for (std::size_t col = 0; col < j.e * j.x; ++col)
                p[bin * (j.e * j.x) + col] = j.p[col * j.m + bin];
        return JointSource::from_validated(j.m, j.e * j.x, std::move(p));
    }();
    return std::log(static_cast<double>(j.m)) - cond_renyi_H_up(adj, s).nats;
}

// ---------------------------------------------------------------------------
// Direct bounds
// ---------------------------------------------------------------------------

double direct_rhs(const JointSource& source, double s, std::size_t m, double epsilon, double c,
                  DirectKind kind) {
    if (s < 0.0 || s > 1.0) raise(Errc::domain_error, "direct_rhs: s must be in [0,1]");
    const double M = static_cast<double>(m);
    const CondView cv = condition(source);

    switch (kind) {
    case DirectKind::L1_plus: {
        if (epsilon < 1.0) raise(Errc::domain_error, "direct_rhs: L1 needs epsilon >= 1");
        return std::pow(epsilon, s) +
               std::pow(M, s) * std::exp(-s * cond_renyi_H(source, s).nats);
    }
    case DirectKind::L1_plus_up: {
        if (epsilon < 1.0) raise(Errc::domain_error, "direct_rhs: L1 needs epsilon >= 1");
        const double q = s / (1.0 + s);
        return std::pow(epsilon, q) +
               std::pow(M, q) * std::exp(-q * cond_renyi_H_up(source, s).nats);
    }
    case DirectKind::L1_minus: {
        if (epsilon < 1.0) raise(Errc::domain_error, "direct_rhs: L1 needs epsilon >= 1");
        const double thr = epsilon / M;
        double heavy = 0.0, light = 0.0;
        for (std::size_t a = 0; a < cv.a_size; ++a)
            for (std::size_t e = 0; e < cv.e_size; ++e) {
                const double pj = source.p(a, e), pc = cv.cond(a, e);
                if (pj <= 0.0) continue;
                if (pc >= thr) heavy += pj * pow_atom(pc, -s) * std::pow(M, -s);
                else light += pj * std::pow(epsilon, -s);
            }
        return std::pow(2.0, -s) * (heavy + light);
    }
    case DirectKind::L1_minus_up: {
        if (epsilon < 1.0) raise(Errc::domain_error, "direct_rhs: L1 needs epsilon >= 1");
        if (s >= 1.0) raise(Errc::domain_error, "direct_rhs: L1_minus_up needs s < 1");
        const double thr = epsilon / M;
        const double q = s / (1.0 - s), pw = 1.0 / (1.0 - s);
        double t1 = 0.0, t2 = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            double heavy = 0.0, light = 0.0;
            for (std::size_t a = 0; a < cv.a_size; ++a) {
                const double pc = cv.cond(a, e);
                if (pc <= 0.0) continue;
                if (pc >= thr) heavy += pow_atom(pc, 1.0 - s);
                else light += pc;
            }
            t1 += cv.p_e[e] * pow_atom(heavy, pw);
            t2 += cv.p_e[e] * pow_atom(light, pw);
        }
        return std::pow(2.0 * M, -q) * t1 + std::pow(2.0 * epsilon, -q) * t2;
    }
    case DirectKind::L2_exp_up: {
        if (std::abs(epsilon - 1.0) > 1e-12)
            raise(Errc::domain_error, "direct_rhs: L2 needs epsilon = 1");
        return 1.0 + std::pow(M, s) * std::exp(-s * cond_renyi_H(source, s).nats) / (1.0 + s);
    }
    case DirectKind::L3_second_std: {
        if (c <= 0.0) raise(Errc::domain_error, "direct_rhs: L3 needs c > 0");
        const double thr = c / M;
        double mass = 0.0;
        for (std::size_t a = 0; a < cv.a_size; ++a)
            for (std::size_t e = 0; e < cv.e_size; ++e)
                if (cv.cond(a, e) <= thr) mass += source.p(a, e);
        return mass * std::pow(1.0 / (c + epsilon), s);
    }
    case DirectKind::L3_second_up: {
        if (c <= 0.0) raise(Errc::domain_error, "direct_rhs: L3 needs c > 0");
        if (s >= 1.0) raise(Errc::domain_error, "direct_rhs: L3_second_up needs s < 1");
        const double thr = c / M;
        const double q = s / (1.0 - s), pw = 1.0 / (1.0 - s);
        double sum = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            double mass = 0.0;
            for (std::size_t a = 0; a < cv.a_size; ++a)
                if (cv.cond(a, e) <= thr && cv.cond(a, e) > 0.0) mass += cv.cond(a, e);
            sum += cv.p_e[e] * pow_atom(mass, pw);
        }
        return std::pow(1.0 / (c + epsilon), q) * sum;
    }
    }
    raise(Errc::domain_error, "direct_rhs: unknown kind");
}

double direct_lhs(const JointSource& source, const HashFamily& family, double s,
                  DirectKind kind) {
    switch (kind) {
    case DirectKind::L1_plus:
        return std::exp(s * exact_security(source, family, s, SecCriterion::C));
    case DirectKind::L1_plus_up:
    case DirectKind::L2_exp_up:
        return std::exp(s / (1.0 + s) * exact_security(source, family, s, SecCriterion::C_up));
    case DirectKind::L1_minus:
    case DirectKind::L3_second_std:
        return std::exp(-s * exact_security(source, family, -s, SecCriterion::C));
    case DirectKind::L1_minus_up:
    case DirectKind::L3_second_up:
        return std::exp(-s / (1.0 - s) * exact_security(source, family, -s, SecCriterion::C_up));
    }
    raise(Errc::domain_error, "direct_lhs: unknown kind");
}

// ---------------------------------------------------------------------------
// Converse bounds (single deterministic map, no X)
// ---------------------------------------------------------------------------

namespace {

HashFamily singleton(const std::vector<std::uint32_t>& f, std::size_t m) {
    HashFamily fam;
    fam.a_size = f.size();
    fam.m_size = m;
    fam.members = {f};
    fam.weights = {1.0};
    return fam;
}

} // namespace

double converse_lhs(const JointSource& source, const std::vector<std::uint32_t>& f, double s,
                    std::size_t m, ConverseKind kind) {
    const HashFamily one = singleton(f, m);
    switch (kind) {
    case ConverseKind::L4_equiv:
    case ConverseKind::L4_equiv_corrected:
    case ConverseKind::L5_minus_a:
    case ConverseKind::L5_minus_b:
    case ConverseKind::L6_second:
        return std::exp(-s * exact_security(source, one, -s, SecCriterion::C));
    case ConverseKind::L4_equiv_up:
    case ConverseKind::L5_minus_up:
        return std::exp(-s / (1.0 - s) * exact_security(source, one, -s, SecCriterion::C_up));
    case ConverseKind::L5_plus_a:
    case ConverseKind::L5_plus_b:
        return std::exp(s * exact_security(source, one, s, SecCriterion::C));
    case ConverseKind::L5_plus_up:
        return std::exp(s / (1.0 + s) * exact_security(source, one, s, SecCriterion::C_up));
    }
    raise(Errc::domain_error, "converse_lhs: unknown kind");
}

double converse_rhs(const JointSource& source, const std::vector<std::uint32_t>& f, double s,
                    std::size_t m, double c, ConverseKind kind) {
    if (c <= 1.0) raise(Errc::domain_error, "converse_rhs: c must be > 1");
    if (s < 0.0 || s > 1.0) raise(Errc::domain_error, "converse_rhs: s must be in [0,1]");
    (void)f; // the converse right-hand sides depend only on the source
    const double M = static_cast<double>(m);
    const double thr = c / M;
    const CondView cv = condition(source);

    // Per-column split masses: below / at-or-above the threshold c/M.
    auto heavy_mass = [&](std::size_t e) {
        double v = 0.0;
        for (std::size_t a = 0; a < cv.a_size; ++a)
            if (cv.cond(a, e) >= thr) v += cv.cond(a, e);
        return v;
    };
    auto light_mass = [&](std::size_t e, bool strict) {
        double v = 0.0;
        for (std::size_t a = 0; a < cv.a_size; ++a) {
            const double pc = cv.cond(a, e);
            if (pc <= 0.0) continue;
            if (strict ? (pc < thr) : (pc <= thr)) v += pc;
        }
        return v;
    };
    auto heavy_power = [&](std::size_t e, double order) {
        double v = 0.0;
        for (std::size_t a = 0; a < cv.a_size; ++a)
            if (cv.cond(a, e) >= thr) v += pow_atom(cv.cond(a, e), order);
        return v;
    };

    // 2^{s/(1-s)} s^{s/(1-s)}; std::pow(0,0) = 1 gives the right s -> 0 limit.
    const double beta = std::pow(2.0, s / (1.0 - s)) * std::pow(s, s / (1.0 - s));

    switch (kind) {
    case ConverseKind::L4_equiv:
    case ConverseKind::L4_equiv_corrected: {
        double t1 = 0.0, t2 = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            t1 += cv.p_e[e] * heavy_power(e, 1.0 - s);
            t2 += cv.p_e[e] * light_mass(e, /*strict=*/false);
        }
        const double base = std::pow(c, -s) * t1 * std::pow(M, -s) + beta * (1.0 - s) * t2;
        return kind == ConverseKind::L4_equiv ? base : 0.5 + base;
    }
    case ConverseKind::L4_equiv_up: {
        if (s >= 1.0) raise(Errc::domain_error, "converse_rhs: L4_equiv_up needs s < 1");
        const double pw = 1.0 / (1.0 - s);
        double sum = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            const double h = std::pow(c, -s) * heavy_power(e, 1.0 - s) * std::pow(M, -s);
            const double l = beta * (1.0 - s) * light_mass(e, /*strict=*/true);
            sum += cv.p_e[e] * (pow_atom(h, pw) + pow_atom(l, pw));
        }
        return std::pow(2.0, s / (1.0 - s)) * sum;
    }
    case ConverseKind::L5_minus_a: {
        double t1 = 0.0, t2 = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            t1 += cv.p_e[e] * heavy_power(e, 1.0 - s) * std::pow(M, -s);
            t2 += cv.p_e[e] * pow_atom(light_mass(e, true), 1.0 - s);
        }
        return t1 + t2;
    }
    case ConverseKind::L5_minus_b: {
        double heavy = 0.0, light = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            heavy += cv.p_e[e] * heavy_mass(e);
            light += cv.p_e[e] * light_mass(e, true);
        }
        return heavy * std::pow(c, -s) + pow_atom(light, 1.0 - s);
    }
    case ConverseKind::L5_minus_up: {
        if (s >= 1.0) raise(Errc::domain_error, "converse_rhs: L5_minus_up needs s < 1");
        const double pw = 1.0 / (1.0 - s);
        double sum = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            const double inner =
                heavy_mass(e) * std::pow(c, -s) + pow_atom(light_mass(e, true), 1.0 - s);
            sum += cv.p_e[e] * pow_atom(inner, pw);
        }
        return sum;
    }
    case ConverseKind::L5_plus_a: {
        double t1 = 0.0, t2 = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            t1 += cv.p_e[e] * heavy_power(e, 1.0 + s) * std::pow(M, s);
            t2 += cv.p_e[e] * pow_atom(light_mass(e, true), 1.0 + s);
        }
        return t1 + t2;
    }
    case ConverseKind::L5_plus_b: {
        double heavy = 0.0, light = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            heavy += cv.p_e[e] * heavy_mass(e);
            light += cv.p_e[e] * light_mass(e, true);
        }
        return heavy * std::pow(c, s) + pow_atom(light, 1.0 + s);
    }
    case ConverseKind::L5_plus_up: {
        const double pw = 1.0 / (1.0 + s);
        double sum = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            const double inner =
                heavy_mass(e) * std::pow(c, s) + pow_atom(light_mass(e, true), 1.0 + s);
            sum += cv.p_e[e] * pow_atom(inner, pw);
        }
        return sum;
    }
    case ConverseKind::L6_second: {
        double heavy = 0.0, light = 0.0;
        for (std::size_t e = 0; e < cv.e_size; ++e) {
            heavy += cv.p_e[e] * heavy_mass(e);
            light += cv.p_e[e] * light_mass(e, /*strict=*/false);
        }
        return std::pow(c, -s) * heavy + beta * light;
    }
    }
    raise(Errc::domain_error, "converse_rhs: unknown kind");
}

// ---------------------------------------------------------------------------
// Harness
// ---------------------------------------------------------------------------

const char* to_string(Status s) {
    switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::reported: return "reported";
    }
    return "?";
}

namespace {

struct KindInfo {
    const char* lemma;
    const char* name;
    bool lower_bounds_lhs; // true: rhs <= lhs must hold; false: lhs <= rhs
    bool assert_mode;
};

KindInfo info(DirectKind k) {
    switch (k) {
    case DirectKind::L1_plus: return {"L1", "L1_plus", false, true};
    case DirectKind::L1_plus_up: return {"L1", "L1_plus_up", false, true};
    case DirectKind::L1_minus: return {"L1", "L1_minus", true, true};
    case DirectKind::L1_minus_up: return {"L1", "L1_minus_up", true, true};
    case DirectKind::L2_exp_up: return {"L2", "L2_exp_up", false, true};
    case DirectKind::L3_second_std: return {"L3", "L3_second_std", true, true};
    case DirectKind::L3_second_up: return {"L3", "L3_second_up", true, true};
    }
    return {"?", "?", false, true};
}

KindInfo info(ConverseKind k) {
    switch (k) {
    case ConverseKind::L4_equiv: return {"L4", "L4_equiv", false, false};
    case ConverseKind::L4_equiv_up: return {"L4", "L4_equiv_up", false, false};
    case ConverseKind::L4_equiv_corrected: return {"L4c", "L4_equiv_corrected", false, false};
    case ConverseKind::L5_minus_a: return {"L5", "L5_minus_a", false, true};
    case ConverseKind::L5_minus_b: return {"L5", "L5_minus_b", false, true};
    case ConverseKind::L5_minus_up: return {"L5", "L5_minus_up", false, true};
    case ConverseKind::L5_plus_a: return {"L5", "L5_plus_a", true, true};
    case ConverseKind::L5_plus_b: return {"L5", "L5_plus_b", true, true};
    case ConverseKind::L5_plus_up: return {"L5", "L5_plus_up", true, true};
    case ConverseKind::L6_second: return {"L6", "L6_second", false, false};
    }
    return {"?", "?", false, false};
}

BoundReport make_report(const KindInfo& ki, double s, double c, double epsilon, std::size_t m,
                        int member, double lhs, double rhs, double tol) {
    BoundReport r;
    r.lemma_id = ki.lemma;
    r.kind = ki.name;
    r.s = s;
    r.c = c;
    r.epsilon = epsilon;
    r.m = m;
    r.member = member;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = ki.lower_bounds_lhs ? lhs - rhs : rhs - lhs;
    const bool ok = r.slack >= -tol * std::max(1.0, std::abs(rhs));
    r.status = ok ? Status::holds : (ki.assert_mode ? Status::violated : Status::reported);
    return r;
}

} // namespace

std::vector<BoundReport> verify(const JointSource& source, const HashFamily& family,
                                const std::vector<double>& s_grid,
                                const std::vector<double>& c_grid, double epsilon,
                                const VerifyOptions& opts) {
    if (!family.certified())
        raise(Errc::uncertified_family, "verify: assert mode needs a certified family");
    std::vector<BoundReport> out;
    const std::size_t m = family.m_size;
    const double nan = std::nan("");

    for (double s : s_grid) {
        // Direct bounds, family-averaged.
        const DirectKind direct_all[] = {DirectKind::L1_plus,      DirectKind::L1_plus_up,
                                         DirectKind::L1_minus,     DirectKind::L1_minus_up,
                                         DirectKind::L2_exp_up,    DirectKind::L3_second_std,
                                         DirectKind::L3_second_up};
        for (DirectKind k : direct_all) {
            const bool needs_sub1 = (k == DirectKind::L1_minus_up || k == DirectKind::L3_second_up);
            if (needs_sub1 && s >= 1.0) continue;
            if (k == DirectKind::L2_exp_up && std::abs(epsilon - 1.0) > 1e-12) continue;
            const bool has_c = (k == DirectKind::L3_second_std || k == DirectKind::L3_second_up);
            const double lhs = direct_lhs(source, family, s, k);
            if (has_c) {
                for (double c : opts.direct_c)
                    out.push_back(make_report(info(k), s, c, epsilon, m, -1, lhs,
                                              direct_rhs(source, s, m, epsilon, c, k),
                                              opts.tolerance));
            } else {
                out.push_back(make_report(info(k), s, nan, epsilon, m, -1, lhs,
                                          direct_rhs(source, s, m, epsilon, nan, k),
                                          opts.tolerance));
            }
        }

        // Converse bounds, per member and threshold.
        const ConverseKind conv_all[] = {
            ConverseKind::L4_equiv,  ConverseKind::L4_equiv_up, ConverseKind::L4_equiv_corrected,
            ConverseKind::L5_minus_a, ConverseKind::L5_minus_b,  ConverseKind::L5_minus_up,
            ConverseKind::L5_plus_a,  ConverseKind::L5_plus_b,   ConverseKind::L5_plus_up,
            ConverseKind::L6_second};
        for (std::size_t x = 0; x < family.members.size(); ++x) {
            for (ConverseKind k : conv_all) {
                const bool needs_sub1 = (k == ConverseKind::L4_equiv_up ||
                                         k == ConverseKind::L5_minus_up);
                if (needs_sub1 && s >= 1.0) continue;
                const double lhs = converse_lhs(source, family.members[x], s, m, k);
                for (double c : c_grid)
                    out.push_back(make_report(info(k), s, c, epsilon, m, static_cast<int>(x), lhs,
                                              converse_rhs(source, family.members[x], s, m, c, k),
                                              opts.tolerance));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const BoundReport& a, const BoundReport& b) {
        auto key = [](const BoundReport& r) {
            return std::make_tuple(r.lemma_id, r.kind, r.s, std::isnan(r.c) ? -1.0 : r.c,
                                   r.member);
        };
        return key(a) < key(b);
    });
    return out;
}

} // namespace renyisec
