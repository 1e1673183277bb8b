#pragma once

#include <optional>
#include <vector>

#include "renyisec/dist.hpp"

namespace renyisec {

/// Uniform return wrapper; nats() may be +-infinity (divergence with a
/// support violation, entropy against a vanishing reference).
struct Measure {
    double nats = 0.0;
    bool finite() const { return std::isfinite(nats); }
};

struct Varentropies {
    double v = 0.0;  // nats^2
    double v1 = 0.0; // between-E part
    double v2 = 0.0; // within-E part
};

enum class SecurityKind { std_form, gallager_form };

/// Renyi divergence of order 1+s; q need not be normalized. s in [-1, inf);
/// the |s| < S_EPS branch is the Kullback-Leibler divergence.
Measure renyi_divergence(const std::vector<double>& p, const std::vector<double>& q, double s);

/// Conditional Renyi entropy H_{1+s}(A|E | P_AE || Q_E); defaults to Q_E = P_E.
Measure cond_renyi_H(const JointSource& source, double s,
                     const std::optional<std::vector<double>>& q_e = std::nullopt);

/// Gallager form H^(up)_{1+s}(A|E), the maximum of cond_renyi_H over Q_E.
Measure cond_renyi_H_up(const JointSource& source, double s);

/// Two-parameter family H_{1+s|1+t}; diagonal t = s is the Gallager form.
/// Throws Errc::domain_error for |s| < S_EPS (no caller needs the limit).
Measure two_param_H(const JointSource& source, double s, double t);

/// Gallager function phi(s) = log sum_e (sum_a P_AE^{1/(1-s)})^{1-s}, s < 1.
Measure gallager_phi(const JointSource& source, double s);

/// Maximizer of cond_renyi_H over reference distributions:
/// Q_E(e) proportional to (sum_a P_AE(a,e)^{1+s})^{1/(1+s)}.
std::vector<double> tilted_QE(const JointSource& source, double s);

Measure sibson_mi(const JointSource& source, double s);

/// The normalized g_s^{1/(1+s)} map that appears inside Sibson's mutual
/// information; exposed for the Pythagorean decomposition checks.
std::vector<double> sibson_projection(const JointSource& source, double s);

Measure arimoto_mi(const JointSource& source, double s);

/// Unconditional Renyi entropy of a pmf (helper for Arimoto's form).
Measure renyi_entropy(const std::vector<double>& p, double s);

/// C_{1+s} = log|A| - H_{1+s} (std) or log|A| - H^(up)_{1+s} (gallager).
Measure security_measure(const JointSource& source, double s, SecurityKind kind);

/// V, V1, V2 with V = V1 + V2; small negative round-off is clamped to zero.
Varentropies varentropies(const JointSource& source);

/// Conditional entropy density h_{A|E}(a|e) = -log P_{A|E}(a|e).
/// Throws Errc::zero_atom when the atom has no mass.
double entropy_density(const CondView& cond, std::size_t a, std::size_t e);

} // namespace renyisec
