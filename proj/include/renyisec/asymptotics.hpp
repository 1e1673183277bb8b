#pragma once

#include "renyisec/dist.hpp"
#include "renyisec/measures.hpp"
#include "renyisec/optimize.hpp"

namespace renyisec {

/// First-order rate R (nats/symbol), second-order rate L (nats/sqrt(symbol))
/// and an optional explicit hash size M.
struct RateSpec {
    double r = 0.0;
    double l = 0.0;
    double m = 0.0; // 0 = unset
};

enum class Form { std_form, gallager_form };
enum class Sign { plus, minus };

/// d/du [ u * H_{1+u}(A|E) ] at u (std) or d/du [ u * H^(up)_{1+u} ] (gallager),
/// u in (-1, 1]. The critical rate R^_s is this derivative at u = s; the
/// minus-branch transition rate R^_{-s} is the same derivative at u = -s.
/// Closed-form derivative, cross-checked against Richardson differences in tests.
double critical_rate_at(const JointSource& source, double u, Form form);

/// R^_s for s in [0,1].
inline double critical_rate(const JointSource& source, double s, Form form) {
    return critical_rate_at(source, s, form);
}

/// First-order equivocation limits.
/// plus: |r - H_{1+s}|^+ (std) or |r - H^(up)_{1+s}|^+ (gallager), s in [0,1].
/// minus (s in (0,1]): r - H_{1-s} above the transition rate R^_{-s}, otherwise
/// max_{t in [0,s]} (t/s)(r - H_{1-t}); gallager uses H_{1-t|1-s} and R^(up)_{-s}.
double equiv_limit(const JointSource& source, double s, double r, Sign sign, Form form);

/// Optimal key rates: H_{1+s} / H^(up)_{1+s} for s in (0,1], H(A|E) for s in [-1,0].
double key_rate(const JointSource& source, double s, Form form);

struct ExponentResult {
    double value = 0.0;
    double argmax_t = 0.0;
    bool below_critical = false; // r below the theorem hypothesis R^_1 / R^(up)_1
};

/// Security-measure decay exponents.
/// plus/std:  |sup_{t in [s,1)} t H_{1+t} - t r|^+   (sup taken on [s, 1-1e-9])
/// plus/gal:  |max_{t in [s,1]} t H_{1+t} - t r|^+
/// minus:     max_{t in [0,1]} t H_{1+t} - t r       (both forms)
ExponentResult exponent(const JointSource& source, double s, double r, Sign sign, Form form);

} // namespace renyisec
