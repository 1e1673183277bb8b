#pragma once

#include "renyisec/dist.hpp"
#include "renyisec/optimize.hpp"

namespace renyisec {

/// Exact tail probability P_AE^n{ -(1/n) log P^n_{A|E} >= r } by streaming
/// enumeration of joint types. Boundary ties are included (non-strict
/// threshold throughout).
/// Throws Errc::size_overflow when C(n+k-1, k-1) > 1e8 for k = |A||E|.
double exact_tail(const JointSource& source, unsigned n, double r);

struct CramerResult {
    double value = 0.0;
    double argmax_t = 0.0;
    bool capped = false; // optimum ran into the t = 50 cap (linear growth regime)
};

/// max_{t in [0,50]} t (r - H_{1-t}(A|E)), the Chernoff/Cramer rate function
/// of the conditional entropy density.
CramerResult cramer_exponent(const JointSource& source, double r);

/// Exact random-binning collision expectation at blocklength n:
/// E_X sum_e P_E^n(e) sum_i P_{f_X(A)|E}(i|e)^2
///   = sum_e P_E^n(e) [ pi(e) + (1 - pi(e))/M ],  pi(e) = prod_j sum_a P(a|e_j)^2,
/// aggregated over E-types (no 2^n blowup).
double collision_sum_exact(const JointSource& source, unsigned n, std::size_t m);

} // namespace renyisec
