#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace renyisec {

inline constexpr double NEG_INF = -std::numeric_limits<double>::infinity();

/// Streaming log-sum-exp accumulator. add() terms in any order; result() is
/// log(sum exp(x_i)), -inf for the empty sum.
class LogAccumulator {
  public:
    void add(double log_term) {
        if (log_term == NEG_INF) return;
        if (log_term > max_) {
            if (max_ != NEG_INF) sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
            else sum_ = 1.0;
            max_ = log_term;
        } else {
            sum_ += std::exp(log_term - max_);
        }
    }
    double result() const {
        if (max_ == NEG_INF) return NEG_INF;
        return max_ + std::log(sum_);
    }

  private:
    double max_ = NEG_INF;
    double sum_ = 0.0;
};

inline double log_sum_exp(std::span<const double> xs) {
    LogAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.result();
}

/// x^q with the zero-atom convention: 0^q := 0 for every q (including q = 0),
/// so vanishing atoms drop out of every power sum.
inline double pow_atom(double x, double q) {
    if (x <= 0.0) return 0.0;
    return std::exp(q * std::log(x));
}

/// log(x) with log(0) = -inf instead of a domain error.
inline double safe_log(double x) { return x > 0.0 ? std::log(x) : NEG_INF; }

} // namespace renyisec
