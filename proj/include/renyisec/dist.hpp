#pragma once

#include <cstdint>
#include <vector>

#include "renyisec/errors.hpp"

namespace renyisec {

/// Renyi offset s (order alpha = 1+s). |s| < S_EPS selects the Shannon
/// (s -> 0 limit) branch of every measure.
inline constexpr double S_EPS = 1e-7;

inline bool is_shannon(double s) { return std::abs(s) < S_EPS; }

/// Finite joint pmf over A x E. Entries are stored dense, row-major in a
/// (rows = A-symbols, columns = E-symbols). Immutable after construction;
/// zero-mass E-columns are stripped at load, zero atoms are retained but
/// excluded from every log-sum (0 log 0 = 0).
class JointSource {
  public:
    std::size_t a_size() const { return a_size_; }
    std::size_t e_size() const { return e_size_; }
    double p(std::size_t a, std::size_t e) const { return p_[a * e_size_ + e]; }
    const std::vector<double>& flat() const { return p_; }

    std::vector<double> marginal_a() const;
    std::vector<double> marginal_e() const;

    /// Trusted constructor: entries already validated and summing to 1.
    static JointSource from_validated(std::size_t a, std::size_t e, std::vector<double> p);

  private:
    JointSource() = default;
    std::size_t a_size_ = 0, e_size_ = 0;
    std::vector<double> p_;
    friend JointSource load_joint(const std::vector<std::vector<double>>&);
};

/// Factorization P_AE = P_{A|E} * P_E, column-normalized.
struct CondView {
    std::vector<double> p_e;         // |E|
    std::vector<double> p_a_given_e; // a_size x e_size, row-major as in JointSource
    std::size_t a_size = 0, e_size = 0;

    double cond(std::size_t a, std::size_t e) const { return p_a_given_e[a * e_size + e]; }
};

/// Validate a rectangular nonnegative matrix, renormalize (tolerance 1e-9)
/// and strip zero E-columns.
/// Throws: Errc::negative_entry, Errc::empty_matrix, Errc::mass_not_one.
JointSource load_joint(const std::vector<std::vector<double>>& matrix);

CondView condition(const JointSource& source);

/// n-fold i.i.d. product, symbols flattened row-major.
/// Throws Errc::size_overflow when a_size^n * e_size^n > 2^24.
JointSource tensor_power(const JointSource& source, unsigned n);

/// Deterministic per seed; entries are normalized independent exponentials
/// (symmetric Dirichlet).
JointSource random_joint(std::uint64_t seed, std::size_t a_size, std::size_t e_size);

} // namespace renyisec
