#include "renyisec/dist.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "renyisec/rng.hpp"

namespace renyisec {

std::vector<double> JointSource::marginal_a() const {
    std::vector<double> m(a_size_, 0.0);
    for (std::size_t a = 0; a < a_size_; ++a)
        for (std::size_t e = 0; e < e_size_; ++e) m[a] += p(a, e);
    return m;
}

std::vector<double> JointSource::marginal_e() const {
    std::vector<double> m(e_size_, 0.0);
    for (std::size_t a = 0; a < a_size_; ++a)
        for (std::size_t e = 0; e < e_size_; ++e) m[e] += p(a, e);
    return m;
}

JointSource JointSource::from_validated(std::size_t a, std::size_t e, std::vector<double> p) {
    JointSource s;
    s.a_size_ = a;
    s.e_size_ = e;
    s.p_ = std::move(p);
    return s;
}

JointSource load_joint(const std::vector<std::vector<double>>& matrix) {
    if (matrix.empty() || matrix.front().empty())
        raise(Errc::empty_matrix, "load_joint: empty matrix");
    const std::size_t a_size = matrix.size();
    const std::size_t e_full = matrix.front().size();

    double sum = 0.0;
    for (const auto& row : matrix) {
        if (row.size() != e_full) raise(Errc::empty_matrix, "load_joint: ragged matrix");
        for (double v : row) {
            if (v < 0.0) raise(Errc::negative_entry, "load_joint: negative entry");
            sum += v;
        }
    }
    if (sum <= 0.0 || std::abs(sum - 1.0) > 1e-9)
        raise(Errc::mass_not_one, "load_joint: total mass deviates from 1 beyond 1e-9");

    // Renormalize inside the window, then drop E-columns with zero marginal.
    std::vector<double> col_mass(e_full, 0.0);
    for (std::size_t e = 0; e < e_full; ++e)
        for (std::size_t a = 0; a < a_size; ++a) col_mass[e] += matrix[a][e];

    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < e_full; ++e)
        if (col_mass[e] > 0.0) keep.push_back(e);
    if (keep.empty()) raise(Errc::empty_matrix, "load_joint: all columns have zero mass");

    JointSource s;
    s.a_size_ = a_size;
    s.e_size_ = keep.size();
    s.p_.resize(a_size * keep.size());
    for (std::size_t a = 0; a < a_size; ++a)
        for (std::size_t j = 0; j < keep.size(); ++j)
            s.p_[a * keep.size() + j] = matrix[a][keep[j]] / sum;
    return s;
}

CondView condition(const JointSource& source) {
    CondView v;
    v.a_size = source.a_size();
    v.e_size = source.e_size();
    v.p_e = source.marginal_e();
    v.p_a_given_e.resize(v.a_size * v.e_size);
    for (std::size_t a = 0; a < v.a_size; ++a)
        for (std::size_t e = 0; e < v.e_size; ++e)
            v.p_a_given_e[a * v.e_size + e] = source.p(a, e) / v.p_e[e];
    return v;
}

JointSource tensor_power(const JointSource& source, unsigned n) {
    if (n == 0) raise(Errc::domain_error, "tensor_power: n must be >= 1");
    const double cells = std::pow(static_cast<double>(source.a_size()), n) *
                         std::pow(static_cast<double>(source.e_size()), n);
    if (cells > static_cast<double>(1u << 24))
        raise(Errc::size_overflow, "tensor_power: a_size^n * e_size^n exceeds 2^24");

    std::size_t an = 1, en = 1;
    for (unsigned i = 0; i < n; ++i) { an *= source.a_size(); en *= source.e_size(); }

    std::vector<double> p(an * en, 0.0);
    // Row-major digits: first letter is the most significant.
    for (std::size_t A = 0; A < an; ++A) {
        for (std::size_t E = 0; E < en; ++E) {
            double v = 1.0;
            std::size_t ra = A, re = E;
            std::size_t adiv = an / source.a_size(), ediv = en / source.e_size();
            for (unsigned i = 0; i < n; ++i) {
                const std::size_t ai = ra / adiv, ei = re / ediv;
                v *= source.p(ai, ei);
                ra %= adiv; re %= ediv;
                if (i + 1 < n) { adiv /= source.a_size(); ediv /= source.e_size(); }
            }
            p[A * en + E] = v;
        }
    }
    return JointSource::from_validated(an, en, std::move(p));
}

JointSource random_joint(std::uint64_t seed, std::size_t a_size, std::size_t e_size) {
    if (a_size < 1 || e_size < 1) raise(Errc::domain_error, "random_joint: sizes must be >= 1");
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> m(a_size, std::vector<double>(e_size));
    double sum = 0.0;
    for (auto& row : m)
        for (auto& v : row) { v = rng.next_exponential(); sum += v; }
    for (auto& row : m)
        for (auto& v : row) v /= sum;
    return load_joint(m);
}

} // namespace renyisec
