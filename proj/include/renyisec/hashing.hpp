#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "renyisec/errors.hpp"

namespace renyisec {

/// Finite weighted ensemble of maps A -> {1..M}. Members store f(a) as
/// 1-based bin indices; weights form the selection pmf P_X. Immutable after
/// construction.
struct HashFamily {
    std::size_t a_size = 0;
    std::size_t m_size = 0;
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<double> weights;
    /// Exact almost-universal collision bound when the family is certified
    /// (exhaustive construction or exact verification); sampled families
    /// leave it empty and carry only the empirical estimate.
    std::optional<double> certified_epsilon;

    bool certified() const { return certified_epsilon.has_value(); }
};

/// Uniform ensemble of all M^{|A|} maps (random binning); universal_2 with
/// epsilon = 1, met with equality on every distinct pair.
/// Throws Errc::size_overflow when M^{|A|} > 1e6.
HashFamily all_functions_family(std::size_t a_size, std::size_t m);

/// Binary Toeplitz matrices acting on bit-strings over GF(2).
/// sample_count = 0 enumerates the full 2^{in+out-1} family (certified,
/// epsilon = 1); otherwise sample_count members are drawn by seed and the
/// family is uncertified.
HashFamily toeplitz_family(unsigned in_bits, unsigned out_bits, std::uint64_t seed,
                           std::size_t sample_count);

/// M * max over distinct pairs of Pr[f_X(a1) = f_X(a2)], exact when
/// a_size^2 * |members| <= 1e9; otherwise a sampled estimate over random
/// pairs (never used to certify).
double verify_epsilon(const HashFamily& family);

} // namespace renyisec
