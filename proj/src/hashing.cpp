#include "renyisec/hashing.hpp"

#include <bit>
#include <cmath>

#include "renyisec/rng.hpp"

namespace renyisec {

HashFamily all_functions_family(std::size_t a_size, std::size_t m) {
    if (a_size < 1 || m < 1) raise(Errc::domain_error, "all_functions_family: sizes must be >= 1");
    const double count = std::pow(static_cast<double>(m), static_cast<double>(a_size));
    if (count > 1e6) raise(Errc::size_overflow, "all_functions_family: M^|A| exceeds 1e6");

    HashFamily fam;
    fam.a_size = a_size;
    fam.m_size = m;
    const std::size_t n = static_cast<std::size_t>(count);
    fam.members.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::uint32_t> f(a_size);
        std::size_t r = x;
        for (std::size_t a = 0; a < a_size; ++a) {
            f[a] = static_cast<std::uint32_t>(r % m) + 1;
            r /= m;
        }
        fam.members.push_back(std::move(f));
    }
    fam.weights.assign(n, 1.0 / static_cast<double>(n));
    fam.certified_epsilon = 1.0;
    return fam;
}

namespace {

// Materialize one Toeplitz matrix given its (in+out-1) defining bits.
// Row i of the matrix is diag bits [i, i+in) reversed appropriately;
// f(x) = (parity(row_0 & x) ... parity(row_{out-1} & x)) read as an integer.
std::vector<std::uint32_t> toeplitz_member(unsigned in_bits, unsigned out_bits,
                                           std::uint64_t diag_bits) {
    std::vector<std::uint32_t> rows(out_bits, 0);
    for (unsigned i = 0; i < out_bits; ++i)
        for (unsigned j = 0; j < in_bits; ++j)
            if ((diag_bits >> (i + (in_bits - 1 - j))) & 1ULL) rows[i] |= (1u << j);

    const std::size_t domain = std::size_t{1} << in_bits;
    std::vector<std::uint32_t> f(domain);
    for (std::size_t x = 0; x < domain; ++x) {
        std::uint32_t y = 0;
        for (unsigned i = 0; i < out_bits; ++i)
            y |= static_cast<std::uint32_t>(std::popcount(rows[i] & static_cast<std::uint32_t>(x)) & 1) << i;
        f[x] = y + 1;
    }
    return f;
}

} // namespace

HashFamily toeplitz_family(unsigned in_bits, unsigned out_bits, std::uint64_t seed,
                           std::size_t sample_count) {
    if (out_bits > in_bits)
        raise(Errc::domain_error, "toeplitz_family: out_bits must be <= in_bits");
    if (in_bits == 0 || out_bits == 0)
        raise(Errc::domain_error, "toeplitz_family: bit widths must be >= 1");
    if (in_bits > 20) raise(Errc::size_overflow, "toeplitz_family: domain exceeds 2^20");

    HashFamily fam;
    fam.a_size = std::size_t{1} << in_bits;
    fam.m_size = std::size_t{1} << out_bits;

    const unsigned diag_len = in_bits + out_bits - 1;
    if (sample_count == 0) {
        if (diag_len > 20)
            raise(Errc::size_overflow, "toeplitz_family: full enumeration needs in+out-1 <= 20");
        const std::uint64_t n = 1ULL << diag_len;
        fam.members.reserve(n);
        for (std::uint64_t d = 0; d < n; ++d)
            fam.members.push_back(toeplitz_member(in_bits, out_bits, d));
        fam.weights.assign(n, 1.0 / static_cast<double>(n));
        fam.certified_epsilon = 1.0;
    } else {
        SplitMix64 rng(seed);
        fam.members.reserve(sample_count);
        for (std::size_t i = 0; i < sample_count; ++i)
            fam.members.push_back(
                toeplitz_member(in_bits, out_bits, rng.next_u64() & ((1ULL << diag_len) - 1)));
        fam.weights.assign(sample_count, 1.0 / static_cast<double>(sample_count));
    }
    return fam;
}

double verify_epsilon(const HashFamily& family) {
    if (family.a_size < 2) return 1.0; // no distinct pairs: vacuously universal_2
    const double work = static_cast<double>(family.a_size) * family.a_size *
                        static_cast<double>(family.members.size());
    double max_pr = 0.0;
    if (work <= 1e9) {
        for (std::size_t a1 = 0; a1 + 1 < family.a_size; ++a1)
            for (std::size_t a2 = a1 + 1; a2 < family.a_size; ++a2) {
                double pr = 0.0;
                for (std::size_t x = 0; x < family.members.size(); ++x)
                    if (family.members[x][a1] == family.members[x][a2]) pr += family.weights[x];
                max_pr = std::max(max_pr, pr);
            }
    } else {
        SplitMix64 rng(0x5eedu);
        for (int trial = 0; trial < 200000; ++trial) {
            const std::size_t a1 = rng.next_below(family.a_size);
            std::size_t a2 = rng.next_below(family.a_size - 1);
            if (a2 >= a1) ++a2;
            double pr = 0.0;
            for (std::size_t x = 0; x < family.members.size(); ++x)
                if (family.members[x][a1] == family.members[x][a2]) pr += family.weights[x];
            max_pr = std::max(max_pr, pr);
        }
    }
    return max_pr * static_cast<double>(family.m_size);
}

} // namespace renyisec
