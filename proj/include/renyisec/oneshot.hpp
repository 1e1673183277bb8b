#pragma once

#include <string>
#include <vector>

#include "renyisec/dist.hpp"
#include "renyisec/hashing.hpp"
#include "renyisec/measures.hpp"

namespace renyisec {

enum class SecCriterion { C, C_up };

/// Direct (achievability) bound kinds. The trailing _up kinds are the
/// Gallager-form counterparts; L2 requires epsilon = 1; L3 takes c > 0.
enum class DirectKind {
    L1_plus,
    L1_plus_up,
    L1_minus,
    L1_minus_up, // s in [0,1)
    L2_exp_up,
    L3_second_std,
    L3_second_up, // s in [0,1)
};

/// Converse bound kinds, evaluated per deterministic map with c > 1.
/// L4_equiv_corrected is a repaired variant (extra additive 1/2 on the
/// right-hand side) that is not part of the verified surface of inequalities;
/// it exists so the known failure mode of L4_equiv can be contrasted.
enum class ConverseKind {
    L4_equiv,
    L4_equiv_up,
    L4_equiv_corrected,
    L5_minus_a,
    L5_minus_b,
    L5_minus_up, // s in [0,1)
    L5_plus_a,
    L5_plus_b,
    L5_plus_up,
    L6_second,
};

enum class Status { holds, violated, reported };

/// One evaluated inequality. slack is oriented so that >= 0 always means the
/// inequality holds, regardless of the bound's direction.
struct BoundReport {
    std::string lemma_id;
    std::string kind;
    double s = 0.0;
    double c = 0.0; // NaN when the kind has no c
    double epsilon = 0.0;
    std::size_t m = 0;
    int member = -1; // converse kinds: member index; direct kinds: -1
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Status status = Status::holds;
};

/// Exact joint security criterion with the selector X adjoined:
/// C   -> D_{1+s}(P_{f_X(A),E,X} || P_mix x P_E x P_X)
/// C_up-> log M - H^(up)_{1+s}(f_X(A) | E, X)
/// computed by materializing the full (bin, e, member) pmf.
double exact_security(const JointSource& source, const HashFamily& family, double s,
                      SecCriterion kind);

/// Right-hand side of the direct one-shot bounds on the e^{+-.} scale each
/// bound states. epsilon >= 1 for the L1 kinds; L2 demands epsilon = 1.
double direct_rhs(const JointSource& source, double s, std::size_t m, double epsilon, double c,
                  DirectKind kind);

/// Right-hand side of the converse one-shot bounds for a single map f.
double converse_rhs(const JointSource& source, const std::vector<std::uint32_t>& f, double s,
                    std::size_t m, double c, ConverseKind kind);

/// Exact left-hand side matching a direct kind (family-averaged, X adjoined).
double direct_lhs(const JointSource& source, const HashFamily& family, double s, DirectKind kind);

/// Exact left-hand side matching a converse kind (single deterministic map).
double converse_lhs(const JointSource& source, const std::vector<std::uint32_t>& f, double s,
                    std::size_t m, ConverseKind kind);

struct VerifyOptions {
    std::vector<double> direct_c = {0.5, 1.0, 2.0}; // L3 thresholds, c > 0
    double tolerance = 1e-12;                        // relative slack tolerance
};

/// Run every applicable direct bound (assert mode: violations are fatal
/// status) and every converse bound for every member (Lemmas 4 and 6 report,
/// Lemma 5 asserts). Reports come back sorted by (lemma, kind, s, c, member).
/// Throws Errc::uncertified_family when asserts are requested on a family
/// without an exact epsilon.
std::vector<BoundReport> verify(const JointSource& source, const HashFamily& family,
                                const std::vector<double>& s_grid,
                                const std::vector<double>& c_grid, double epsilon,
                                const VerifyOptions& opts = {});

const char* to_string(Status s);

} // namespace renyisec
