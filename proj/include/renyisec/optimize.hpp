#pragma once

#include <functional>

#include "renyisec/errors.hpp"

namespace renyisec {

struct OptResult {
    double argmax_t = 0.0;
    double value = 0.0;
};

/// Golden-section maximization of a concave f on [lo, hi].
/// |argmax error| <= tol. Endpoints are always candidates, so boundary maxima
/// are exact. In debug builds a 64-point spot check rejects callers that pass
/// a visibly non-concave objective.
OptResult maximize_concave(const std::function<double(double)>& f, double lo, double hi,
                           double tol = 1e-10);

} // namespace renyisec
