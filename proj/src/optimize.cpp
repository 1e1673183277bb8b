#include "renyisec/optimize.hpp"

#include <cassert>
#include <cmath>

namespace renyisec {

namespace {

#ifndef NDEBUG
void concavity_spot_check(const std::function<double(double)>& f, double lo, double hi) {
    const int n = 64;
    const double h = (hi - lo) / n;
    if (h <= 0.0) return;
    double prev2 = f(lo), prev1 = f(lo + h);
    for (int i = 2; i <= n; ++i) {
        const double cur = f(lo + i * h);
        const double second = cur - 2.0 * prev1 + prev2;
        // Generous slack: roundoff on near-linear objectives.
        assert(second <= 1e-6 * (1.0 + std::abs(cur)) && "maximize_concave: objective not concave");
        prev2 = prev1;
        prev1 = cur;
    }
}
#endif

} // namespace

OptResult maximize_concave(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
    if (!(lo < hi)) raise(Errc::interval_error, "maximize_concave: requires lo < hi");
#ifndef NDEBUG
    concavity_spot_check(f, lo, hi);
#endif
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);
    // Endpoints can beat the interior point on monotone objectives.
    const double flo = f(lo), fhi = f(hi);
    OptResult r{xm, fm};
    if (flo > r.value) r = {lo, flo};
    if (fhi > r.value) r = {hi, fhi};
    return r;
}

} // namespace renyisec
