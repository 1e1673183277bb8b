#pragma once

namespace renyisec {

/// Standard Gaussian CDF, absolute error <= 1e-12 over the reals.
double gaussian_cdf(double t);

/// Standard Gaussian density.
double gaussian_pdf(double t);

/// log Phi(t); stays accurate far into the left tail where Phi underflows.
double log_gaussian_cdf(double t);

/// log(-log Phi(t)); usable for t so large that -log Phi(t) underflows,
/// where it equals log Phi(-t) asymptotically.
double log_neg_log_gaussian_cdf(double t);

} // namespace renyisec
