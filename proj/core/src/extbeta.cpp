// SPDX-License-Identifier: Apache-2.0
#include "pqml/extbeta.hpp"

#include <cmath>

#include "pqml/gamma.hpp"

namespace pqml {

double log_beta_classical(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("beta_classical: requires x > 0 and y > 0");
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

double beta_classical(double x, double y) {
  return std::exp(log_beta_classical(x, y));
}

namespace {

// Both kernels are evaluated in log space: t^(x-1) alone can overflow for
// small x while the exponential factor underflows, and their product must
// come out as a clean 0 rather than inf * 0.
EvalResult beta_kernel_integral(double x, double y, double p, double q,
                                bool one_param, const QuadConfig& cfg) {
  BetaArgs{x, y, p, q}.validate();
  auto f = [=](double t, double tc) {
    double lg = (x - 1.0) * std::log(t) + (y - 1.0) * std::log(tc);
    if (one_param) {
      if (p > 0.0) lg -= p / (t * tc);
    } else {
      if (p > 0.0) lg -= p / t;
      if (q > 0.0) lg -= q / tc;
    }
    return std::exp(lg);
  };
  return quad_unit(f, cfg);
}

}  // namespace

EvalResult beta_p(double x, double y, double p, const QuadConfig& cfg) {
  return beta_kernel_integral(x, y, p, p, /*one_param=*/true, cfg);
}

EvalResult beta_pq(double x, double y, double p, double q, const QuadConfig& cfg) {
  return beta_kernel_integral(x, y, p, q, /*one_param=*/false, cfg);
}

}  // namespace pqml
