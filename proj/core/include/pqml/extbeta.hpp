// SPDX-License-Identifier: Apache-2.0
//
// Euler beta function and its exponentially regularized extensions. The
// one-parameter form inserts exp(-p/(t(1-t))) into the beta integrand, the
// two-parameter form exp(-p/t - q/(1-t)); both reduce to the classical beta
// as the parameters go to zero, and they normalize every extended
// Mittag-Leffler series downstream.
#pragma once

#include "pqml/quadrature.hpp"
#include "pqml/types.hpp"

namespace pqml {

struct BetaArgs {
  double x;
  double y;
  double p = 0.0;
  double q = 0.0;

  void validate() const {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("BetaArgs: requires x > 0 and y > 0");
    if (p < 0.0 || q < 0.0)
      throw std::invalid_argument("BetaArgs: requires p >= 0 and q >= 0");
  }
};

// B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), formed in log space.
double beta_classical(double x, double y);
double log_beta_classical(double x, double y);

// Integral of t^(x-1) (1-t)^(y-1) exp(-p/(t(1-t))) over (0,1).
EvalResult beta_p(double x, double y, double p, const QuadConfig& cfg = de_quad_config());

// Integral of t^(x-1) (1-t)^(y-1) exp(-p/t - q/(1-t)) over (0,1).
EvalResult beta_pq(double x, double y, double p, double q,
                   const QuadConfig& cfg = de_quad_config());

}  // namespace pqml
