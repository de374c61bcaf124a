// SPDX-License-Identifier: Apache-2.0
//
// Riemann-Liouville fractional derivatives as quadrature-backed operators on
// caller-supplied functions, in three kernel flavours: classical, the
// one-parameter extension exp(-p x^2/(tau (x-tau))), and the (p,q) extension
// exp(-p x/tau - q x/(x-tau)). Negative order is the fractional integral;
// positive order composes m ordinary derivatives (central finite
// differences) with a fractional integral of order lambda - m.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqml/quadrature.hpp"
#include "pqml/types.hpp"

namespace pqml {

struct FracOrder {
  double lambda;   // operator order; lambda < 0 means fractional integral
  unsigned m = 0;  // classical derivative count; m-1 < lambda < m when m >= 1

  // Builds the order from lambda alone: m = 0 for lambda < 0, otherwise
  // m = ceil(lambda). Throws for non-negative integer lambda (the classical
  // derivative count is then ill-posed in this representation).
  static FracOrder of(double lambda);

  void validate() const;
};

struct ExtKernelParams {
  double p = 0.0;
  double q = 0.0;

  void validate() const {
    if (p < 0.0 || q < 0.0)
      throw std::invalid_argument("ExtKernelParams: requires p >= 0 and q >= 0");
  }
};

using RealFn = std::function<double(double)>;

// (1/Gamma(-lambda)) Int_0^x f(tau) (x-tau)^(-lambda-1) dtau, lambda < 0.
EvalResult rl_frac(const RealFn& f, const FracOrder& order, double x,
                   const QuadConfig& qcfg = de_quad_config());

// Positive order: d^m/dx^m of the order (lambda - m) fractional integral,
// outer derivative by central finite differences with step
// h = x * rel_tol^(1/(m+2)).
EvalResult rl_frac_pos(const RealFn& f, const FracOrder& order, double x,
                       const QuadConfig& qcfg = de_quad_config());

// One-parameter extended kernel exp(-p x^2 / (tau (x - tau))), lambda < 0.
EvalResult rl_ext_p(const RealFn& f, const FracOrder& order, double x, double p,
                    const QuadConfig& qcfg = de_quad_config());

// Two-parameter extended kernel exp(-p x/tau - q x/(x - tau)), lambda < 0.
EvalResult rl_ext_pq(const RealFn& f, const FracOrder& order, double x,
                     const ExtKernelParams& kp, const QuadConfig& qcfg = de_quad_config());

// Positive-order (p,q) variant, composed exactly like rl_frac_pos.
EvalResult rl_ext_pq_pos(const RealFn& f, const FracOrder& order, double x,
                         const ExtKernelParams& kp,
                         const QuadConfig& qcfg = de_quad_config());

// Two independent routes to the same quantity: lhs applies the (p,q)
// fractional integral of order delta - lambda to tau^(delta-1) E_prabhakar
// (upper index lambda) at x = z; rhs is
// z^(lambda-1) Gamma(delta)/Gamma(lambda) * E^{delta,lambda}_{alpha,beta}(z; p, q).
// Requires lambda > delta > 0.
std::pair<EvalResult, EvalResult> theorem34_pair(double delta, double lambda,
                                                 double alpha, double beta,
                                                 const ExtKernelParams& kp, double z,
                                                 const QuadConfig& qcfg = de_quad_config(),
                                                 const SeriesConfig& scfg = {});

// Named integrands for the CLI: "monomial" (exponent), "exponential" (rate),
// "prabhakar-ml" (alpha, beta, c, scale), "extended-ml" (alpha, beta, gamma,
// c, p, q, scale).
RealFn make_integrand(const std::string& name, const std::map<std::string, double>& args);
std::vector<std::string> integrand_names();

}  // namespace pqml
