// SPDX-License-Identifier: Apache-2.0
//
// The Mittag-Leffler family: the three-parameter (Prabhakar) series, the
// Shukla-Prajapati variant with Pochhammer stride k, the one-parameter
// extended series whose coefficients are extended-beta ratios, and the
// two-parameter (p,q) extension
//
//   E(z) = sum_n  [beta(gamma+n, c-gamma; p, q) / B(gamma, c-gamma)]
//                 (c)_n z^n / (Gamma(alpha n + beta) n!)
//
// together with its unit-interval, half-line and trigonometric integral
// representations, term-wise derivatives, and the beta+alpha*z*d/dz
// recurrence.
#pragma once

#include <memory>
#include <vector>

#include "pqml/quadrature.hpp"
#include "pqml/types.hpp"

namespace pqml {

// The six-tuple parameterizing the extended (p,q)-Mittag-Leffler function.
struct MLParams {
  double alpha;  // series order, > 0
  double beta;   // gamma-argument shift, > 0
  double gamma;  // extension numerator index, 0 < gamma < c
  double c;      // upper Pochhammer index
  double p = 0.0;
  double q = 0.0;

  void validate() const;
};

// Prabhakar series sum_n (c)_n x^n / (Gamma(alpha n + beta) n!) with the
// per-n coefficients cached, so repeated evaluations inside a quadrature
// cost one short polynomial loop each. Not safe for concurrent use while
// the cache is still growing.
class PrabhakarSeries {
 public:
  PrabhakarSeries(double alpha, double beta, double c);

  double operator()(double x) const;

 private:
  void extend(std::size_t n) const;

  double alpha_, beta_, c_;
  mutable std::vector<double> coef_;
  mutable double next_u_ = 1.0;  // (c)_k / k! for k = coef_.size()
};

// Cached coefficient ratios beta(gamma+n, c-gamma; p, q) / B(gamma, c-gamma)
// (or the one-parameter-kernel variant). Each entry is an independent
// tanh-sinh quadrature, the dominant cost of an extended-ML evaluation, so
// the table is shared across z values, series shifts, and derivatives.
// p = q = 0 entries use the closed Gamma-ratio form instead of quadrature.
// Extension is lazy; warm the table from a single thread before sharing.
class ExtBetaRatios {
 public:
  enum class Kernel { two_param, one_param };

  ExtBetaRatios(double gamma, double c, double p, double q,
                Kernel kernel = Kernel::two_param,
                const QuadConfig& cfg = de_quad_config());

  double ratio(std::size_t n) const;
  double rel_err(std::size_t n) const;  // relative uncertainty of ratio(n)
  bool all_converged() const noexcept { return all_converged_; }
  std::int64_t effort() const noexcept { return effort_; }

  double gamma_index() const noexcept { return gamma_; }
  double upper_index() const noexcept { return c_; }

 private:
  void extend(std::size_t n) const;

  double gamma_, c_, p_, q_;
  Kernel kernel_;
  QuadConfig cfg_;
  double log_denom_;  // log B(gamma, c-gamma)
  mutable std::vector<double> ratio_, err_;
  mutable std::int64_t effort_ = 0;
  mutable bool all_converged_ = true;
};

// Low-level series evaluator shared by the value, derivative and recurrence
// paths: sums
//   sum_k ratios(k+d) (c)_{k+d} z^k / (Gamma(alpha (k+d) + beta) k!)
// which for d = 0 is the extended ML function and for d = n its exact n-th
// term-wise derivative. `beta` may be any real here (shifted variants walk
// it below zero); gamma poles in a term zero that term.
EvalResult ext_ml_series(const ExtBetaRatios& ratios, double alpha, double beta,
                         double c, unsigned deriv_order, double z,
                         const SeriesConfig& cfg = {});

// Evaluator bundling parameters with a shared coefficient table.
class ExtendedMl {
 public:
  explicit ExtendedMl(const MLParams& params, const QuadConfig& qcfg = de_quad_config());
  ExtendedMl(const MLParams& params, std::shared_ptr<const ExtBetaRatios> ratios);

  const MLParams& params() const noexcept { return params_; }
  std::shared_ptr<const ExtBetaRatios> ratios() const noexcept { return ratios_; }

  EvalResult value(double z, const SeriesConfig& cfg = {}) const;
  EvalResult derivative(double z, unsigned n, const SeriesConfig& cfg = {}) const;

 private:
  MLParams params_;
  std::shared_ptr<const ExtBetaRatios> ratios_;
};

// --- series forms ---

// Prabhakar: sum_n (g)_n z^n / (Gamma(rho n + sigma) n!).
EvalResult ml_prabhakar(double rho, double sigma, double g, double z,
                        const SeriesConfig& cfg = {});

// Shukla-Prajapati: sum_n (delta)_{n k} z^n / (Gamma(rho n + sigma) n!),
// integer stride k >= 1.
EvalResult ml_shukla(double rho, double sigma, double delta, unsigned k, double z,
                     const SeriesConfig& cfg = {});

// One-parameter extension: coefficients beta_p(gamma+n, c-gamma)/B(gamma, c-gamma).
EvalResult ml_extended_p(const MLParams& params, double z, const SeriesConfig& cfg = {},
                         const QuadConfig& qcfg = de_quad_config());

// Two-parameter (p,q) extension, Eq. at top of file.
EvalResult ml_extended_pq(const MLParams& params, double z, const SeriesConfig& cfg = {},
                          const QuadConfig& qcfg = de_quad_config());

// --- integral representations (alternate evaluation routes) ---

// (1/B(gamma,c-gamma)) Int_0^1 t^(gamma-1)(1-t)^(c-gamma-1)
//     exp(-p/t - q/(1-t)) E_prabhakar(tz) dt.
EvalResult ml_integral_unit(const MLParams& params, double z,
                            const QuadConfig& qcfg = de_quad_config());

// Same after t = u/(1+u): a half-line integral in u.
EvalResult ml_integral_halfline(const MLParams& params, double z,
                                const QuadConfig& qcfg = de_quad_config());

// Same after t = sin^2(theta): an integral over (0, pi/2).
EvalResult ml_integral_trig(const MLParams& params, double z,
                            const QuadConfig& qcfg = de_quad_config());

// --- derivatives and the recurrence ---

// Exact n-th derivative by term-wise differentiation of the series.
EvalResult ml_term_derivative(const MLParams& params, double z, unsigned n,
                              const SeriesConfig& cfg = {},
                              const QuadConfig& qcfg = de_quad_config());

// Residual of E_beta(z) = beta*E_{beta+1}(z) + alpha*z*(d/dz)E_{beta+1}(z);
// a correct implementation returns ~0.
double ml_recurrence_residual(const MLParams& params, double z,
                              const SeriesConfig& cfg = {},
                              const QuadConfig& qcfg = de_quad_config());

}  // namespace pqml
