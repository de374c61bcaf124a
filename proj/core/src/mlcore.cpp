// SPDX-License-Identifier: Apache-2.0
#include "pqml/mlcore.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pqml/extbeta.hpp"
#include "pqml/gamma.hpp"
#include "pqml/series.hpp"

namespace pqml {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

void MLParams::validate() const {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("MLParams: requires alpha > 0 and beta > 0");
  if (!(c > gamma) || !(gamma > 0.0))
    throw std::invalid_argument("MLParams: requires c > gamma > 0");
  if (p < 0.0 || q < 0.0)
    throw std::invalid_argument("MLParams: requires p >= 0 and q >= 0");
}

// ---------------------------------------------------------------------------
// PrabhakarSeries
// ---------------------------------------------------------------------------

PrabhakarSeries::PrabhakarSeries(double alpha, double beta, double c)
    : alpha_(alpha), beta_(beta), c_(c) {
  coef_.reserve(32);
}

void PrabhakarSeries::extend(std::size_t n) const {
  // coef_[k] = (c)_k/k! * rgamma(alpha k + beta); next_u_ tracks (c)_k/k!
  // for the next k. rgamma underflow for large arguments makes the
  // coefficient exactly 0, which is the right tail behaviour.
  while (coef_.size() <= n) {
    std::size_t k = coef_.size();
    coef_.push_back(next_u_ * rgamma(alpha_ * double(k) + beta_));
    next_u_ *= (c_ + double(k)) / double(k + 1);
  }
}

double PrabhakarSeries::operator()(double x) const {
  NeumaierSum acc;
  double xn = 1.0;
  int run = 0;
  for (std::size_t n = 0; n < 512; ++n) {
    if (coef_.size() <= n) extend(n);
    double t = coef_[n] * xn;
    acc.add(t);
    if (std::fabs(t) <= 4.0 * kEps * std::fabs(acc.value())) {
      if (++run >= 3) break;
    } else {
      run = 0;
    }
    xn *= x;
  }
  return acc.value();
}

// ---------------------------------------------------------------------------
// ExtBetaRatios
// ---------------------------------------------------------------------------

ExtBetaRatios::ExtBetaRatios(double gamma, double c, double p, double q,
                             Kernel kernel, const QuadConfig& cfg)
    : gamma_(gamma), c_(c), p_(p), q_(q), kernel_(kernel), cfg_(cfg) {
  if (!(c > gamma) || !(gamma > 0.0))
    throw std::invalid_argument("ExtBetaRatios: requires c > gamma > 0");
  if (p < 0.0 || q < 0.0)
    throw std::invalid_argument("ExtBetaRatios: requires p, q >= 0");
  log_denom_ = log_beta_classical(gamma, c - gamma);
  ratio_.reserve(48);
  err_.reserve(48);
}

void ExtBetaRatios::extend(std::size_t n) const {
  while (ratio_.size() <= n) {
    std::size_t k = ratio_.size();
    double x = gamma_ + double(k);
    double y = c_ - gamma_;
    if (p_ == 0.0 && q_ == 0.0) {
      // Closed form: B(gamma+k, c-gamma)/B(gamma, c-gamma).
      double lg = log_gamma(x) - log_gamma(gamma_) + log_gamma(c_) - log_gamma(c_ + double(k));
      ratio_.push_back(std::exp(lg));
      err_.push_back(8.0 * kEps);
      continue;
    }
    EvalResult b = kernel_ == Kernel::two_param ? beta_pq(x, y, p_, q_, cfg_)
                                                : beta_p(x, y, p_, cfg_);
    effort_ += b.effort;
    if (!b.ok()) all_converged_ = false;
    double r = b.value * std::exp(-log_denom_);
    ratio_.push_back(r);
    err_.push_back(b.value > 0.0 ? b.abs_err_est / b.value + 8.0 * kEps : 1.0);
  }
}

double ExtBetaRatios::ratio(std::size_t n) const {
  extend(n);
  return ratio_[n];
}

double ExtBetaRatios::rel_err(std::size_t n) const {
  extend(n);
  return err_[n];
}

// ---------------------------------------------------------------------------
// extended-ML series
// ---------------------------------------------------------------------------

EvalResult ext_ml_series(const ExtBetaRatios& ratios, double alpha, double beta,
                         double c, unsigned deriv_order, double z,
                         const SeriesConfig& cfg) {
  const unsigned d = deriv_order;
  const double log_gamma_c = log_gamma(c);

  // Single surviving term at z = 0.
  if (z == 0.0) {
    EvalResult res;
    double r = ratios.ratio(d);
    double pochc = pochhammer(c, d);
    res.value = r * pochc * rgamma(alpha * double(d) + beta);
    res.abs_err_est = std::fabs(res.value) * (ratios.rel_err(d) + 8.0 * kEps);
    res.effort = 1;
    res.status = ratios.all_converged() ? EvalStatus::converged
                                        : EvalStatus::tolerance_not_met;
    return res;
  }

  const double log_abs_z = std::log(std::fabs(z));
  const int sign_z = z > 0.0 ? 1 : -1;

  auto term = [&](std::size_t k) -> double {
    double m = double(k) + double(d);
    double r = ratios.ratio(k + d);
    if (r <= 0.0) return 0.0;
    double ga = alpha * m + beta;  // may be <= 0 for shifted beta
    if (is_nonpositive_integer(ga)) return 0.0;
    int gsign = 1;
    double lg = std::log(r) + log_gamma(c + m) - log_gamma_c +
                double(k) * log_abs_z - log_gamma(double(k) + 1.0) -
                log_abs_gamma(ga, &gsign);
    double sgn = (sign_z < 0 && (k & 1u)) ? -1.0 : 1.0;
    return sgn * double(gsign) * std::exp(lg);
  };
  auto coeff_err = [&](std::size_t k) { return ratios.rel_err(k + d); };

  EvalResult res = detail::sum_series(term, coeff_err, cfg);
  if (!ratios.all_converged() && res.status == EvalStatus::converged)
    res.status = EvalStatus::tolerance_not_met;
  return res;
}

// ---------------------------------------------------------------------------
// ExtendedMl
// ---------------------------------------------------------------------------

ExtendedMl::ExtendedMl(const MLParams& params, const QuadConfig& qcfg)
    : params_(params) {
  params_.validate();
  ratios_ = std::make_shared<ExtBetaRatios>(params.gamma, params.c, params.p,
                                            params.q, ExtBetaRatios::Kernel::two_param,
                                            qcfg);
}

ExtendedMl::ExtendedMl(const MLParams& params, std::shared_ptr<const ExtBetaRatios> ratios)
    : params_(params), ratios_(std::move(ratios)) {
  params_.validate();
}

EvalResult ExtendedMl::value(double z, const SeriesConfig& cfg) const {
  return ext_ml_series(*ratios_, params_.alpha, params_.beta, params_.c, 0, z, cfg);
}

EvalResult ExtendedMl::derivative(double z, unsigned n, const SeriesConfig& cfg) const {
  return ext_ml_series(*ratios_, params_.alpha, params_.beta, params_.c, n, z, cfg);
}

// ---------------------------------------------------------------------------
// series-form entry points
// ---------------------------------------------------------------------------

EvalResult ml_prabhakar(double rho, double sigma, double g, double z,
                        const SeriesConfig& cfg) {
  if (!(rho > 0.0) || !(sigma > 0.0))
    throw std::invalid_argument("ml_prabhakar: requires rho > 0 and sigma > 0");
  // u_n = (g)_n z^n / n!, updated in place; rgamma applied per term.
  double u = 1.0;
  auto term = [&](std::size_t n) -> double {
    if (n > 0) u *= (g + double(n - 1)) * z / double(n);
    return u * rgamma(rho * double(n) + sigma);
  };
  return detail::sum_series(term, cfg);
}

EvalResult ml_shukla(double rho, double sigma, double delta, unsigned k, double z,
                     const SeriesConfig& cfg) {
  if (!(rho > 0.0) || !(sigma > 0.0))
    throw std::invalid_argument("ml_shukla: requires rho > 0 and sigma > 0");
  if (k < 1) throw std::invalid_argument("ml_shukla: requires k >= 1");
  double u = 1.0;  // (delta)_{nk} z^n / n!
  auto term = [&](std::size_t n) -> double {
    if (n > 0) {
      double base = delta + double((n - 1) * k);
      double f = 1.0;
      for (unsigned j = 0; j < k; ++j) f *= base + double(j);
      u *= f * z / double(n);
    }
    return u * rgamma(rho * double(n) + sigma);
  };
  return detail::sum_series(term, cfg);
}

EvalResult ml_extended_p(const MLParams& params, double z, const SeriesConfig& cfg,
                         const QuadConfig& qcfg) {
  params.validate();
  ExtBetaRatios ratios(params.gamma, params.c, params.p, params.p,
                       ExtBetaRatios::Kernel::one_param, qcfg);
  return ext_ml_series(ratios, params.alpha, params.beta, params.c, 0, z, cfg);
}

EvalResult ml_extended_pq(const MLParams& params, double z, const SeriesConfig& cfg,
                          const QuadConfig& qcfg) {
  return ExtendedMl(params, qcfg).value(z, cfg);
}

// ---------------------------------------------------------------------------
// integral representations
// ---------------------------------------------------------------------------

EvalResult ml_integral_unit(const MLParams& P, double z, const QuadConfig& qcfg) {
  P.validate();
  PrabhakarSeries inner(P.alpha, P.beta, P.c);
  const double log_b = log_beta_classical(P.gamma, P.c - P.gamma);
  auto f = [&](double t, double tc) {
    double lg = (P.gamma - 1.0) * std::log(t) + (P.c - P.gamma - 1.0) * std::log(tc) - log_b;
    if (P.p > 0.0) lg -= P.p / t;
    if (P.q > 0.0) lg -= P.q / tc;
    return std::exp(lg) * inner(t * z);
  };
  return quad_unit(f, qcfg);
}

EvalResult ml_integral_halfline(const MLParams& P, double z, const QuadConfig& qcfg) {
  P.validate();
  PrabhakarSeries inner(P.alpha, P.beta, P.c);
  const double log_b = log_beta_classical(P.gamma, P.c - P.gamma);
  auto f = [&](double u) {
    double lg = (P.gamma - 1.0) * std::log(u) - P.c * std::log1p(u) - log_b;
    if (P.p > 0.0) lg -= P.p * (1.0 + u) / u;
    if (P.q > 0.0) lg -= P.q * (1.0 + u);
    return std::exp(lg) * inner(u / (1.0 + u) * z);
  };
  return quad_semi_infinite(f, qcfg);
}

EvalResult ml_integral_trig(const MLParams& P, double z, const QuadConfig& qcfg) {
  P.validate();
  PrabhakarSeries inner(P.alpha, P.beta, P.c);
  const double log_b = log_beta_classical(P.gamma, P.c - P.gamma);
  auto f = [&](double theta) {
    double sn = std::sin(theta), cs = std::cos(theta);
    double lg = (2.0 * P.gamma - 1.0) * std::log(sn) +
                (2.0 * (P.c - P.gamma) - 1.0) * std::log(cs) - log_b;
    if (P.p > 0.0) lg -= P.p / (sn * sn);
    if (P.q > 0.0) lg -= P.q / (cs * cs);
    return 2.0 * std::exp(lg) * inner(z * sn * sn);
  };
  return quad_finite(f, 0.0, 1.57079632679489661923, qcfg);
}

// ---------------------------------------------------------------------------
// derivatives, recurrence
// ---------------------------------------------------------------------------

EvalResult ml_term_derivative(const MLParams& params, double z, unsigned n,
                              const SeriesConfig& cfg, const QuadConfig& qcfg) {
  return ExtendedMl(params, qcfg).derivative(z, n, cfg);
}

double ml_recurrence_residual(const MLParams& params, double z,
                              const SeriesConfig& cfg, const QuadConfig& qcfg) {
  ExtendedMl e(params, qcfg);
  const auto& R = *e.ratios();
  EvalResult lhs = ext_ml_series(R, params.alpha, params.beta, params.c, 0, z, cfg);
  EvalResult up = ext_ml_series(R, params.alpha, params.beta + 1.0, params.c, 0, z, cfg);
  EvalResult dup = ext_ml_series(R, params.alpha, params.beta + 1.0, params.c, 1, z, cfg);
  return lhs.value - (params.beta * up.value + params.alpha * z * dup.value);
}

}  // namespace pqml
