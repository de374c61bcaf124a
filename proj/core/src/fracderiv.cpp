// SPDX-License-Identifier: Apache-2.0
#include "pqml/fracderiv.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "pqml/gamma.hpp"
#include "pqml/mlcore.hpp"

namespace pqml {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class KernelKind { none, one_param, two_param };

// All negative-order operators reduce, via tau = x*s, to
//   x^nu / Gamma(nu) * Int_0^1 f(x s) (1-s)^(nu-1) K(s) ds,   nu = -lambda,
// with K the kernel in the s variable: the substitution turns
// p x/tau into p/s, q x/(x-tau) into q/(1-s) and p x^2/(tau(x-tau)) into
// p/(s(1-s)). The (1-s)^(nu-1) endpoint singularity is integrable and sits
// where the unit-interval rule keeps exact offsets.
EvalResult rl_negative_order(const RealFn& f, double nu, double x, double p, double q,
                             KernelKind kind, const QuadConfig& qcfg) {
  if (!(x > 0.0)) throw std::domain_error("rl_frac: requires x > 0");
  auto g = [&](double s, double sc) {
    double lg = (nu - 1.0) * std::log(sc);
    switch (kind) {
      case KernelKind::none:
        break;
      case KernelKind::one_param:
        if (p > 0.0) lg -= p / (s * sc);
        break;
      case KernelKind::two_param:
        if (p > 0.0) lg -= p / s;
        if (q > 0.0) lg -= q / sc;
        break;
    }
    return std::exp(lg) * f(x * s);
  };
  EvalResult res = quad_unit(g, qcfg);
  double scale = std::pow(x, nu) * rgamma(nu);
  res.value *= scale;
  res.abs_err_est *= std::fabs(scale);
  return res;
}

EvalResult positive_order(const RealFn& f, const FracOrder& order, double x, double p,
                          double q, KernelKind kind, const QuadConfig& qcfg) {
  order.validate();
  if (!(order.m >= 1))
    throw std::invalid_argument("rl_frac_pos: requires a positive order (m >= 1)");
  if (!(x > 0.0)) throw std::domain_error("rl_frac_pos: requires x > 0");

  const unsigned m = order.m;
  const double nu = double(m) - order.lambda;  // inner integral order, in (0,1)
  const double h = x * std::pow(qcfg.rel_tol, 1.0 / double(m + 2));

  // Tighten the inner quadrature: its error is divided by h^m below.
  QuadConfig inner_cfg = qcfg;
  inner_cfg.rel_tol = std::min(qcfg.rel_tol, 1e-12);
  inner_cfg.abs_tol = std::min(qcfg.abs_tol, 1e-15);

  // Central stencil: F^(m)(x) ~ h^-m sum_j (-1)^j C(m,j) F(x + (m/2 - j) h).
  EvalResult res;
  double sum = 0.0, suberr = 0.0, fmax = 0.0;
  bool all_ok = true;
  double binom = 1.0;
  for (unsigned j = 0; j <= m; ++j) {
    double xi = x + (0.5 * double(m) - double(j)) * h;
    EvalResult F = rl_negative_order(f, nu, xi, p, q, kind, inner_cfg);
    res.effort += F.effort;
    if (!F.ok()) all_ok = false;
    double cj = (j % 2 == 0 ? 1.0 : -1.0) * binom;
    sum += cj * F.value;
    suberr += std::fabs(binom) * F.abs_err_est;
    fmax = std::max(fmax, std::fabs(F.value));
    binom *= double(m - j) / double(j + 1);
  }
  double hm = std::pow(h, double(m));
  res.value = sum / hm;
  // FD noise floor plus a crude truncation term; the step choice balances
  // the two around rel_tol^(2/(m+2)).
  double noise = (suberr + fmax * kEps * double(m + 2)) / hm;
  res.abs_err_est = noise + std::fabs(res.value) * h * h;
  res.status = all_ok ? EvalStatus::converged : EvalStatus::tolerance_not_met;
  if (noise > 0.1 * std::fabs(res.value) && res.value != 0.0)
    res.status = EvalStatus::tolerance_not_met;  // noise-dominated stencil
  return res;
}

}  // namespace

FracOrder FracOrder::of(double lambda) {
  if (lambda < 0.0) return {lambda, 0};
  if (lambda == std::floor(lambda))
    throw std::invalid_argument(
        "FracOrder: non-negative integer order is not a fractional operator here");
  return {lambda, unsigned(std::ceil(lambda))};
}

void FracOrder::validate() const {
  if (lambda < 0.0) {
    if (m != 0) throw std::invalid_argument("FracOrder: m must be 0 for lambda < 0");
  } else {
    if (m < 1 || !(double(m) - 1.0 < lambda) || !(lambda < double(m)))
      throw std::invalid_argument("FracOrder: requires m-1 < lambda < m with m >= 1");
  }
}

EvalResult rl_frac(const RealFn& f, const FracOrder& order, double x,
                   const QuadConfig& qcfg) {
  order.validate();
  if (!(order.lambda < 0.0))
    throw std::invalid_argument("rl_frac: requires lambda < 0 (use rl_frac_pos)");
  return rl_negative_order(f, -order.lambda, x, 0.0, 0.0, KernelKind::none, qcfg);
}

EvalResult rl_frac_pos(const RealFn& f, const FracOrder& order, double x,
                       const QuadConfig& qcfg) {
  return positive_order(f, order, x, 0.0, 0.0, KernelKind::none, qcfg);
}

EvalResult rl_ext_p(const RealFn& f, const FracOrder& order, double x, double p,
                    const QuadConfig& qcfg) {
  order.validate();
  if (!(order.lambda < 0.0)) throw std::invalid_argument("rl_ext_p: requires lambda < 0");
  if (p < 0.0) throw std::invalid_argument("rl_ext_p: requires p >= 0");
  return rl_negative_order(f, -order.lambda, x, p, p, KernelKind::one_param, qcfg);
}

EvalResult rl_ext_pq(const RealFn& f, const FracOrder& order, double x,
                     const ExtKernelParams& kp, const QuadConfig& qcfg) {
  order.validate();
  kp.validate();
  if (!(order.lambda < 0.0)) throw std::invalid_argument("rl_ext_pq: requires lambda < 0");
  return rl_negative_order(f, -order.lambda, x, kp.p, kp.q, KernelKind::two_param, qcfg);
}

EvalResult rl_ext_pq_pos(const RealFn& f, const FracOrder& order, double x,
                         const ExtKernelParams& kp, const QuadConfig& qcfg) {
  kp.validate();
  return positive_order(f, order, x, kp.p, kp.q, KernelKind::two_param, qcfg);
}

std::pair<EvalResult, EvalResult> theorem34_pair(double delta, double lambda,
                                                 double alpha, double beta,
                                                 const ExtKernelParams& kp, double z,
                                                 const QuadConfig& qcfg,
                                                 const SeriesConfig& scfg) {
  if (!(lambda > delta) || !(delta > 0.0))
    throw std::invalid_argument("theorem34_pair: requires lambda > delta > 0");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("theorem34_pair: requires alpha > 0 and beta > 0");
  kp.validate();
  if (!(z > 0.0)) throw std::domain_error("theorem34_pair: requires z > 0");

  // lhs: order delta - lambda < 0 applied to tau^(delta-1) E_prabhakar(tau),
  // inner Prabhakar upper index = lambda (forced by matching the integral
  // representation of the rhs function).
  auto prab = std::make_shared<PrabhakarSeries>(alpha, beta, lambda);
  RealFn f = [prab, delta](double tau) {
    return std::pow(tau, delta - 1.0) * (*prab)(tau);
  };
  EvalResult lhs = rl_ext_pq(f, FracOrder::of(delta - lambda), z, kp, qcfg);

  // rhs: z^(lambda-1) Gamma(delta)/Gamma(lambda) E^{delta,lambda}(z; p, q).
  MLParams P{alpha, beta, delta, lambda, kp.p, kp.q};
  EvalResult rhs = ml_extended_pq(P, z, scfg, qcfg);
  double scale = std::pow(z, lambda - 1.0) * std::exp(log_gamma(delta) - log_gamma(lambda));
  rhs.value *= scale;
  rhs.abs_err_est *= std::fabs(scale);
  return {lhs, rhs};
}

RealFn make_integrand(const std::string& name, const std::map<std::string, double>& args) {
  auto get = [&args](const std::string& key, double dflt) {
    auto it = args.find(key);
    return it == args.end() ? dflt : it->second;
  };
  if (name == "monomial") {
    double a = get("exponent", 1.0);
    return [a](double t) { return std::pow(t, a); };
  }
  if (name == "exponential") {
    double rate = get("rate", 1.0);
    return [rate](double t) { return std::exp(rate * t); };
  }
  if (name == "prabhakar-ml") {
    auto series = std::make_shared<PrabhakarSeries>(get("alpha", 1.0), get("beta", 1.0),
                                                    get("c", 1.0));
    double scale = get("scale", 1.0);
    return [series, scale](double t) { return (*series)(scale * t); };
  }
  if (name == "extended-ml") {
    MLParams P{get("alpha", 1.0), get("beta", 1.0), get("gamma", 1.0),
               get("c", 2.0),     get("p", 0.0),    get("q", 0.0)};
    auto ml = std::make_shared<ExtendedMl>(P);
    double scale = get("scale", 1.0);
    return [ml, scale](double t) { return ml->value(scale * t).value; };
  }
  throw std::invalid_argument("make_integrand: unknown integrand '" + name + "'");
}

std::vector<std::string> integrand_names() {
  return {"monomial", "exponential", "prabhakar-ml", "extended-ml"};
}

}  // namespace pqml
