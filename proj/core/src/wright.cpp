// SPDX-License-Identifier: Apache-2.0
#include "pqml/wright.hpp"

#include <cmath>
#include <stdexcept>

#include "pqml/gamma.hpp"
#include "pqml/series.hpp"

namespace pqml {

double WrightSpec::convergence_margin() const noexcept {
  double m = 1.0;
  for (const auto& [b, lam] : lower) m += lam;
  for (const auto& [a, mu] : upper) m -= mu;
  return m;
}

double WrightSpec::finite_radius() const noexcept {
  double r = 1.0;
  for (const auto& [b, lam] : lower) r *= std::pow(lam, lam);
  for (const auto& [a, mu] : upper) r /= std::pow(mu, mu);
  return r;
}

void WrightSpec::validate() const {
  for (const auto& [a, mu] : upper)
    if (!(mu > 0.0)) throw std::invalid_argument("WrightSpec: upper weights must be > 0");
  for (const auto& [b, lam] : lower)
    if (!(lam > 0.0)) throw std::invalid_argument("WrightSpec: lower weights must be > 0");
  if (convergence_margin() < 0.0)
    throw std::invalid_argument("WrightSpec: 1 + sum(lambda) - sum(mu) must be >= 0");
}

EvalResult wright_psi(const WrightSpec& spec, double z, const SeriesConfig& cfg) {
  spec.validate();
  if (spec.convergence_margin() == 0.0 && std::fabs(z) >= spec.finite_radius()) {
    EvalResult res;
    res.status = EvalStatus::domain_error;
    return res;
  }

  bool upper_pole = false;
  auto term = [&](std::size_t n) -> double {
    double lg = -log_gamma(double(n) + 1.0);
    int sign = 1;
    for (const auto& [a, mu] : spec.upper) {
      double arg = a + mu * double(n);
      if (is_nonpositive_integer(arg)) {
        upper_pole = true;
        return std::numeric_limits<double>::quiet_NaN();  // aborts the sum
      }
      int s = 1;
      lg += log_abs_gamma(arg, &s);
      sign *= s;
    }
    for (const auto& [b, lam] : spec.lower) {
      double arg = b + lam * double(n);
      if (is_nonpositive_integer(arg)) return 0.0;  // rgamma convention
      int s = 1;
      lg -= log_abs_gamma(arg, &s);
      sign *= s;
    }
    if (n > 0) {
      if (z == 0.0) return 0.0;
      lg += double(n) * std::log(std::fabs(z));
      if (z < 0.0 && (n & 1u)) sign = -sign;
    }
    return double(sign) * std::exp(lg);
  };

  EvalResult res = detail::sum_series(term, cfg);
  if (upper_pole) {
    res.status = EvalStatus::domain_error;
    res.value = 0.0;
  }
  return res;
}

EvalResult mellin_closed_form(const MLParams& params, double s, double r, double z,
                              const SeriesConfig& cfg, MellinLowerPair pair) {
  params.validate();
  if (!(s > 0.0) || !(r > 0.0))
    throw std::invalid_argument("mellin_closed_form: requires s > 0 and r > 0");

  WrightSpec spec;
  spec.upper = {{params.c, 1.0}, {params.gamma + s, 1.0}};
  double lower_weight = pair == MellinLowerPair::derived ? params.alpha : params.gamma;
  spec.lower = {{params.beta, lower_weight}, {params.c + s + r, 1.0}};

  EvalResult w = wright_psi(spec, z, cfg);
  double log_pref = log_gamma(s) + log_gamma(r) + log_gamma(params.c + r - params.gamma) -
                    log_gamma(params.gamma) - log_gamma(params.c - params.gamma);
  double pref = std::exp(log_pref);
  w.value *= pref;
  w.abs_err_est *= pref;
  return w;
}

}  // namespace pqml
