// SPDX-License-Identifier: Apache-2.0
//
// Series summation helper shared by the Mittag-Leffler and Wright modules:
// Neumaier-compensated accumulation with a consecutive-small-terms stopping
// rule. Terms of these series are non-monotone for alpha < 1, so a single
// small term is not evidence of convergence; the tail guard requires several
// in a row.
#pragma once

#include <cmath>
#include <limits>

#include "pqml/types.hpp"

namespace pqml {

class NeumaierSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {

// Sums term(0), term(1), ... until cfg.tail_guard consecutive terms fall
// below rel_tol * |partial sum|. `coeff_rel_err(n)` reports the relative
// uncertainty carried by term n's coefficients (zero for exact series);
// it feeds the error estimate, not the stopping rule.
template <class TermFn, class CoeffErrFn>
EvalResult sum_series(TermFn&& term, CoeffErrFn&& coeff_rel_err, const SeriesConfig& cfg) {
  cfg.validate();
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  NeumaierSum acc;
  EvalResult res;
  double peak = 0.0;
  double tail_err = 0.0;
  double coeff_err = 0.0;
  int run = 0;
  bool stopped = false;

  for (std::size_t n = 0; n < cfg.max_terms; ++n) {
    double t = term(n);
    ++res.effort;
    if (!std::isfinite(t)) {
      res.value = acc.value();
      res.status = EvalStatus::tolerance_not_met;
      res.abs_err_est = std::fabs(res.value);
      return res;
    }
    acc.add(t);
    double at = std::fabs(t);
    peak = std::max(peak, at);
    coeff_err += at * coeff_rel_err(n);
    if (at <= cfg.rel_tol * std::fabs(acc.value())) {
      tail_err = std::max(tail_err, at);
      if (++run >= cfg.tail_guard) {
        stopped = true;
        break;
      }
    } else {
      run = 0;
      tail_err = 0.0;
    }
  }

  res.value = acc.value();
  res.abs_err_est = tail_err + coeff_err + 8.0 * kEps * peak;
  // Cancellation guard: once the largest term exceeds 1e15 x the sum, no
  // trustworthy digits remain and a garbage value must not be reported as
  // converged. Milder cancellation stays visible through abs_err_est.
  bool cancelled = peak > 1e15 * std::fabs(res.value);
  res.status = (stopped && !cancelled) ? EvalStatus::converged
                                       : EvalStatus::tolerance_not_met;
  return res;
}

template <class TermFn>
EvalResult sum_series(TermFn&& term, const SeriesConfig& cfg) {
  return sum_series(static_cast<TermFn&&>(term), [](std::size_t) { return 0.0; }, cfg);
}

}  // namespace detail
}  // namespace pqml
