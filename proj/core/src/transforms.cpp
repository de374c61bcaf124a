// SPDX-License-Identifier: Apache-2.0
#include "pqml/transforms.hpp"

#include <cmath>

#include "pqml/extbeta.hpp"
#include "pqml/gamma.hpp"

namespace pqml {

namespace {

EvalResult mellin_reduced(const MLParams& P, const MellinPoint& pt, double z,
                          const QuadConfig& qcfg) {
  // Gamma(s)Gamma(r)/B(gamma, c-gamma) *
  //   Int_0^1 t^(gamma+s-1) (1-t)^(c+r-gamma-1) E_prabhakar(tz) dt
  PrabhakarSeries inner(P.alpha, P.beta, P.c);
  const double xe = P.gamma + pt.s - 1.0;
  const double ye = P.c + pt.r - P.gamma - 1.0;
  EvalResult t_int = quad_unit(
      [&](double t, double tc) {
        return std::exp(xe * std::log(t) + ye * std::log(tc)) * inner(t * z);
      },
      qcfg);
  double pref = std::exp(log_gamma(pt.s) + log_gamma(pt.r) -
                         log_beta_classical(P.gamma, P.c - P.gamma));
  t_int.value *= pref;
  t_int.abs_err_est *= pref;
  return t_int;
}

EvalResult mellin_double(const MLParams& P, const MellinPoint& pt, double z,
                         const QuadConfig& qcfg, const SeriesConfig& scfg) {
  // Raw iterated quadrature; every inner point rebuilds the extended series
  // from its own beta-coefficient quadratures. O(nodes^3): spot checks only.
  EvalResult res;
  std::int64_t effort = 0;
  bool all_ok = true;

  auto outer = [&](double q) {
    auto inner = [&](double p) {
      MLParams Ppq = P;
      Ppq.p = p;
      Ppq.q = q;
      EvalResult e = ml_extended_pq(Ppq, z, scfg, qcfg);
      effort += e.effort;
      if (!e.ok()) all_ok = false;
      return std::pow(p, pt.s - 1.0) * e.value;
    };
    EvalResult ip = quad_semi_infinite(inner, qcfg);
    effort += ip.effort;
    if (!ip.ok()) all_ok = false;
    return std::pow(q, pt.r - 1.0) * ip.value;
  };

  res = quad_semi_infinite(outer, qcfg);
  res.effort += effort;
  if (!all_ok && res.status == EvalStatus::converged)
    res.status = EvalStatus::tolerance_not_met;
  return res;
}

}  // namespace

EvalResult mellin_numeric(const MLParams& base, const MellinPoint& pt, double z,
                          const QuadConfig& qcfg, MellinMode mode,
                          const SeriesConfig& scfg) {
  MLParams P = base;
  P.p = 0.0;
  P.q = 0.0;
  P.validate();
  pt.validate();
  return mode == MellinMode::reduced ? mellin_reduced(P, pt, z, qcfg)
                                     : mellin_double(P, pt, z, qcfg, scfg);
}

EvalResult mellin_diag_numeric(const MLParams& base, double z, const QuadConfig& qcfg,
                               const SeriesConfig& scfg) {
  MLParams P = base;
  P.p = 0.0;
  P.q = 0.0;
  P.validate();

  std::int64_t effort = 0;
  bool all_ok = true;
  auto f = [&](double p) {
    MLParams Pp = P;
    Pp.p = p;
    Pp.q = p;
    EvalResult e = ml_extended_p(Pp, z, scfg, qcfg);
    effort += e.effort;
    if (!e.ok()) all_ok = false;
    return e.value;
  };
  EvalResult res = quad_semi_infinite(f, qcfg);
  res.effort += effort;
  if (!all_ok && res.status == EvalStatus::converged)
    res.status = EvalStatus::tolerance_not_met;
  return res;
}

}  // namespace pqml
