// SPDX-License-Identifier: Apache-2.0
//
// Wright generalized hypergeometric series
//
//   pPsiq(z) = sum_n  prod_i Gamma(a_i + mu_i n) / prod_j Gamma(b_j + lambda_j n)
//              * z^n / n!
//
// evaluated in log space with sign tracking (the raw Gamma ratios overflow
// near n ~ 170), plus the closed-form Mellin transform of the extended
// (p,q)-Mittag-Leffler function expressed through a 2Psi2.
#pragma once

#include <utility>
#include <vector>

#include "pqml/mlcore.hpp"
#include "pqml/types.hpp"

namespace pqml {

struct WrightSpec {
  std::vector<std::pair<double, double>> upper;  // (a_i, mu_i), mu_i > 0
  std::vector<std::pair<double, double>> lower;  // (b_j, lambda_j), lambda_j > 0

  // 1 + sum(lambda_j) - sum(mu_i); the series converges for all z when this
  // is positive and inside a finite radius when it is zero.
  double convergence_margin() const noexcept;
  double finite_radius() const noexcept;  // prod lambda^lambda / prod mu^mu

  void validate() const;  // weights must be positive, margin >= 0
};

EvalResult wright_psi(const WrightSpec& spec, double z, const SeriesConfig& cfg = {});

// Lower 2Psi2 pair used by mellin_closed_form: `derived` is (beta, alpha),
// forced by the Gamma(alpha n + beta) denominators of the underlying series;
// `as_printed` is the (beta, gamma) variant, kept computable so the verifier
// can quantify how far it lands from the double-integral route.
enum class MellinLowerPair { derived, as_printed };

// Closed form of the Mellin transform (in the p and q variables jointly) of
// the extended (p,q)-ML function at the point (s, r):
//
//   Gamma(s)Gamma(r)Gamma(c+r-gamma) / (Gamma(gamma)Gamma(c-gamma))
//     * 2Psi2[(c,1),(gamma+s,1); (beta,alpha),(c+s+r,1); z].
//
// params.p/params.q are ignored (they are the transform variables).
EvalResult mellin_closed_form(const MLParams& params, double s, double r, double z,
                              const SeriesConfig& cfg = {},
                              MellinLowerPair pair = MellinLowerPair::derived);

}  // namespace pqml
