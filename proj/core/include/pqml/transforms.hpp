// SPDX-License-Identifier: Apache-2.0
//
// Direct numerical Mellin transform of the extended (p,q)-Mittag-Leffler
// function in the (p, q) variables: the independent oracle against the
// closed 2Psi2 form. The default route exchanges the order of integration,
// which collapses the p and q integrals to t^s Gamma(s) and (1-t)^r Gamma(r)
// analytically and leaves a single t-quadrature; a raw double-quadrature
// mode is kept for low-tolerance spot checks of that reduction.
#pragma once

#include "pqml/mlcore.hpp"
#include "pqml/types.hpp"

namespace pqml {

struct MellinPoint {
  double s;
  double r;

  void validate() const {
    if (!(s > 0.0) || !(r > 0.0))
      throw std::invalid_argument("MellinPoint: requires s > 0 and r > 0");
  }
};

enum class MellinMode { reduced, double_quadrature };

// Int_0^inf Int_0^inf p^(s-1) q^(r-1) E(z; p, q) dp dq. params.p/params.q of
// `base` are ignored; they are the integration variables.
EvalResult mellin_numeric(const MLParams& base, const MellinPoint& pt, double z,
                          const QuadConfig& qcfg = de_quad_config(),
                          MellinMode mode = MellinMode::reduced,
                          const SeriesConfig& scfg = {});

// Diagonal integral Int_0^inf E(z; p, p) dp with the one-parameter extended
// series as integrand.
EvalResult mellin_diag_numeric(const MLParams& base, double z,
                               const QuadConfig& qcfg = de_quad_config(),
                               const SeriesConfig& scfg = {});

}  // namespace pqml
