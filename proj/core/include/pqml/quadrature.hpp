// SPDX-License-Identifier: Apache-2.0
//
// Adaptive quadrature used by every module: Gauss-Kronrod 7/15 with
// worst-interval bisection, and a level-doubling tanh-sinh rule for kernels
// with endpoint decay or integrable endpoint singularities.
#pragma once

#include <functional>

#include "pqml/types.hpp"

namespace pqml {

using Integrand = std::function<double(double)>;

// Integrand on (0,1) that receives both t and 1-t, each accurate to the
// node. Use the second argument for every (1-t) factor: near the right
// endpoint 1-t keeps ~300 orders of magnitude that "1.0 - t" would round
// away.
using UnitIntegrand = std::function<double(double, double)>;

// Integral of f over (a, b). Endpoint values are never requested; a node
// that rounds onto an endpoint is skipped (its weight is negligible by
// then).
EvalResult quad_finite(const Integrand& f, double a, double b,
                       const QuadConfig& cfg = {});

// Integral of f over (0, inf) by the compactifying substitution
// u = t/(1-t); the finite-interval engine selected by cfg.scheme runs on
// the mapped integrand.
EvalResult quad_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});

// Integral over (0, 1) with exact endpoint offsets (see UnitIntegrand).
EvalResult quad_unit(const UnitIntegrand& f, const QuadConfig& cfg = {});

}  // namespace pqml
