// SPDX-License-Identifier: Apache-2.0
//
// Scalar gamma-family kernels: gamma, log-gamma, a *total* reciprocal gamma
// (zero at the poles), and rising factorials. Everything downstream -- the
// extended beta integrals, the Mittag-Leffler series, the Wright series --
// is built on these four functions.
#pragma once

namespace pqml {

// Largest x for which Gamma(x) is representable in binary64.
inline constexpr double kGammaMaxArg = 171.624376956302725;

// sin(pi*x) with exact zeros at the integers (argument reduction done on x,
// not on pi*x).
double sin_pi(double x) noexcept;

bool is_nonpositive_integer(double x) noexcept;

// Gamma(x). Throws std::domain_error at x = 0, -1, -2, ...; overflow past
// kGammaMaxArg is signalled with +/-infinity.
double gamma(double x);

// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// ln |Gamma(x)| for any non-pole x; *sign receives the sign of Gamma(x).
// Throws std::domain_error at the poles.
double log_abs_gamma(double x, int* sign);

// 1/Gamma(x), defined for all x: exactly 0 at x = 0, -1, -2, ...
double rgamma(double x) noexcept;

// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1. Iterated
// product for small n, Gamma ratio for large n.
double pochhammer(double a, unsigned n);

}  // namespace pqml
