// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace pqml {

// Outcome of a series summation or a quadrature.
enum class EvalStatus {
  converged,
  tolerance_not_met,  // refinement/term budget exhausted, or cancellation ate the digits
  domain_error,       // the requested value is not defined (pole, divergent series, ...)
};

// A computed value together with an error estimate and the work spent on it.
struct EvalResult {
  double value = 0.0;
  double abs_err_est = 0.0;  // absolute error estimate, >= 0
  std::int64_t effort = 0;   // series terms or integrand evaluations consumed
  EvalStatus status = EvalStatus::converged;

  [[nodiscard]] bool ok() const noexcept { return status == EvalStatus::converged; }
};

enum class QuadScheme {
  adaptive,            // Gauss-Kronrod 7/15, bisecting the worst interval
  double_exponential,  // tanh-sinh; the choice for kernels that decay to all
                       // orders at the endpoints and for integrable algebraic
                       // endpoint singularities
};

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_refinements = 20;
  QuadScheme scheme = QuadScheme::adaptive;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("QuadConfig: tolerances must be positive");
    if (max_refinements < 1)
      throw std::invalid_argument("QuadConfig: max_refinements must be >= 1");
  }
};

// Returns a QuadConfig selecting the tanh-sinh scheme, otherwise defaults.
inline QuadConfig de_quad_config(double rel_tol = 1e-12, double abs_tol = 1e-15) {
  QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_tol = abs_tol;
  cfg.scheme = QuadScheme::double_exponential;
  return cfg;
}

struct SeriesConfig {
  double rel_tol = 1e-12;
  std::size_t max_terms = 2000;
  int tail_guard = 3;  // consecutive negligible terms required before stopping

  void validate() const {
    if (!(rel_tol > 0.0))
      throw std::invalid_argument("SeriesConfig: rel_tol must be positive");
    if (max_terms < 1)
      throw std::invalid_argument("SeriesConfig: max_terms must be >= 1");
    if (tail_guard < 1)
      throw std::invalid_argument("SeriesConfig: tail_guard must be >= 1");
  }
};

}  // namespace pqml
