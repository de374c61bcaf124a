// SPDX-License-Identifier: Apache-2.0
//
// Identity-verification harness: every identity the library implements is
// run as a numerical experiment over a parameter grid, comparing
// computationally independent evaluation routes. The suite also quantifies
// the known defects of the printed shift formulas (the *-as-printed
// reports), which are informational and never gate the outcome.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqml/types.hpp"

namespace pqml {

struct IdentityReport {
  std::string identity_id;  // e.g. "thm-2.1", "cor-2.4", "thm-3.5-as-printed"
  int grid_size = 0;
  double max_rel_err = 0.0;
  double median_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;  // always == (max_rel_err <= tolerance)
  std::string notes;
};

// Per-parameter sample lists. Every tuple drawn from them satisfies the
// MLParams invariants; grids that would violate them (e.g. lambda <= delta)
// are constructed so the bad region is excluded.
struct GridSpec {
  // route-agreement / recurrence grid (alpha x beta x gamma x c x pq x z)
  std::vector<double> alpha{0.5, 1.0, 2.0};
  std::vector<double> beta{0.5, 1.0, 2.0};
  std::vector<double> gamma{1.2};
  std::vector<double> c{2.5};
  std::vector<std::pair<double, double>> pq{{0, 0},       {0, 0.25}, {0, 1},
                                            {0.25, 0.25}, {0.25, 1}, {1, 1}};
  std::vector<double> z{-2.0, -0.5, 0.0, 0.5, 2.0};

  // Mellin grid: (alpha,beta) x (gamma,c) tuples, (s,r) points, z values
  std::vector<std::pair<double, double>> mellin_ab{{0.5, 1.2}, {1, 1},     {2, 1.5},
                                                   {1, 2},     {0.7, 0.9}, {1.5, 1}};
  std::vector<std::pair<double, double>> mellin_gc{{1.2, 2.5}, {0.9, 1.8}};
  std::vector<std::pair<double, double>> sr{{1, 1}, {1.5, 2}, {0.8, 1.2}};
  std::vector<double> mellin_z{0.0, 0.25, 0.5};
  int diag_check_tuples = 2;  // Cor 2.7 diagonal spot checks (notes only)

  // reduction-chain grid
  std::vector<double> red_alpha{0.5, 1.0};
  std::vector<double> red_beta{1.0, 1.5};
  std::vector<double> red_p{0.0, 0.3, 0.8, 1.5, 2.0};
  std::vector<double> red_z{-1.0, -0.3, 0.4, 1.0, 2.0};

  // fractional-derivative theorem grid (lambda all strictly above delta;
  // the near-degenerate delta -> lambda edge is excluded by construction)
  std::vector<double> delta{0.6, 1.0, 1.4};
  std::vector<double> lambda{1.8, 2.4, 3.0};
  std::vector<std::pair<double, double>> pq34{{0, 0}, {0.4, 0.8}};
  double alpha34 = 0.9, beta34 = 1.3, z34 = 0.8;

  // derivative-theorem grids
  std::vector<std::pair<double, double>> deriv_ab{
      {1, 1.5}, {0.5, 1.2}, {2, 1.1}, {1, 2.5}, {0.7, 1.8}};
  std::vector<std::pair<double, double>> deriv_pq{{0, 0}, {0.3, 0.6}};
  std::vector<double> deriv_z{0.4, 0.8};   // thm 3.5 evaluation points
  std::vector<double> deriv_mu{1.0, 0.7};  // thm 3.6 argument scale factors
  double deriv_z36 = 0.7;
  std::vector<int> n_values{1, 2, 3};

  // optional seeded random extension of the route grid
  std::uint64_t seed = 0;
  int random_tuples = 0;

  static GridSpec defaults() { return {}; }
  static GridSpec extended();  // denser z / pq lists, same structure
};

struct VerifyConfig {
  GridSpec grid;
  std::map<std::string, double> tolerances;  // per-identity; see default_tolerances()
  std::vector<std::string> identities;       // selection; empty = all
  QuadConfig quad = de_quad_config();
  SeriesConfig series;
  std::string report_path = "pqml_verify_report.json";

  static VerifyConfig defaults();
  // Load a JSON config; missing fields keep their defaults, an empty or
  // whitespace-only file means "all defaults". Parse errors carry the field
  // path. An explicitly empty grid list is an error.
  static VerifyConfig load(const std::string& path);
};

const std::map<std::string, double>& default_tolerances();
std::vector<std::string> all_identity_ids();

// --- single-identity experiments (each returns one report) ---

// Reduction chain: E(z;p,p) vs the one-parameter series, and E(z;0,0) vs
// Prabhakar. id "remark-1.1".
IdentityReport verify_reduction_chain(const GridSpec& grid, double tol,
                                      const QuadConfig& qcfg = de_quad_config(),
                                      const SeriesConfig& scfg = {});

// Series vs the three integral representations; id "thm-2.1", the
// half-line and trigonometric maxima are repeated in the notes.
IdentityReport verify_integral_reps(const GridSpec& grid, double tol,
                                    const QuadConfig& qcfg = de_quad_config(),
                                    const SeriesConfig& scfg = {});

// Recurrence residual relative to the function magnitude; id "cor-2.4".
IdentityReport verify_recurrence(const GridSpec& grid, double tol,
                                 const QuadConfig& qcfg = de_quad_config(),
                                 const SeriesConfig& scfg = {});

// Closed 2Psi2 route vs reduced numeric Mellin route at the (s,r) points;
// id "thm-2.5". Notes record the as-printed lower-pair errors and the
// Cor 2.6/2.7 double-vs-diagonal comparison.
IdentityReport verify_mellin(const GridSpec& grid,
                             const std::vector<std::pair<double, double>>& points,
                             double tol, const QuadConfig& qcfg = de_quad_config(),
                             const SeriesConfig& scfg = {});

// Fractional-derivative route vs closed route; id "thm-3.4".
IdentityReport verify_frac_theorem(const GridSpec& grid, double tol,
                                   const QuadConfig& qcfg = de_quad_config(),
                                   const SeriesConfig& scfg = {});

// Term-wise derivatives vs the corrected shift formulas; id
// "thm-3.5-corrected", notes carry the thm-3.6 maxima and the printed-form
// errors including the measured printed/true ratio at n = 1.
IdentityReport verify_derivative_theorems(const GridSpec& grid,
                                          const std::vector<int>& n_values, double tol,
                                          const QuadConfig& qcfg = de_quad_config(),
                                          const SeriesConfig& scfg = {});

// --- the full suite ---

// Runs every selected experiment and returns one report per identity
// (corrected and as-printed forms separately). Deterministic: identical
// configs produce bit-identical reports.
std::vector<IdentityReport> run_full_suite(const VerifyConfig& cfg);
std::vector<IdentityReport> run_full_suite(const std::string& config_path);

// True when every gating report passes (ids ending in "-as-printed" are
// informational and ignored).
bool all_corrected_pass(const std::vector<IdentityReport>& reports);

// Machine-readable report: a JSON array, one record per report, numbers
// serialized with 17 significant digits.
std::string report_to_json(const std::vector<IdentityReport>& reports);
void write_report_json(const std::vector<IdentityReport>& reports,
                       const std::string& path);

// Plain-text summary table.
std::string format_summary(const std::vector<IdentityReport>& reports);

}  // namespace pqml
