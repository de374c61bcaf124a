// SPDX-License-Identifier: Apache-2.0
#include "pqml/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace pqml {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// tanh-sinh
//
// x = m + r*tanh(u), u = (pi/2) sinh(t), nodes at t = k*h. Per node we keep
//   lam = 1/(1 + e^(2u))          (offset of the node from the near endpoint,
//                                  as a fraction of b-a; exact at tiny scales)
//   w   = pi * cosh(t) * lam * (1 - lam)   (weight sans the h*(b-a) factor)
// Levels halve h and add the odd-k nodes, so previous evaluations are reused.
// ---------------------------------------------------------------------------

constexpr double kTsTmax = 6.0;  // |u| > 300 beyond this; lam underflows first
constexpr int kTsMaxLevel = 12;

struct TsNode {
  double lam;
  double w;
};

// Nodes for t > 0 at a given level: level 0 holds t = h0, 2*h0, ...;
// level L >= 1 holds the odd multiples of h = h0 / 2^L.
const std::vector<std::vector<TsNode>>& ts_tables() {
  static const std::vector<std::vector<TsNode>> tables = [] {
    std::vector<std::vector<TsNode>> tabs(kTsMaxLevel + 1);
    const double h0 = 1.0;
    for (int level = 0; level <= kTsMaxLevel; ++level) {
      double h = h0 / double(1 << level);
      int kstep = level == 0 ? 1 : 2;
      for (int k = 1; k * h <= kTsTmax; k += kstep) {
        double t = k * h;
        double u = 0.5 * kPi * std::sinh(t);
        double e2u = std::exp(2.0 * u);  // overflows to inf for u > ~355
        double lam = std::isinf(e2u) ? 0.0 : 1.0 / (1.0 + e2u);
        double w = kPi * std::cosh(t) * lam * (1.0 - lam);
        tabs[level].push_back({lam, w});
      }
    }
    return tabs;
  }();
  return tables;
}

// g(x, da, db) with da = x - a and db = b - x held exactly (da + db == b-a
// in exact arithmetic; one of them is always the tiny one near an endpoint).
using TsIntegrand = std::function<double(double, double, double)>;

// endpoint_exact: the integrand consumes the exact offsets (da, db), so a
// node whose x-coordinate rounds onto an endpoint is still evaluable. Raw
// f(x) integrands must skip such nodes instead.
EvalResult tanh_sinh(const TsIntegrand& g, double a, double b, bool endpoint_exact,
                     const QuadConfig& cfg) {
  const double len = b - a;
  const auto& tables = ts_tables();
  const int max_level = std::min(cfg.max_refinements, kTsMaxLevel);

  EvalResult res;
  bool bad_value = false;

  auto eval_node = [&](double lam, double w) -> double {
    if (lam <= 0.0) return 0.0;  // offset underflowed: node is truly at the endpoint
    double da_l = len * lam, db_l = len - da_l;
    double x_l = a + da_l;
    double da_r = len - len * lam, db_r = len * lam;
    double x_r = b - db_r;
    double sum = 0.0;
    if (endpoint_exact || (x_l > a && x_l < b)) {
      double v = g(x_l, da_l, db_l);
      ++res.effort;
      if (std::isfinite(v))
        sum += w * v;
      else if (lam > 1e-10)
        bad_value = true;
    }
    if (endpoint_exact || (x_r > a && x_r < b)) {
      double v = g(x_r, da_r, db_r);
      ++res.effort;
      if (std::isfinite(v))
        sum += w * v;
      else if (lam > 1e-10)
        bad_value = true;
    }
    return sum;
  };

  // Level 0: center node plus the coarse lattice.
  double mid = g(a + 0.5 * len, 0.5 * len, 0.5 * len);
  ++res.effort;
  if (!std::isfinite(mid)) {
    bad_value = true;
    mid = 0.0;
  }
  double s0 = kPi * 0.25 * mid;  // w(t=0) = pi * 1 * 1/4
  for (const TsNode& nd : tables[0]) s0 += eval_node(nd.lam, nd.w);

  double h = 1.0;
  double integral = h * len * s0;
  double prev = integral;
  double diff = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double sl = 0.0;
    double scale = std::fabs(prev) / (len * h);  // running magnitude in node units
    int small_run = 0;
    for (const TsNode& nd : tables[level]) {
      double contrib = eval_node(nd.lam, nd.w);
      sl += contrib;
      // The node sweep walks outward; once contributions are far below the
      // running total they stay there (the weights decay double
      // exponentially), so stop the sweep.
      if (std::fabs(contrib) < kEps * 1e-2 * scale + 1e-305) {
        if (++small_run >= 4) break;
      } else {
        small_run = 0;
      }
    }
    integral = 0.5 * prev + h * len * sl;
    diff = std::fabs(integral - prev);
    prev = integral;
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(integral));
    if (level >= 2 && diff <= tol && !bad_value) {
      res.value = integral;
      res.abs_err_est = std::max(diff, 4.0 * kEps * std::fabs(integral));
      res.status = res.abs_err_est <= tol ? EvalStatus::converged
                                          : EvalStatus::tolerance_not_met;
      return res;
    }
  }

  res.value = integral;
  res.abs_err_est = std::max(diff, 4.0 * kEps * std::fabs(integral));
  res.status = bad_value ? EvalStatus::domain_error : EvalStatus::tolerance_not_met;
  if (!std::isfinite(integral)) res.status = EvalStatus::domain_error;
  return res;
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15
// ---------------------------------------------------------------------------

// Abscissae/weights of the 15-point Kronrod rule and the embedded 7-point
// Gauss rule (positive half; the even Kronrod indices are the Gauss points).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkPanel {
  double a, b;
  double integral;
  double err;
  int depth;
  bool operator<(const GkPanel& o) const { return err < o.err; }
};

GkPanel gk15(const Integrand& f, double a, double b, int depth, std::int64_t* effort) {
  double m = 0.5 * (a + b);
  double r = 0.5 * (b - a);
  double fk[15];
  for (int i = 0; i < 7; ++i) {
    fk[i] = f(m - r * kXgk[i]);
    fk[14 - i] = f(m + r * kXgk[i]);
  }
  fk[7] = f(m);
  *effort += 15;
  double kron = 0.0;
  for (int i = 0; i < 7; ++i) kron += kWgk[i] * (fk[i] + fk[14 - i]);
  kron += kWgk[7] * fk[7];
  double gauss = kWg[3] * fk[7];
  for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
  return {a, b, r * kron, std::fabs(r * (kron - gauss)), depth};
}

EvalResult gk_adaptive(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  EvalResult res;
  std::priority_queue<GkPanel> heap;
  heap.push(gk15(f, a, b, 0, &res.effort));
  double total = heap.top().integral;
  double toterr = heap.top().err;
  const int max_panels = std::max(64, 128 * cfg.max_refinements);
  int panels = 1;

  while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (heap.empty() || panels >= max_panels) break;
    GkPanel worst = heap.top();
    double width = worst.b - worst.a;
    double width_floor =
        64.0 * kEps * std::max({std::fabs(worst.a), std::fabs(worst.b), 1.0});
    if (worst.depth >= cfg.max_refinements || width <= width_floor) {
      // Cannot usefully split the worst panel; nothing else will shrink the
      // global error either.
      break;
    }
    heap.pop();
    total -= worst.integral;
    toterr -= worst.err;
    double m = 0.5 * (worst.a + worst.b);
    GkPanel left = gk15(f, worst.a, m, worst.depth + 1, &res.effort);
    GkPanel right = gk15(f, m, worst.b, worst.depth + 1, &res.effort);
    total += left.integral + right.integral;
    toterr += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  res.value = total;
  res.abs_err_est = toterr;
  if (!std::isfinite(res.value)) {
    res.status = EvalStatus::domain_error;
  } else {
    res.status =
        res.abs_err_est <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value))
            ? EvalStatus::converged
            : EvalStatus::tolerance_not_met;
  }
  return res;
}

}  // namespace

EvalResult quad_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  if (!(a < b)) throw std::invalid_argument("quad_finite: requires a < b");
  if (cfg.scheme == QuadScheme::adaptive) return gk_adaptive(f, a, b, cfg);
  return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b,
                   /*endpoint_exact=*/false, cfg);
}

EvalResult quad_unit(const UnitIntegrand& f, const QuadConfig& cfg) {
  cfg.validate();
  if (cfg.scheme == QuadScheme::adaptive)
    return gk_adaptive([&f](double t) { return f(t, 1.0 - t); }, 0.0, 1.0, cfg);
  return tanh_sinh([&f](double, double da, double db) { return f(da, db); }, 0.0,
                   1.0, /*endpoint_exact=*/true, cfg);
}

EvalResult quad_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  // u = t/(1-t), du = dt/(1-t)^2.
  return quad_unit(
      [&f](double t, double tc) {
        double u = t / tc;
        return f(u) / (tc * tc);
      },
      cfg);
}

}  // namespace pqml
