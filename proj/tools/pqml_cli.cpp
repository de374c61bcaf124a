// SPDX-License-Identifier: Apache-2.0
//
// pqml command line: evaluate the extended (p,q)-Mittag-Leffler family and
// its relatives at points or over z-sweeps, and drive the identity
// verification suite.
//
// Exit status: 0 success, 1 verify found a failing (corrected-form)
// identity, 2 argument or config errors.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqml/extbeta.hpp"
#include "pqml/fracderiv.hpp"
#include "pqml/gamma.hpp"
#include "pqml/mlcore.hpp"
#include "pqml/transforms.hpp"
#include "pqml/verifier.hpp"
#include "pqml/wright.hpp"

namespace {

enum class OutputMode { plain, csv, structured };

const char* status_name(pqml::EvalStatus s) {
  switch (s) {
    case pqml::EvalStatus::converged: return "converged";
    case pqml::EvalStatus::tolerance_not_met: return "tolerance-not-met";
    case pqml::EvalStatus::domain_error: return "domain-error";
  }
  return "unknown";
}

std::string num(double v, int precision) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

void print_result(const pqml::EvalResult& r, OutputMode mode, int precision) {
  switch (mode) {
    case OutputMode::plain:
      std::cout << num(r.value, precision) << "\n";
      if (!r.ok())
        std::cerr << "warning: status " << status_name(r.status)
                  << " (abs_err_est=" << num(r.abs_err_est, 3) << ")\n";
      break;
    case OutputMode::csv:
      std::cout << "value,abs_err_est,effort,status\n"
                << num(r.value, precision) << "," << num(r.abs_err_est, precision)
                << "," << r.effort << "," << status_name(r.status) << "\n";
      break;
    case OutputMode::structured:
      std::cout << "{\"value\": " << num(r.value, 17)
                << ", \"abs_err_est\": " << num(r.abs_err_est, 17)
                << ", \"effort\": " << r.effort << ", \"status\": \""
                << status_name(r.status) << "\"}\n";
      break;
  }
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text,
                                                   const std::string& what) {
  std::vector<std::pair<double, double>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t comma = item.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError(what, "expected 'x,y[;x,y...]', got '" + item + "'");
    try {
      out.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "expected numbers in '" + item + "'");
    }
    pos = end + 1;
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty pair list");
  return out;
}

// PQML_REL_TOL overrides the default relative tolerance of both the series
// and quadrature engines (command line flags still win).
void apply_env_tolerance(pqml::SeriesConfig* scfg, pqml::QuadConfig* qcfg) {
  if (const char* env = std::getenv("PQML_REL_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) {
      scfg->rel_tol = v;
      qcfg->rel_tol = v;
    } else {
      std::cerr << "warning: ignoring invalid PQML_REL_TOL='" << env << "'\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended (p,q)-Mittag-Leffler function toolkit"};
  app.require_subcommand(1);

  OutputMode mode = OutputMode::plain;
  int precision = 15;
  std::map<std::string, OutputMode> mode_names{{"plain", OutputMode::plain},
                                               {"csv", OutputMode::csv},
                                               {"structured", OutputMode::structured}};

  pqml::SeriesConfig scfg;
  pqml::QuadConfig qcfg = pqml::de_quad_config();
  apply_env_tolerance(&scfg, &qcfg);

  struct CommonOpts {
    CLI::Option* rel_tol = nullptr;
    CLI::Option* quad_rel_tol = nullptr;
  };
  auto add_common = [&](CLI::App* cmd) {
    CommonOpts opts;
    cmd->add_option("--output", mode, "output format")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
    cmd->add_option("--precision", precision, "significant digits printed")
        ->check(CLI::Range(1, 17));
    opts.rel_tol = cmd->add_option("--rel-tol", scfg.rel_tol, "series relative tolerance");
    opts.quad_rel_tol =
        cmd->add_option("--quad-rel-tol", qcfg.rel_tol, "quadrature relative tolerance");
    return opts;
  };

  // ---- eval ----
  pqml::MLParams P{1.0, 1.0, 1.0, 2.0, 0.0, 0.0};
  double z = 0.0;
  auto* eval = app.add_subcommand("eval", "extended (p,q)-ML function at a point");
  eval->add_option("--alpha", P.alpha)->required();
  eval->add_option("--beta", P.beta)->required();
  eval->add_option("--gamma", P.gamma)->required();
  eval->add_option("--c", P.c)->required();
  eval->add_option("--p", P.p);
  eval->add_option("--q", P.q);
  eval->add_option("--z", z)->required();
  add_common(eval);

  // ---- beta ----
  double bx = 1.0, by = 1.0, bp = 0.0, bq = 0.0;
  auto* beta = app.add_subcommand("beta", "extended beta function");
  beta->add_option("--x", bx)->required();
  beta->add_option("--y", by)->required();
  beta->add_option("--p", bp);
  beta->add_option("--q", bq);
  add_common(beta);

  // ---- wright ----
  std::string upper_text, lower_text;
  double wz = 0.0;
  auto* wright = app.add_subcommand("wright", "Wright generalized hypergeometric series");
  wright->add_option("--upper", upper_text, "upper pairs 'a,mu;a,mu;...'")->required();
  wright->add_option("--lower", lower_text, "lower pairs 'b,lambda;...'")->required();
  wright->add_option("--z", wz)->required();
  add_common(wright);

  // ---- mellin ----
  double ms = 1.0, mr = 1.0, mz = 0.0;
  std::string route = "closed";
  bool as_printed = false;
  auto* mellin = app.add_subcommand("mellin", "Mellin transform in the (p,q) variables");
  mellin->add_option("--alpha", P.alpha)->required();
  mellin->add_option("--beta", P.beta)->required();
  mellin->add_option("--gamma", P.gamma)->required();
  mellin->add_option("--c", P.c)->required();
  mellin->add_option("--s", ms)->required();
  mellin->add_option("--r", mr)->required();
  mellin->add_option("--z", mz)->required();
  mellin->add_option("--route", route, "closed | numeric | both")
      ->check(CLI::IsMember({"closed", "numeric", "both"}));
  mellin->add_flag("--as-printed", as_printed,
                   "use the (beta,gamma) lower Wright pair instead of (beta,alpha)");
  add_common(mellin);

  // ---- fracderiv ----
  std::string fn_name = "monomial";
  double fd_lambda = -0.5, fd_x = 1.0, fd_p = 0.0, fd_q = 0.0;
  std::map<std::string, double> fn_args;
  auto* frac = app.add_subcommand("fracderiv", "Riemann-Liouville fractional derivative");
  frac->add_option("--fn", fn_name, "integrand name")
      ->check(CLI::IsMember(pqml::integrand_names()));
  frac->add_option("--lambda", fd_lambda, "order (negative = fractional integral)")
      ->required();
  frac->add_option("--x", fd_x)->required();
  frac->add_option("--p", fd_p);
  frac->add_option("--q", fd_q);
  double fa_exponent = 1.0, fa_rate = 1.0, fa_alpha = 1.0, fa_beta = 1.0,
         fa_gamma = 1.0, fa_c = 2.0, fa_p = 0.0, fa_q = 0.0, fa_scale = 1.0;
  frac->add_option("--fn-exponent", fa_exponent, "monomial exponent");
  frac->add_option("--fn-rate", fa_rate, "exponential rate");
  frac->add_option("--fn-alpha", fa_alpha);
  frac->add_option("--fn-beta", fa_beta);
  frac->add_option("--fn-gamma", fa_gamma);
  frac->add_option("--fn-c", fa_c);
  frac->add_option("--fn-p", fa_p);
  frac->add_option("--fn-q", fa_q);
  frac->add_option("--fn-scale", fa_scale);
  add_common(frac);

  // ---- table ----
  double t_from = 0.0, t_to = 1.0;
  int t_steps = 11;
  auto* table = app.add_subcommand("table", "CSV z-sweep of the extended (p,q)-ML function");
  table->add_option("--alpha", P.alpha)->required();
  table->add_option("--beta", P.beta)->required();
  table->add_option("--gamma", P.gamma)->required();
  table->add_option("--c", P.c)->required();
  table->add_option("--p", P.p);
  table->add_option("--q", P.q);
  table->add_option("--z-from", t_from)->required();
  table->add_option("--z-to", t_to)->required();
  table->add_option("--steps", t_steps)->check(CLI::PositiveNumber);
  add_common(table);

  // ---- verify ----
  std::string config_path, report_path;
  std::vector<std::string> identities;
  bool extended = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--report", report_path, "machine-readable report output path");
  verify->add_option("--identity", identities, "run only the named identities");
  verify->add_flag("--extended", extended, "use the denser parameter grid");
  verify->add_flag("--quiet", quiet, "suppress the summary table");
  CommonOpts verify_opts = add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      print_result(pqml::ml_extended_pq(P, z, scfg, qcfg), mode, precision);
    } else if (*beta) {
      print_result(pqml::beta_pq(bx, by, bp, bq, qcfg), mode, precision);
    } else if (*wright) {
      pqml::WrightSpec spec;
      spec.upper = parse_pairs(upper_text, "--upper");
      spec.lower = parse_pairs(lower_text, "--lower");
      print_result(pqml::wright_psi(spec, wz, scfg), mode, precision);
    } else if (*mellin) {
      pqml::MellinPoint pt{ms, mr};
      if (route == "closed" || route == "both") {
        auto lp = as_printed ? pqml::MellinLowerPair::as_printed
                             : pqml::MellinLowerPair::derived;
        print_result(pqml::mellin_closed_form(P, ms, mr, mz, scfg, lp), mode, precision);
      }
      if (route == "numeric" || route == "both")
        print_result(pqml::mellin_numeric(P, pt, mz, qcfg), mode, precision);
    } else if (*frac) {
      std::map<std::string, double> args{
          {"exponent", fa_exponent}, {"rate", fa_rate}, {"alpha", fa_alpha},
          {"beta", fa_beta},         {"gamma", fa_gamma}, {"c", fa_c},
          {"p", fa_p},               {"q", fa_q},       {"scale", fa_scale}};
      pqml::RealFn f = pqml::make_integrand(fn_name, args);
      pqml::FracOrder order = pqml::FracOrder::of(fd_lambda);
      pqml::ExtKernelParams kp{fd_p, fd_q};
      pqml::EvalResult r;
      if (fd_lambda < 0.0)
        r = pqml::rl_ext_pq(f, order, fd_x, kp, qcfg);
      else
        r = pqml::rl_ext_pq_pos(f, order, fd_x, kp, qcfg);
      print_result(r, mode, precision);
    } else if (*table) {
      pqml::ExtendedMl ml(P, qcfg);
      std::cout << "z,value,abs_err_est,terms\n";
      for (int i = 0; i < t_steps; ++i) {
        double zi = t_steps == 1
                        ? t_from
                        : t_from + (t_to - t_from) * double(i) / double(t_steps - 1);
        pqml::EvalResult r = ml.value(zi, scfg);
        std::cout << num(zi, precision) << "," << num(r.value, precision) << ","
                  << num(r.abs_err_est, precision) << "," << r.effort << "\n";
      }
    } else if (*verify) {
      pqml::VerifyConfig cfg = config_path.empty()
                                   ? pqml::VerifyConfig::defaults()
                                   : pqml::VerifyConfig::load(config_path);
      if (extended) cfg.grid = pqml::GridSpec::extended();
      if (!identities.empty()) cfg.identities = identities;
      // Tolerance precedence: flags > config file > PQML_REL_TOL > defaults.
      if (verify_opts.quad_rel_tol->count() > 0 || config_path.empty())
        cfg.quad = qcfg;
      if (verify_opts.rel_tol->count() > 0 || config_path.empty())
        cfg.series = scfg;
      if (!report_path.empty()) cfg.report_path = report_path;
      auto reports = pqml::run_full_suite(cfg);
      pqml::write_report_json(reports, cfg.report_path);
      if (!quiet) std::cout << pqml::format_summary(reports);
      return pqml::all_corrected_pass(reports) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
