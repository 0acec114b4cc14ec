#pragma once

// Command-line front end. run_cli() is the whole program; tools/fhaar.cpp only
// forwards argv. Exit status: 0 all runs converged, 2 some run did not
// converge, 1 usage / config / validation error.

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fhaar/analysis.hpp"
#include "fhaar/experiments.hpp"
#include "fhaar/problem_config.hpp"
#include "fhaar/report_io.hpp"
#include "fhaar/solver.hpp"

namespace fhaar {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoConvergence = 2;

namespace detail {

/// "out/table.csv" -> "out/table_J4.csv"
inline std::string with_level_suffix(const std::string& path, int J) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const std::string tag = "_J" + std::to_string(J);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

/// "zeros" or "random:<seed>[:<scale>]"
inline std::optional<CoefficientVector> parse_guess(const std::string& text, const ResolutionParams& p) {
  if (text == "zeros") return std::nullopt;
  if (text.rfind("random:", 0) != 0) throw CLI::ValidationError("--guess", "expected 'zeros' or 'random:<seed>[:<scale>]'");
  const std::string rest = text.substr(7);
  const auto colon = rest.find(':');
  unsigned long long seed = 0;
  double scale = 0.1;
  try {
    std::size_t used = 0;
    seed = std::stoull(rest.substr(0, colon), &used);
    if (used != rest.substr(0, colon).size()) throw std::invalid_argument("seed");
    if (colon != std::string::npos) {
      scale = std::stod(rest.substr(colon + 1), &used);
      if (used != rest.size() - colon - 1 || !(scale >= 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale");
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--guess", "malformed random guess '" + text + "'");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  CoefficientVector cv = CoefficientVector::zeros(p);
  for (Eigen::Index i = 0; i < cv.a.size(); ++i) cv.a[i] = u(rng);
  for (Eigen::Index i = 0; i < cv.b.size(); ++i) cv.b[i] = u(rng);
  return cv;
}

inline std::string fmt_orders(const FractionalOrders& o) {
  return "(" + format_g9(o.alpha1) + ", " + format_g9(o.beta1) + ", " + format_g9(o.alpha2) + ", " + format_g9(o.beta2) + ")";
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace detail

struct RunRequest {
  std::string experiment;
  std::string config_path;
  std::vector<int> levels{3};
  bool sweep = false;
  std::optional<double> alpha1, beta1, alpha2, beta2;
  bool classical = false;
  std::optional<double> k1, gamma1, k2, gamma2;
  std::optional<std::string> f1, f2;
  std::optional<std::string> mode;
  std::map<std::string, double> boundary_overrides;
  double tol = SolverConfig{}.tol;
  int max_iter = SolverConfig{}.max_iter;
  double fd_step = SolverConfig{}.fd_step_scale;
  bool damping = false;
  std::string guess = "zeros";
  std::string table_path, dense_path, json_path;
  bool quiet = false;
};

/// Applies overrides from the request to the base problem. Throws
/// CLI::ValidationError naming the offending flag.
inline ProblemSpec build_problem(const RunRequest& req) {
  ProblemSpec spec;
  if (!req.experiment.empty()) {
    auto found = find_experiment(req.experiment);
    if (!found) throw CLI::ValidationError("--experiment", "unknown experiment '" + req.experiment + "' (see --list)");
    spec = *found;
  } else {
    spec = load_problem_config(req.config_path);
  }
  if (req.classical) spec.orders = FractionalOrders::classical();
  if (req.alpha1) spec.orders.alpha1 = *req.alpha1;
  if (req.beta1) spec.orders.beta1 = *req.beta1;
  if (req.alpha2) spec.orders.alpha2 = *req.alpha2;
  if (req.beta2) spec.orders.beta2 = *req.beta2;
  if (req.k1) spec.sing1.k = *req.k1;
  if (req.gamma1) spec.sing1.gamma_exp = *req.gamma1;
  if (req.k2) spec.sing2.k = *req.k2;
  if (req.gamma2) spec.sing2.gamma_exp = *req.gamma2;
  try {
    if (req.f1) spec.f1 = RightHandSide::from_expression(*req.f1);
  } catch (const ParseError& e) {
    throw CLI::ValidationError("--f1", e.what());
  }
  try {
    if (req.f2) spec.f2 = RightHandSide::from_expression(*req.f2);
  } catch (const ParseError& e) {
    throw CLI::ValidationError("--f2", e.what());
  }
  if (req.mode) {
    auto bc = boundary_for_mode(*req.mode);
    if (!bc) throw CLI::ValidationError("--mode", "unknown boundary mode '" + *req.mode + "'");
    if (mode_name(*bc) != mode_name(spec.boundary)) spec.boundary = *bc;
  }
  for (const auto& [name, value] : req.boundary_overrides) {
    if (!set_boundary_field(spec.boundary, name, value)) {
      throw CLI::ValidationError("--" + name, "not a parameter of boundary mode " + std::string(mode_name(spec.boundary)));
    }
  }
  return spec;
}

inline void print_summary(std::ostream& out, const Solution& sol, const ResidualReport& rep) {
  const auto& d = sol.result.diagnostics;
  out << "problem " << sol.spec.name << "  orders " << detail::fmt_orders(sol.spec.orders) << "  J=" << sol.params.J
      << " (2M=" << sol.params.basis_size << ")\n";
  out << "newton: " << d.message << ", iterations " << d.iterations << ", |phi|_inf " << format_g9(d.final_residual_norm)
      << ", cond1 " << format_g9(d.condition_estimate) << "\n";
  out << detail::pad("x", 6) << detail::pad("r1", 17) << detail::pad("r2", 17) << "r\n";
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    out << detail::pad(format_g9(rep.grid[i]), 6) << detail::pad(format_g9(rep.r1[i]), 17)
        << detail::pad(format_g9(rep.r2[i]), 17) << format_g9(rep.r[i]) << "\n";
  }
  out << "E = " << format_g9(rep.E) << "   E_dense = " << format_g9(rep.E_dense.value_or(rep.E)) << "\n";
}

inline int execute(const RunRequest& req, std::ostream& out, std::ostream& err) {
  ProblemSpec spec = build_problem(req);
  {
    auto rep = validate(spec);
    if (!rep.ok()) {
      err << "error: " << ValidationError(rep.errors).what() << "\n";
      return kExitUsage;
    }
  }

  bool all_converged = true;
  struct SweepRow {
    int J;
    double E, E_dense, cond;
    int iters;
    std::string status;
  };
  std::vector<SweepRow> rows;

  for (int J : req.levels) {
    const auto params = ResolutionParams::from_level(J);
    SolverConfig cfg;
    cfg.tol = req.tol;
    cfg.max_iter = req.max_iter;
    cfg.fd_step_scale = req.fd_step;
    cfg.step_halving = req.damping;
    cfg.initial_guess = detail::parse_guess(req.guess, params);

    std::optional<Solution> sol;
    try {
      sol = solve(spec, J, cfg);
    } catch (const SingularMatrixError& e) {
      err << "error: J=" << J << ": singular Jacobian: " << e.what() << "\n";
      all_converged = false;
      rows.push_back({J, NAN, NAN, NAN, 0, "singular"});
      continue;
    }
    const auto& d = sol->result.diagnostics;
    if (!d.converged) {
      all_converged = false;
      err << "warning: J=" << J << ": " << d.message << " (|phi|_inf " << format_g9(d.final_residual_norm) << ")\n";
    }
    ResidualReport rep;
    try {
      rep = residual_table(sol->state, spec);
    } catch (const EvalError& e) {
      err << "error: J=" << J << ": residual evaluation failed: " << e.what() << "\n";
      all_converged = false;
      rows.push_back({J, NAN, NAN, d.condition_estimate, d.iterations, "eval-error"});
      continue;
    }
    if (!req.quiet && !req.sweep) print_summary(out, *sol, rep);
    rows.push_back({J, rep.E, *rep.E_dense, d.condition_estimate, d.iterations, d.converged ? "ok" : "no-conv"});

    auto path_for = [&](const std::string& p) { return req.sweep ? detail::with_level_suffix(p, J) : p; };
    if (!req.table_path.empty()) detail::write_file(path_for(req.table_path), table_csv_string(rep));
    if (!req.dense_path.empty()) detail::write_file(path_for(req.dense_path), dense_csv_string(sol->state, spec));
    if (!req.json_path.empty()) detail::write_file(path_for(req.json_path), run_json_string(*sol, rep, cfg));
  }

  if (req.sweep && !req.quiet) {
    out << "problem " << spec.name << "  orders " << detail::fmt_orders(spec.orders) << "\n";
    out << detail::pad("J", 4) << detail::pad("E", 17) << detail::pad("E_dense", 17) << detail::pad("cond1", 17)
        << detail::pad("iter", 6) << "status\n";
    for (const auto& r : rows) {
      out << detail::pad(std::to_string(r.J), 4) << detail::pad(format_g9(r.E), 17) << detail::pad(format_g9(r.E_dense), 17)
          << detail::pad(format_g9(r.cond), 17) << detail::pad(std::to_string(r.iters), 6) << r.status << "\n";
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      out << "log2(E(" << rows[i].J << ")/E(" << rows[i + 1].J << ")) = " << format_g9(std::log2(rows[i].E / rows[i + 1].E))
          << "\n";
    }
  }
  return all_converged ? kExitOk : kExitNoConvergence;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Haar wavelet collocation solver for coupled fractional Lane-Emden systems", "fhaar"};
  RunRequest req;
  bool list = false;
  int J = 3;
  std::vector<int> sweep;

  auto* exp_opt = app.add_option("--experiment", req.experiment, "built-in system (5.1 .. 5.5, 5.2r, 5.3r, 5.4r)");
  auto* cfg_opt = app.add_option("--config", req.config_path, "JSON problem description");
  exp_opt->excludes(cfg_opt);
  app.add_flag("--list", list, "list built-in systems and exit");
  auto* j_opt = app.add_option("--J", J, "resolution level (2M = 2^(J+1) unknowns per equation)");
  auto* sweep_opt = app.add_option("--sweep-J", sweep, "comma-separated resolution levels")->delimiter(',');
  j_opt->excludes(sweep_opt);

  auto* a1 = app.add_option("--alpha1", req.alpha1, "order of the leading derivative of y");
  auto* b1 = app.add_option("--beta1", req.beta1, "order of the singular-term derivative of y");
  auto* a2 = app.add_option("--alpha2", req.alpha2, "order of the leading derivative of z");
  auto* b2 = app.add_option("--beta2", req.beta2, "order of the singular-term derivative of z");
  auto* cl = app.add_flag("--classical", req.classical, "alpha = 2, beta = 1 for both equations");
  for (auto* o : {a1, b1, a2, b2}) cl->excludes(o);
  app.add_option("--k1", req.k1, "singular coefficient of the y equation");
  app.add_option("--gamma1", req.gamma1, "singular exponent of the y equation");
  app.add_option("--k2", req.k2, "singular coefficient of the z equation");
  app.add_option("--gamma2", req.gamma2, "singular exponent of the z equation");
  app.add_option("--f1", req.f1, "right-hand side of the y equation, in x, y, z");
  app.add_option("--f2", req.f2, "right-hand side of the z equation, in x, y, z");
  app.add_option("--mode", req.mode, "boundary mode: CaseI, CaseII, NeumannDirichlet, PureIVP");

  // One flag per boundary parameter name across all modes.
  std::vector<std::string> bnames;
  for (const auto& bc : {BoundarySpec{CaseIBoundary{}}, BoundarySpec{CaseIIBoundary{}},
                         BoundarySpec{NeumannDirichletBoundary{}}, BoundarySpec{PureIvpBoundary{}}}) {
    for (const auto& [name, v] : boundary_fields(bc)) {
      if (std::find(bnames.begin(), bnames.end(), name) == bnames.end()) bnames.push_back(name);
    }
  }
  std::map<std::string, double> bvalues;
  for (const auto& name : bnames) {
    app.add_option("--" + name, bvalues[name], "boundary parameter " + name)->group("Boundary parameters");
  }

  app.add_option("--tol", req.tol, "Newton tolerance on max |phi|")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", req.max_iter, "Newton iteration limit")->check(CLI::Range(1, 100000));
  app.add_option("--fd-step", req.fd_step, "finite-difference step scale")->check(CLI::PositiveNumber);
  app.add_flag("--damping", req.damping, "halve Newton steps that increase max |phi|");
  app.add_option("--guess", req.guess, "initial coefficients: zeros | random:<seed>[:<scale>]");
  app.add_option("--table", req.table_path, "write the residual table (CSV)");
  app.add_option("--dense", req.dense_path, "write dense x,y,z,r1,r2,r samples (CSV)");
  app.add_option("--json", req.json_path, "write the full run (JSON)");
  app.add_flag("--quiet,-q", req.quiet, "no summary on stdout");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (list) {
      for (const auto& e : experiment_catalog()) out << detail::pad(e.name, 6) << e.summary << "\n";
      return kExitOk;
    }
    if (req.experiment.empty() && req.config_path.empty()) {
      throw CLI::RequiredError("one of --experiment or --config");
    }
    if (*sweep_opt) {
      if (sweep.empty()) throw CLI::ValidationError("--sweep-J", "needs at least one level");
      std::sort(sweep.begin(), sweep.end());
      sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
      req.levels = sweep;
      req.sweep = true;
    } else {
      req.levels = {J};
    }
    for (int lv : req.levels) {
      if (lv < 0 || lv > 10) throw CLI::ValidationError(req.sweep ? "--sweep-J" : "--J", "levels must lie in 0..10");
    }
    for (const auto& name : bnames) {
      if (app.count("--" + name)) req.boundary_overrides[name] = bvalues[name];
    }
    // Reject a bad guess spec before any solve.
    detail::parse_guess(req.guess, ResolutionParams::from_level(0));
    return execute(req, out, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace fhaar
