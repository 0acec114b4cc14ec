#pragma once

// Residuals of a computed solution away from the collocation grid, the
// maximum residual E, resolution sweeps and comparisons with reference
// solutions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fhaar/assembly.hpp"
#include "fhaar/problem.hpp"
#include "fhaar/solver.hpp"

namespace fhaar {

struct ResidualPoint {
  double r1 = 0, r2 = 0, r = 0;
};

struct ResidualReport {
  std::vector<double> grid;
  std::vector<double> r1;
  std::vector<double> r2;
  std::vector<double> r;
  double E = 0.0;                     // max of r over grid
  std::optional<double> E_dense;      // max over dense_grid(), when computed
};

/// x = 0.1, 0.2, ..., 0.9
inline std::vector<double> table_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 9; ++i) g.push_back(i / 10.0);
  return g;
}

/// 401 points: 0.5/400, 1/400, ..., 399/400, 399.5/400. Contains table_grid().
inline std::vector<double> dense_grid() {
  std::vector<double> g;
  g.push_back(0.5 / 400.0);
  for (int i = 1; i <= 399; ++i) g.push_back(i / 400.0);
  g.push_back(399.5 / 400.0);
  return g;
}

/// |D^{α1}y + k1/x^{γ1} D^{β1}y - f1(x, y, z)| and the same for z.
inline ResidualPoint residual_at(const AssembledState& s, const ProblemSpec& spec, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("residual_at needs 0 < x < 1, got " + std::to_string(x));
  const double y = s.y_at(x);
  const double z = s.z_at(x);
  const double w1 = spec.sing1.k / std::pow(x, spec.sing1.gamma_exp);
  const double w2 = spec.sing2.k / std::pow(x, spec.sing2.gamma_exp);
  ResidualPoint p;
  p.r1 = std::abs(s.dalpha_y_at(x) + w1 * s.dbeta_y_at(x) - detail::call_rhs(spec.f1, "f1", x, y, z));
  p.r2 = std::abs(s.dalpha_z_at(x) + w2 * s.dbeta_z_at(x) - detail::call_rhs(spec.f2, "f2", x, y, z));
  p.r = std::hypot(p.r1, p.r2);
  return p;
}

inline ResidualReport residual_table(const AssembledState& s, const ProblemSpec& spec, const std::vector<double>& points) {
  ResidualReport rep;
  rep.grid = points;
  for (double x : points) {
    const auto p = residual_at(s, spec, x);
    rep.r1.push_back(p.r1);
    rep.r2.push_back(p.r2);
    rep.r.push_back(p.r);
    rep.E = std::max(rep.E, p.r);
  }
  return rep;
}

/// Table grid values plus E over the dense grid.
inline ResidualReport residual_table(const AssembledState& s, const ProblemSpec& spec) {
  ResidualReport rep = residual_table(s, spec, table_grid());
  rep.E_dense = residual_table(s, spec, dense_grid()).E;
  return rep;
}

/// One solve at one resolution, with everything needed for reporting.
struct Solution {
  ProblemSpec spec;
  ResolutionParams params;
  SolveResult result;
  AssembledState state;
};

inline Solution solve(const ProblemSpec& spec, int J, const SolverConfig& config = {}) {
  const auto params = ResolutionParams::from_level(J);
  auto result = newton_solve(spec, params, config);
  auto state = assemble(result.coefficients, spec, params);
  return {spec, params, std::move(result), std::move(state)};
}

struct ConvergenceRow {
  int J = 0;
  double E = std::numeric_limits<double>::quiet_NaN();
  double E_dense = std::numeric_limits<double>::quiet_NaN();
  double condition_estimate = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;
  std::string error;  // non-empty when the row failed outright
};

struct ConvergenceTable {
  FractionalOrders orders;
  std::vector<ConvergenceRow> rows;  // ascending J
  // log2(E(J_i)/E(J_{i+1})) for consecutive rows; NaN where a row failed.
  std::vector<double> empirical_orders;
};

inline ConvergenceTable convergence_sweep(const ProblemSpec& spec, std::vector<int> J_list, const SolverConfig& config = {}) {
  if (J_list.empty()) throw std::invalid_argument("convergence sweep needs at least one level");
  std::sort(J_list.begin(), J_list.end());
  ConvergenceTable t;
  t.orders = spec.orders;
  for (int J : J_list) {
    ConvergenceRow row;
    row.J = J;
    try {
      const auto sol = solve(spec, J, config);
      const auto rep = residual_table(sol.state, spec);
      row.E = rep.E;
      row.E_dense = *rep.E_dense;
      row.condition_estimate = sol.result.diagnostics.condition_estimate;
      row.iterations = sol.result.diagnostics.iterations;
      row.converged = sol.result.diagnostics.converged;
      if (!row.converged) row.error = sol.result.diagnostics.message;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    t.rows.push_back(row);
  }
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[i + 1];
    const bool ok = a.converged && b.converged && a.E > 0 && b.E > 0;
    t.empirical_orders.push_back(ok ? std::log2(a.E / b.E) : std::numeric_limits<double>::quiet_NaN());
  }
  return t;
}

struct AbsoluteError {
  std::vector<double> dy;
  std::vector<double> dz;

  double max_dy() const { return dy.empty() ? 0.0 : *std::max_element(dy.begin(), dy.end()); }
  double max_dz() const { return dz.empty() ? 0.0 : *std::max_element(dz.begin(), dz.end()); }
};

using Oracle = std::function<std::pair<double, double>(double x)>;

inline AbsoluteError absolute_error_vs_oracle(const AssembledState& s, const Oracle& oracle, const std::vector<double>& points) {
  AbsoluteError e;
  for (double x : points) {
    const auto [y, z] = oracle(x);
    e.dy.push_back(std::abs(s.y_at(x) - y));
    e.dz.push_back(std::abs(s.z_at(x) - z));
  }
  return e;
}

}  // namespace fhaar
