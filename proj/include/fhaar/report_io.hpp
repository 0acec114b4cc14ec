#pragma once

// Serialization of residual tables (CSV), dense solution samples (CSV) and
// complete runs (JSON, schema in docs/run_schema.json).
//
// Numbers are printed with 9 significant digits ("%.9g") in the CSV files;
// the JSON document keeps full round-trip precision.

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fhaar/analysis.hpp"
#include "fhaar/error.hpp"
#include "fhaar/problem_config.hpp"
#include "fhaar/solver.hpp"

namespace fhaar {

inline std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/// Header `x,r1,r2,r`, one row per grid point, final row `E,,,<E>`; LF endings.
inline void write_table_csv(const ResidualReport& rep, std::ostream& out) {
  const auto n = rep.grid.size();
  if (n == 0) throw std::invalid_argument("refusing to write an empty residual table");
  if (rep.r1.size() != n || rep.r2.size() != n || rep.r.size() != n) {
    throw std::invalid_argument("residual table columns have inconsistent lengths");
  }
  std::string s = "x,r1,r2,r\n";
  for (std::size_t i = 0; i < n; ++i) {
    s += format_g9(rep.grid[i]) + "," + format_g9(rep.r1[i]) + "," + format_g9(rep.r2[i]) + "," + format_g9(rep.r[i]) + "\n";
  }
  s += "E,,," + format_g9(rep.E) + "\n";
  out << s;
}

inline std::string table_csv_string(const ResidualReport& rep) {
  std::ostringstream os;
  write_table_csv(rep, os);
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_number(const std::string& s, int line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace detail

/// Inverse of write_table_csv; strict about the layout.
inline ResidualReport parse_table_csv(std::istream& in) {
  ResidualReport rep;
  std::string line;
  int lineno = 0;
  bool saw_header = false, saw_E = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ConfigError("line " + std::to_string(lineno) + ": CRLF line ending");
    if (!saw_header) {
      if (line != "x,r1,r2,r") throw ConfigError("missing header 'x,r1,r2,r'");
      saw_header = true;
      continue;
    }
    if (saw_E) throw ConfigError("line " + std::to_string(lineno) + ": data after the E row");
    const auto cells = detail::split_commas(line);
    if (cells.size() != 4) throw ConfigError("line " + std::to_string(lineno) + ": expected 4 cells");
    if (cells[0] == "E") {
      if (!cells[1].empty() || !cells[2].empty()) throw ConfigError("line " + std::to_string(lineno) + ": malformed E row");
      rep.E = detail::parse_number(cells[3], lineno);
      saw_E = true;
      continue;
    }
    rep.grid.push_back(detail::parse_number(cells[0], lineno));
    rep.r1.push_back(detail::parse_number(cells[1], lineno));
    rep.r2.push_back(detail::parse_number(cells[2], lineno));
    rep.r.push_back(detail::parse_number(cells[3], lineno));
  }
  if (!saw_header) throw ConfigError("empty table");
  if (!saw_E) throw ConfigError("missing E row");
  if (rep.grid.empty()) throw ConfigError("table has no data rows");
  return rep;
}

inline ResidualReport parse_table_csv(const std::string& text) {
  std::istringstream is(text);
  return parse_table_csv(is);
}

/// x,y,z,r1,r2,r on the dense grid, for plotting.
inline std::string dense_csv_string(const AssembledState& s, const ProblemSpec& spec) {
  std::string out = "x,y,z,r1,r2,r\n";
  for (double x : dense_grid()) {
    const auto p = residual_at(s, spec, x);
    out += format_g9(x) + "," + format_g9(s.y_at(x)) + "," + format_g9(s.z_at(x)) + "," + format_g9(p.r1) + "," +
           format_g9(p.r2) + "," + format_g9(p.r) + "\n";
  }
  return out;
}

inline nlohmann::json run_json(const Solution& sol, const ResidualReport& rep, const SolverConfig& config) {
  using nlohmann::json;
  const auto& d = sol.result.diagnostics;
  const auto& c = sol.result.coefficients;
  const auto& init = sol.state.initial();
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  // Non-finite numbers become null rather than invalid JSON.
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  json history = json::array();
  for (double h : d.residual_history) history.push_back(num(h));
  json doc{
      {"schema_version", "1"},
      {"problem", problem_to_json(sol.spec)},
      {"orders",
       {{"alpha1", sol.spec.orders.alpha1},
        {"beta1", sol.spec.orders.beta1},
        {"alpha2", sol.spec.orders.alpha2},
        {"beta2", sol.spec.orders.beta2}}},
      {"J", sol.params.J},
      {"M", sol.params.M},
      {"solver",
       {{"tol", config.tol},
        {"max_iter", config.max_iter},
        {"fd_step_scale", config.fd_step_scale},
        {"step_halving", config.step_halving},
        {"initial_guess", config.initial_guess ? "provided" : "zeros"}}},
      {"coefficients", {{"a", vec(c.a)}, {"b", vec(c.b)}}},
      {"initial_data", {{"y0", num(init.y0)}, {"yp0", num(init.yp0)}, {"z0", num(init.z0)}, {"zp0", num(init.zp0)}}},
      {"diagnostics",
       {{"iterations", d.iterations},
        {"final_residual_norm", num(d.final_residual_norm)},
        {"condition_estimate", num(d.condition_estimate)},
        {"converged", d.converged},
        {"message", d.message},
        {"residual_history", history}}},
      {"table", {{"x", rep.grid}, {"r1", rep.r1}, {"r2", rep.r2}, {"r", rep.r}}},
      {"E", num(rep.E)},
      {"E_dense", rep.E_dense ? num(*rep.E_dense) : json(nullptr)},
  };
  return doc;
}

inline std::string run_json_string(const Solution& sol, const ResidualReport& rep, const SolverConfig& config) {
  return run_json(sol, rep, config).dump(2) + "\n";
}

/// Coefficient vectors back out of a run document.
inline CoefficientVector coefficients_from_run_json(const nlohmann::json& doc) {
  try {
    const auto a = doc.at("coefficients").at("a").get<std::vector<double>>();
    const auto b = doc.at("coefficients").at("b").get<std::vector<double>>();
    CoefficientVector cv;
    cv.a = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size()));
    cv.b = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    return cv;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run document lacks coefficients: ") + e.what());
  }
}

}  // namespace fhaar
