#pragma once

// Built-in test systems. The five "5.x" entries are the systems as originally
// stated; the "5.xr" entries are the corrected forms that reproduce the
// reference residual tables (see README, "Built-in experiments").

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fhaar/problem.hpp"

namespace fhaar {

namespace detail {

inline RightHandSide native(RhsFunction fn, std::string expr) { return {std::move(fn), std::move(expr)}; }

// Monod-type saturation term of the carbon/oxygen model.
inline double monod(double y, double z) { return y * z / ((1e-4 + y) * (1e-4 + z)); }

inline ProblemSpec exp_5_1() {
  ProblemSpec s;
  s.name = "5.1";
  s.orders = {1.58, 0.58, 1.59, 0.59};
  s.sing1 = {1.0, 1.0};
  s.sing2 = {3.0, 1.0};
  s.f1 = native([](double, double y, double z) { return z * z * z * (y * y + 1.0); }, "z^3*(y^2+1)");
  s.f2 = native([](double, double y, double z) { return -(z * z * z * z * z * (y * y + 3.0)); },
                "-(z^5*(y^2+3))");
  s.boundary = PureIvpBoundary{1.0, 0.0, 1.0, 0.0};
  return s;
}

inline ProblemSpec exp_5_2() {
  ProblemSpec s;
  s.name = "5.2";
  s.orders = {1.56, 0.56, 1.57, 0.57};
  s.sing1 = {5.0, 1.0};
  s.sing2 = {3.0, 1.0};
  s.f1 = native([](double, double y, double z) { return -(8.0 * std::exp(y - 1.0)) + 2.0 * std::exp(-((z - 1.0) / 2.0)); },
                "-(8*exp(y-1)) + 2*exp(-((z-1)/2))");
  s.f2 = native([](double, double y, double z) { return 8.0 * std::exp(-(z - 1.0)) + std::exp((y - 1.0) / 2.0); },
                "8*exp(-(z-1)) + exp((y-1)/2)");
  s.boundary = NeumannDirichletBoundary{0.0, 0.0, 1.0 - 2.0 * std::log(2.0), 1.0 + 2.0 * std::log(2.0)};
  return s;
}

inline double f53_1(double x, double y, double z) {
  const double x2 = x * x;
  return -(99.0 / 35.0 * x - 0.5 + z * (x2 - 66.0 / 35.0 * x2 * x + 1089.0 / 1225.0 * x2 * x2) - y * y * z);
}

inline double f53_2(double x, double y, double z) {
  return -(-24.0 / 35.0 * x + 64.0 / 1225.0 * std::pow(x, 5) - 2112.0 / 42875.0 * std::pow(x, 6) - y * z * z);
}

inline constexpr const char* kF53_1 = "-(99/35*x - 1/2 + z*(x^2 - 66/35*x^3 + 1089/1225*x^4) - y^2*z)";
inline constexpr const char* kF53_2 = "-(-24/35*x + 64/1225*x^5 - 2112/42875*x^6 - y*z^2)";

// y(0) = z(0) = 0, y(1) = z(1/2), z(1) = y(1/3)
inline CaseIIBoundary four_point() {
  CaseIIBoundary b;
  b.mu3 = b.mu4 = b.eta1 = b.eta2 = 1.0;
  b.nu1 = 0.5;
  b.nu2 = 1.0 / 3.0;
  return b;
}

inline ProblemSpec exp_5_3() {
  ProblemSpec s;
  s.name = "5.3";
  s.orders = {1.56, 0.58, 1.58, 0.56};
  s.sing1 = {0.5, 1.0};
  s.sing2 = {0.5, 1.0};
  s.f1 = native(f53_1, kF53_1);
  s.f2 = native(f53_2, kF53_2);
  s.boundary = four_point();
  return s;
}

inline ProblemSpec exp_5_4() {
  ProblemSpec s;
  s.name = "5.4";
  s.orders = {1.61, 0.62, 1.62, 0.63};
  s.sing1 = {2.0, 1.0};
  s.sing2 = {2.0, 1.0};
  s.f1 = native([](double, double y, double z) { return -(y * y) - 2.0 / 5.0 * y * z; }, "-y^2 - 2/5*y*z");
  s.f2 = native([](double, double y, double z) { return -(1.0 / 2.0 * y * y) - y * z; }, "-1/2*y^2 - y*z");
  s.boundary = NeumannDirichletBoundary{0.0, 0.0, 1.0, 2.0};
  return s;
}

inline ProblemSpec exp_5_5() {
  ProblemSpec s;
  s.name = "5.5";
  s.orders = {1.62, 0.62, 1.63, 0.63};
  s.sing1 = {2.0, 1.0};
  s.sing2 = {2.0, 1.0};
  s.f1 = native([](double, double y, double z) { return -1.0 + 5.0 * monod(y, z) + 0.1 * monod(y, z); },
                "-1 + 5*y*z/((1/10000+y)*(1/10000+z)) + 1/10*y*z/((1/10000+y)*(1/10000+z))");
  s.f2 = native([](double, double y, double z) { return 0.1 * monod(y, z) + 0.05 * monod(y, z); },
                "1/10*y*z/((1/10000+y)*(1/10000+z)) + 5/100*y*z/((1/10000+y)*(1/10000+z))");
  s.boundary = NeumannDirichletBoundary{0.0, 0.0, 1.0, 1.0};
  return s;
}

// Classical limit has y = 1 - 2 ln(1+x^2), z = 1 + 2 ln(1+x^2), which meets the
// stated boundary values.
inline ProblemSpec exp_5_2r() {
  ProblemSpec s = exp_5_2();
  s.name = "5.2r";
  s.f1 = native([](double, double y, double z) { return -(8.0 * std::exp(y - 1.0)) - 16.0 * std::exp(-((z - 1.0) / 2.0)); },
                "-(8*exp(y-1)) - 16*exp(-((z-1)/2))");
  s.f2 = native([](double, double y, double z) { return 8.0 * std::exp(-(z - 1.0)) + 8.0 * std::exp((y - 1.0) / 2.0); },
                "8*exp(-(z-1)) + 8*exp((y-1)/2)");
  return s;
}

// Forcing divided by x: the classical limit then has the polynomial solution
// y = x - 33/35 x^2, z = 8/35 x^2.
inline ProblemSpec exp_5_3r() {
  ProblemSpec s = exp_5_3();
  s.name = "5.3r";
  s.f1 = native([](double x, double y, double z) { return f53_1(x, y, z) / x; }, std::string("(") + kF53_1 + ")/x");
  s.f2 = native([](double x, double y, double z) { return f53_2(x, y, z) / x; }, std::string("(") + kF53_2 + ")/x");
  return s;
}

inline ProblemSpec exp_5_4r() {
  ProblemSpec s = exp_5_4();
  s.name = "5.4r";
  s.f1 = native([](double, double y, double z) { return y * y + 2.0 / 5.0 * y * z; }, "y^2 + 2/5*y*z");
  s.f2 = native([](double, double y, double z) { return 1.0 / 2.0 * y * y + y * z; }, "1/2*y^2 + y*z");
  return s;
}

}  // namespace detail

/// The five systems exactly as printed.
inline std::vector<ProblemSpec> builtin_experiments() {
  return {detail::exp_5_1(), detail::exp_5_2(), detail::exp_5_3(), detail::exp_5_4(), detail::exp_5_5()};
}

/// Sign/scale-corrected forms of 5.2, 5.3 and 5.4 behind the reference residual tables.
inline std::vector<ProblemSpec> reconstructed_experiments() {
  return {detail::exp_5_2r(), detail::exp_5_3r(), detail::exp_5_4r()};
}

inline std::optional<ProblemSpec> find_experiment(std::string_view name) {
  for (auto& s : builtin_experiments()) {
    if (s.name == name) return s;
  }
  for (auto& s : reconstructed_experiments()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

/// Name of the system whose residuals the reference tables for `name` list.
inline std::string tabulated_variant(std::string_view name) {
  if (name == "5.2" || name == "5.3" || name == "5.4") return std::string(name) + "r";
  return std::string(name);
}

struct ExperimentInfo {
  std::string name;
  std::string summary;
};

inline std::vector<ExperimentInfo> experiment_catalog() {
  return {
      {"5.1", "initial value problem, k = (1, 3), f1 = z^3(y^2+1)"},
      {"5.2", "y'(0)=z'(0)=0, y(1) = 1-2ln2, z(1) = 1+2ln2, k = (5, 3), exponential RHS"},
      {"5.3", "four-point problem y(1) = z(1/2), z(1) = y(1/3), k = (1/2, 1/2)"},
      {"5.4", "catalytic diffusion, y(1) = 1, z(1) = 2, k = (2, 2)"},
      {"5.5", "carbon substrate / oxygen, y(1) = z(1) = 1, k = (2, 2)"},
      {"5.2r", "5.2 with the exponential coefficients behind the reference tables"},
      {"5.3r", "5.3 with forcing divided by x (polynomial classical solution)"},
      {"5.4r", "5.4 with the positive-sign RHS behind the reference tables"},
  };
}

}  // namespace fhaar
