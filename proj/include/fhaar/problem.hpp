#pragma once

// Declarative description of a coupled fractional Lane-Emden system
//
//   D^{α1} y + k1/x^{γ1} D^{β1} y = f1(x, y, z)
//   D^{α2} z + k2/x^{γ2} D^{β2} z = f2(x, y, z)      0 < x < 1
//
// together with one of four boundary modes, and its validation.

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fhaar/error.hpp"
#include "fhaar/expr.hpp"

namespace fhaar {

struct FractionalOrders {
  double alpha1 = 2.0;
  double beta1 = 1.0;
  double alpha2 = 2.0;
  double beta2 = 1.0;

  static FractionalOrders classical() { return {2.0, 1.0, 2.0, 1.0}; }

  friend bool operator==(const FractionalOrders&, const FractionalOrders&) = default;
};

/// The k/x^γ factor in front of the lower-order derivative.
struct SingularTerm {
  double k = 0.0;
  double gamma_exp = 1.0;

  friend bool operator==(const SingularTerm&, const SingularTerm&) = default;
};

// Boundary modes. Each carries a field table (name, member) used by the
// config reader, the CLI and the JSON echo so that names live in one place.

/// a y(0) + b y'(0) = μ1,  y(1) = μ3 η1 z(ν1)
/// c z(0) + d z'(0) = μ2,  z(1) = μ4 η2 y(ν2)
struct CaseIBoundary {
  double a = 0, b = 1, c = 0, d = 1;
  double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
  double eta1 = 0, eta2 = 0, nu1 = 0, nu2 = 0;

  static constexpr std::string_view mode_name = "CaseI";
  static constexpr std::array<std::pair<std::string_view, double CaseIBoundary::*>, 12> fields{{
      {"a", &CaseIBoundary::a},       {"b", &CaseIBoundary::b},       {"c", &CaseIBoundary::c},
      {"d", &CaseIBoundary::d},       {"mu1", &CaseIBoundary::mu1},   {"mu2", &CaseIBoundary::mu2},
      {"mu3", &CaseIBoundary::mu3},   {"mu4", &CaseIBoundary::mu4},   {"eta1", &CaseIBoundary::eta1},
      {"eta2", &CaseIBoundary::eta2}, {"nu1", &CaseIBoundary::nu1},   {"nu2", &CaseIBoundary::nu2},
  }};

  /// (1-a/b)(1-c/d) - μ3μ4η1η2(1-aν2/b)(1-cν1/d)
  double denominator() const {
    return (1.0 - a / b) * (1.0 - c / d) -
           mu3 * mu4 * eta1 * eta2 * (1.0 - a * nu2 / b) * (1.0 - c * nu1 / d);
  }

  friend bool operator==(const CaseIBoundary&, const CaseIBoundary&) = default;
};

/// Same conditions as Case I, divided through by a and c. ratio_ba = 0 is the
/// pure Dirichlet left end y(0) = μ1/a.
struct CaseIIBoundary {
  double ratio_ba = 0, ratio_dc = 0, mu1_over_a = 0, mu2_over_c = 0;
  double mu3 = 0, mu4 = 0, eta1 = 0, eta2 = 0, nu1 = 0, nu2 = 0;

  static constexpr std::string_view mode_name = "CaseII";
  static constexpr std::array<std::pair<std::string_view, double CaseIIBoundary::*>, 10> fields{{
      {"ratio_ba", &CaseIIBoundary::ratio_ba},
      {"ratio_dc", &CaseIIBoundary::ratio_dc},
      {"mu1_over_a", &CaseIIBoundary::mu1_over_a},
      {"mu2_over_c", &CaseIIBoundary::mu2_over_c},
      {"mu3", &CaseIIBoundary::mu3},
      {"mu4", &CaseIIBoundary::mu4},
      {"eta1", &CaseIIBoundary::eta1},
      {"eta2", &CaseIIBoundary::eta2},
      {"nu1", &CaseIIBoundary::nu1},
      {"nu2", &CaseIIBoundary::nu2},
  }};

  /// (1-b/a)(1-d/c) - μ3μ4η1η2(ν1-d/c)(ν2-b/a)
  double denominator() const {
    return (1.0 - ratio_ba) * (1.0 - ratio_dc) -
           mu3 * mu4 * eta1 * eta2 * (nu1 - ratio_dc) * (nu2 - ratio_ba);
  }

  friend bool operator==(const CaseIIBoundary&, const CaseIIBoundary&) = default;
};

/// y'(0) = yp0, y(1) = y1, z'(0) = zp0, z(1) = z1.
struct NeumannDirichletBoundary {
  double yp0 = 0, zp0 = 0, y1 = 0, z1 = 0;

  static constexpr std::string_view mode_name = "NeumannDirichlet";
  static constexpr std::array<std::pair<std::string_view, double NeumannDirichletBoundary::*>, 4> fields{{
      {"yp0", &NeumannDirichletBoundary::yp0},
      {"zp0", &NeumannDirichletBoundary::zp0},
      {"y1", &NeumannDirichletBoundary::y1},
      {"z1", &NeumannDirichletBoundary::z1},
  }};

  friend bool operator==(const NeumannDirichletBoundary&, const NeumannDirichletBoundary&) = default;
};

struct PureIvpBoundary {
  double y0 = 0, yp0 = 0, z0 = 0, zp0 = 0;

  static constexpr std::string_view mode_name = "PureIVP";
  static constexpr std::array<std::pair<std::string_view, double PureIvpBoundary::*>, 4> fields{{
      {"y0", &PureIvpBoundary::y0},
      {"yp0", &PureIvpBoundary::yp0},
      {"z0", &PureIvpBoundary::z0},
      {"zp0", &PureIvpBoundary::zp0},
  }};

  friend bool operator==(const PureIvpBoundary&, const PureIvpBoundary&) = default;
};

using BoundarySpec = std::variant<CaseIBoundary, CaseIIBoundary, NeumannDirichletBoundary, PureIvpBoundary>;

inline std::string_view mode_name(const BoundarySpec& b) {
  return std::visit([](const auto& v) { return std::decay_t<decltype(v)>::mode_name; }, b);
}

/// Default-constructed boundary of the named mode, or nullopt.
inline std::optional<BoundarySpec> boundary_for_mode(std::string_view name) {
  if (name == CaseIBoundary::mode_name) return CaseIBoundary{};
  if (name == CaseIIBoundary::mode_name) return CaseIIBoundary{};
  if (name == NeumannDirichletBoundary::mode_name) return NeumannDirichletBoundary{};
  if (name == PureIvpBoundary::mode_name) return PureIvpBoundary{};
  return std::nullopt;
}

/// Sets a named parameter of whatever mode is active. False if the mode has no such field.
inline bool set_boundary_field(BoundarySpec& b, std::string_view field, double value) {
  return std::visit(
      [&](auto& v) {
        for (const auto& [name, member] : std::decay_t<decltype(v)>::fields) {
          if (name == field) {
            v.*member = value;
            return true;
          }
        }
        return false;
      },
      b);
}

inline std::vector<std::pair<std::string, double>> boundary_fields(const BoundarySpec& b) {
  return std::visit(
      [](const auto& v) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& [name, member] : std::decay_t<decltype(v)>::fields) {
          out.emplace_back(std::string(name), v.*member);
        }
        return out;
      },
      b);
}

using RhsFunction = std::function<double(double x, double y, double z)>;

/// A right-hand side: the callable that is evaluated, plus the expression text
/// it came from (empty for purely native functions).
struct RightHandSide {
  RhsFunction fn;
  std::string expression;

  static RightHandSide from_expression(std::string_view src) {
    Expr e = Expr::parse(src);
    return {[e](double x, double y, double z) { return e.eval(x, y, z); }, std::string(src)};
  }

  double operator()(double x, double y, double z) const { return fn(x, y, z); }
  explicit operator bool() const { return static_cast<bool>(fn); }
};

struct ProblemSpec {
  std::string name;
  FractionalOrders orders;
  SingularTerm sing1;
  SingularTerm sing2;
  RightHandSide f1;
  RightHandSide f2;
  BoundarySpec boundary = PureIvpBoundary{};
};

struct ValidationReport {
  std::vector<std::string> errors;
  // Δ_I or Δ_II for the nonlocal modes.
  std::optional<double> denominator;

  bool ok() const { return errors.empty(); }
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

inline void check_orders(const FractionalOrders& o, std::vector<std::string>& err) {
  auto range = [&](const char* name, double v, double lo, double hi) {
    if (!(v > lo && v <= hi)) {
      err.push_back(std::string(name) + " = " + fmt(v) + " outside (" + fmt(lo) + ", " + fmt(hi) + "]");
    }
  };
  range("alpha1", o.alpha1, 1.0, 2.0);
  range("beta1", o.beta1, 0.0, 1.0);
  range("alpha2", o.alpha2, 1.0, 2.0);
  range("beta2", o.beta2, 0.0, 1.0);
  if (!(o.alpha1 > o.beta1)) err.push_back("alpha1 must exceed beta1");
  if (!(o.alpha2 > o.beta2)) err.push_back("alpha2 must exceed beta2");
}

inline void check_singular(const char* which, const SingularTerm& s, std::vector<std::string>& err) {
  if (!(s.k >= 0.0) || !std::isfinite(s.k)) {
    err.push_back(std::string(which) + ".k = " + fmt(s.k) + " must be >= 0");
  }
  if (!(s.gamma_exp > 0.0) || !std::isfinite(s.gamma_exp)) {
    err.push_back(std::string(which) + ".gamma = " + fmt(s.gamma_exp) + " must be > 0");
  }
}

inline void check_denominator(double delta, double scale, const char* label, std::vector<std::string>& err) {
  if (!std::isfinite(delta) || std::abs(delta) <= 1e-12 * std::max(scale, 1.0)) {
    err.push_back(std::string(label) + " denominator is zero (" + fmt(delta) + ")");
  }
}

}  // namespace detail

inline ValidationReport validate(const ProblemSpec& spec) {
  ValidationReport rep;
  auto& err = rep.errors;
  detail::check_orders(spec.orders, err);
  detail::check_singular("sing1", spec.sing1, err);
  detail::check_singular("sing2", spec.sing2, err);
  if (!spec.f1) err.push_back("f1 is missing");
  if (!spec.f2) err.push_back("f2 is missing");

  std::visit(
      [&](const auto& bc) {
        using T = std::decay_t<decltype(bc)>;
        for (const auto& [name, member] : T::fields) {
          if (!std::isfinite(bc.*member)) err.push_back("boundary." + std::string(name) + " is not finite");
        }
        if constexpr (std::is_same_v<T, CaseIBoundary> || std::is_same_v<T, CaseIIBoundary>) {
          for (const auto& [name, member] : T::fields) {
            if (bc.*member < 0.0) {
              err.push_back("boundary." + std::string(name) + " = " + detail::fmt(bc.*member) +
                            " must be non-negative");
            }
          }
          if (!(bc.nu1 >= 0.0 && bc.nu1 <= 1.0)) err.push_back("boundary.nu1 must lie in [0, 1]");
          if (!(bc.nu2 >= 0.0 && bc.nu2 <= 1.0)) err.push_back("boundary.nu2 must lie in [0, 1]");
        }
        if constexpr (std::is_same_v<T, CaseIBoundary>) {
          if (bc.b == 0.0) err.push_back("boundary.b must be non-zero in CaseI (use CaseII for b = 0)");
          if (bc.d == 0.0) err.push_back("boundary.d must be non-zero in CaseI (use CaseII for d = 0)");
          if (bc.b != 0.0 && bc.d != 0.0) {
            const double t1 = (1.0 - bc.a / bc.b) * (1.0 - bc.c / bc.d);
            const double t2 = bc.mu3 * bc.mu4 * bc.eta1 * bc.eta2 * (1.0 - bc.a * bc.nu2 / bc.b) *
                              (1.0 - bc.c * bc.nu1 / bc.d);
            rep.denominator = t1 - t2;
            detail::check_denominator(*rep.denominator, std::max(std::abs(t1), std::abs(t2)), "CaseI", err);
          }
        }
        if constexpr (std::is_same_v<T, CaseIIBoundary>) {
          const double t1 = (1.0 - bc.ratio_ba) * (1.0 - bc.ratio_dc);
          const double t2 =
              bc.mu3 * bc.mu4 * bc.eta1 * bc.eta2 * (bc.nu1 - bc.ratio_dc) * (bc.nu2 - bc.ratio_ba);
          rep.denominator = t1 - t2;
          detail::check_denominator(*rep.denominator, std::max(std::abs(t1), std::abs(t2)), "CaseII", err);
        }
      },
      spec.boundary);
  return rep;
}

inline void require_valid(const ProblemSpec& spec) {
  auto rep = validate(spec);
  if (!rep.ok()) throw ValidationError(std::move(rep.errors));
}

}  // namespace fhaar
