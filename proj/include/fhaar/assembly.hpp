#pragma once

// From wavelet coefficients to y, z and their fractional derivatives.
//
// With D^{α1} y = Σ a_l h_l, integrating α1 times gives the closure
//
//   y(x)       = Σ a_l I^{α1} h_l(x) + y(0) + x y'(0)
//   D^{β1}y(x) = Σ a_l I^{α1-β1} h_l(x) + y'(0) x^{1-β1}/Γ(2-β1)
//
// (the Caputo derivative kills the constant), and likewise for z with b_l.
// The boundary mode only decides how y(0), y'(0), z(0), z'(0) are recovered
// from the coefficients; see initial_data().

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include <Eigen/Dense>

#include "fhaar/error.hpp"
#include "fhaar/fractional_ops.hpp"
#include "fhaar/haar_basis.hpp"
#include "fhaar/problem.hpp"

namespace fhaar {

struct CoefficientVector {
  Eigen::VectorXd a;
  Eigen::VectorXd b;

  static CoefficientVector zeros(const ResolutionParams& p) {
    return {Eigen::VectorXd::Zero(p.basis_size), Eigen::VectorXd::Zero(p.basis_size)};
  }

  /// Splits [a; b].
  static CoefficientVector from_flat(const Eigen::VectorXd& flat) {
    if (flat.size() % 2 != 0) throw std::invalid_argument("flat coefficient vector must have even length");
    const auto n = flat.size() / 2;
    return {flat.head(n), flat.tail(n)};
  }

  Eigen::VectorXd flat() const {
    Eigen::VectorXd out(a.size() + b.size());
    out << a, b;
    return out;
  }
};

struct InitialData {
  double y0 = 0, yp0 = 0, z0 = 0, zp0 = 0;
};

/// Σ a_l I^{α1} h_l and Σ b_l I^{α2} h_l at the points the boundary modes need.
struct BoundarySums {
  double Ay1 = 0;     // at x = 1
  double Bz1 = 0;
  double Ay_nu2 = 0;  // at x = ν2
  double Bz_nu1 = 0;  // at x = ν1
};

namespace detail {

inline double series(const Eigen::VectorXd& c, double upsilon, double x) {
  const double inv_gamma = 1.0 / gamma(upsilon + 1.0);
  double s = 0.0;
  for (Eigen::Index l = 1; l <= c.size(); ++l) {
    const double w = c[l - 1];
    if (w != 0.0) s += w * scaled_frac_integral_haar(upsilon, static_cast<int>(l), x);
  }
  return s * inv_gamma;
}

inline double nu1_of(const BoundarySpec& b) {
  if (auto* c = std::get_if<CaseIBoundary>(&b)) return c->nu1;
  if (auto* c = std::get_if<CaseIIBoundary>(&b)) return c->nu1;
  return 1.0;
}

inline double nu2_of(const BoundarySpec& b) {
  if (auto* c = std::get_if<CaseIBoundary>(&b)) return c->nu2;
  if (auto* c = std::get_if<CaseIIBoundary>(&b)) return c->nu2;
  return 1.0;
}

inline BoundarySums boundary_sums(const CoefficientVector& cv, const FractionalOrders& o, double nu1, double nu2) {
  return {series(cv.a, o.alpha1, 1.0), series(cv.b, o.alpha2, 1.0), series(cv.a, o.alpha1, nu2),
          series(cv.b, o.alpha2, nu1)};
}

}  // namespace detail

/// y(0), z(0) for Case I, eliminated from
///   (1-a/b) y0 - μ3η1(1-cν1/d) z0 = R1
///   -μ4η2(1-aν2/b) y0 + (1-c/d) z0 = R2
/// where the right-hand sides collect the wavelet sums and the μ data.
inline std::pair<double, double> case1_intercepts(const BoundarySums& s, const CaseIBoundary& bc) {
  if (bc.b == 0.0 || bc.d == 0.0) throw ValidationError({"CaseI needs b and d non-zero"});
  const double D = bc.denominator();
  if (D == 0.0 || !std::isfinite(D)) throw ValidationError({"CaseI denominator is zero"});
  const double m3e1 = bc.mu3 * bc.eta1;
  const double m4e2 = bc.mu4 * bc.eta2;
  const double R1 = m3e1 * s.Bz_nu1 + bc.mu2 * m3e1 * bc.nu1 / bc.d - bc.mu1 / bc.b - s.Ay1;
  const double R2 = m4e2 * s.Ay_nu2 + bc.mu1 * m4e2 * bc.nu2 / bc.b - s.Bz1 - bc.mu2 / bc.d;
  const double y0 = ((1.0 - bc.c / bc.d) * R1 + m3e1 * (1.0 - bc.c * bc.nu1 / bc.d) * R2) / D;
  const double z0 = (m4e2 * (1.0 - bc.a * bc.nu2 / bc.b) * R1 + (1.0 - bc.a / bc.b) * R2) / D;
  return {y0, z0};
}

inline std::pair<double, double> case1_intercepts(const CoefficientVector& cv, const CaseIBoundary& bc,
                                                  const FractionalOrders& o) {
  return case1_intercepts(detail::boundary_sums(cv, o, bc.nu1, bc.nu2), bc);
}

/// y'(0), z'(0) for Case II. With y(0) = μ1/a - (b/a) y'(0) the two nonlocal
/// conditions become
///   (1-b/a) p - μ3η1(ν1-d/c) q = μ3η1(Bz(ν1) + μ2/c) - μ1/a - Ay(1)
///   -μ4η2(ν2-b/a) p + (1-d/c) q = μ4η2(Ay(ν2) + μ1/a) - μ2/c - Bz(1)
inline std::pair<double, double> case2_slopes(const BoundarySums& s, const CaseIIBoundary& bc) {
  const double D = bc.denominator();
  if (D == 0.0 || !std::isfinite(D)) throw ValidationError({"CaseII denominator is zero"});
  const double m3e1 = bc.mu3 * bc.eta1;
  const double m4e2 = bc.mu4 * bc.eta2;
  const double a11 = 1.0 - bc.ratio_ba, a12 = -m3e1 * (bc.nu1 - bc.ratio_dc);
  const double a21 = -m4e2 * (bc.nu2 - bc.ratio_ba), a22 = 1.0 - bc.ratio_dc;
  const double r1 = m3e1 * (s.Bz_nu1 + bc.mu2_over_c) - bc.mu1_over_a - s.Ay1;
  const double r2 = m4e2 * (s.Ay_nu2 + bc.mu1_over_a) - bc.mu2_over_c - s.Bz1;
  return {(a22 * r1 - a12 * r2) / D, (a11 * r2 - a21 * r1) / D};
}

inline std::pair<double, double> case2_slopes(const CoefficientVector& cv, const CaseIIBoundary& bc,
                                              const FractionalOrders& o) {
  return case2_slopes(detail::boundary_sums(cv, o, bc.nu1, bc.nu2), bc);
}

/// Recovers (y0, y'(0), z0, z'(0)) for the active boundary mode.
inline InitialData initial_data(const BoundarySums& s, const BoundarySpec& boundary) {
  return std::visit(
      [&](const auto& bc) -> InitialData {
        using T = std::decay_t<decltype(bc)>;
        if constexpr (std::is_same_v<T, PureIvpBoundary>) {
          return {bc.y0, bc.yp0, bc.z0, bc.zp0};
        } else if constexpr (std::is_same_v<T, NeumannDirichletBoundary>) {
          // Degenerate Case I: y(1) = y1 fixes y(0) once y'(0) is known.
          return {bc.y1 - bc.yp0 - s.Ay1, bc.yp0, bc.z1 - bc.zp0 - s.Bz1, bc.zp0};
        } else if constexpr (std::is_same_v<T, CaseIBoundary>) {
          const auto [y0, z0] = case1_intercepts(s, bc);
          return {y0, (bc.mu1 - bc.a * y0) / bc.b, z0, (bc.mu2 - bc.c * z0) / bc.d};
        } else {
          const auto [p, q] = case2_slopes(s, bc);
          return {bc.mu1_over_a - bc.ratio_ba * p, p, bc.mu2_over_c - bc.ratio_dc * q, q};
        }
      },
      boundary);
}

inline InitialData initial_data(const CoefficientVector& cv, const ProblemSpec& spec) {
  const auto s = detail::boundary_sums(cv, spec.orders, detail::nu1_of(spec.boundary), detail::nu2_of(spec.boundary));
  return initial_data(s, spec.boundary);
}

/// Numerical solution for one coefficient vector; evaluates anywhere in [0, 1].
class AssembledState {
 public:
  AssembledState(CoefficientVector coeffs, FractionalOrders orders, InitialData init)
      : c_(std::move(coeffs)), o_(orders), init_(init) {}

  double y_at(double x) const { return detail::series(c_.a, o_.alpha1, x) + init_.y0 + x * init_.yp0; }
  double z_at(double x) const { return detail::series(c_.b, o_.alpha2, x) + init_.z0 + x * init_.zp0; }

  double dbeta_y_at(double x) const {
    return detail::series(c_.a, o_.alpha1 - o_.beta1, x) + init_.yp0 * caputo_linear_term(FracOrder(o_.beta1), x);
  }
  double dbeta_z_at(double x) const {
    return detail::series(c_.b, o_.alpha2 - o_.beta2, x) + init_.zp0 * caputo_linear_term(FracOrder(o_.beta2), x);
  }

  double dalpha_y_at(double x) const { return haar_sum(c_.a, x); }
  double dalpha_z_at(double x) const { return haar_sum(c_.b, x); }

  const InitialData& initial() const noexcept { return init_; }
  const CoefficientVector& coefficients() const noexcept { return c_; }
  const FractionalOrders& orders() const noexcept { return o_; }

 private:
  static double haar_sum(const Eigen::VectorXd& c, double x) {
    double s = 0.0;
    for (Eigen::Index l = 1; l <= c.size(); ++l) s += c[l - 1] * haar_eval(static_cast<int>(l), x);
    return s;
  }

  CoefficientVector c_;
  FractionalOrders o_;
  InitialData init_;
};

inline void check_sizes(const CoefficientVector& cv, const ResolutionParams& params) {
  if (cv.a.size() != params.basis_size || cv.b.size() != params.basis_size) {
    throw std::invalid_argument("coefficient vectors must have length 2M = " + std::to_string(params.basis_size));
  }
}

inline AssembledState assemble(const CoefficientVector& cv, const ProblemSpec& spec, const ResolutionParams& params) {
  check_sizes(cv, params);
  return AssembledState(cv, spec.orders, initial_data(cv, spec));
}

namespace detail {

inline double call_rhs(const RightHandSide& f, const char* which, double x, double y, double z) {
  double v;
  try {
    v = f(x, y, z);
  } catch (const EvalError& e) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s failed at x = %.9g (y = %.9g, z = %.9g): ", which, x, y, z);
    throw EvalError(buf + std::string(e.what()));
  }
  if (!std::isfinite(v)) {
    char buf[112];
    std::snprintf(buf, sizeof buf, "%s is not finite at x = %.9g (y = %.9g, z = %.9g)", which, x, y, z);
    throw EvalError(buf);
  }
  return v;
}

}  // namespace detail

/// The collocation residual φ with every coefficient-independent quantity
/// cached: operational matrices at the midpoints, Caputo images of x, the
/// singular weights and the boundary rows. Immutable once built.
class CollocationSystem {
 public:
  CollocationSystem(ProblemSpec spec, const ResolutionParams& params) : spec_(std::move(spec)), params_(params) {
    const auto& o = spec_.orders;
    const int n = params_.basis_size;
    const auto pts = collocation_points(params_);
    eta_ = Eigen::Map<const Eigen::VectorXd>(pts.data(), n);
    Ht_ = haar_matrix(params_).transpose();
    Pa1t_ = integration_matrix(FracOrder(o.alpha1), params_).transpose();
    Pa2t_ = integration_matrix(FracOrder(o.alpha2), params_).transpose();
    Pb1t_ = integration_matrix(FracOrder(o.alpha1 - o.beta1), params_).transpose();
    Pb2t_ = integration_matrix(FracOrder(o.alpha2 - o.beta2), params_).transpose();
    cap1_.resize(n);
    cap2_.resize(n);
    w1_.resize(n);
    w2_.resize(n);
    for (int c = 0; c < n; ++c) {
      const double x = eta_[c];
      cap1_[c] = caputo_linear_term(FracOrder(o.beta1), x);
      cap2_[c] = caputo_linear_term(FracOrder(o.beta2), x);
      w1_[c] = spec_.sing1.k / std::pow(x, spec_.sing1.gamma_exp);
      w2_[c] = spec_.sing2.k / std::pow(x, spec_.sing2.gamma_exp);
    }
    const double nu1 = detail::nu1_of(spec_.boundary);
    const double nu2 = detail::nu2_of(spec_.boundary);
    row_a1_ = row(o.alpha1, 1.0);
    row_b1_ = row(o.alpha2, 1.0);
    row_a_nu2_ = row(o.alpha1, nu2);
    row_b_nu1_ = row(o.alpha2, nu1);
  }

  const ProblemSpec& spec() const noexcept { return spec_; }
  const ResolutionParams& params() const noexcept { return params_; }
  Eigen::Index dimension() const noexcept { return 2 * params_.basis_size; }
  const Eigen::VectorXd& points() const noexcept { return eta_; }

  InitialData initial_data_for(const CoefficientVector& cv) const {
    const BoundarySums s{row_a1_.dot(cv.a), row_b1_.dot(cv.b), row_a_nu2_.dot(cv.a), row_b_nu1_.dot(cv.b)};
    return initial_data(s, spec_.boundary);
  }

  /// φ_1..φ_2M for the first equation followed by φ_{2M+1}..φ_{4M}.
  Eigen::VectorXd residual(const CoefficientVector& cv) const {
    check_sizes(cv, params_);
    const InitialData init = initial_data_for(cv);
    const Eigen::VectorXd y = Pa1t_ * cv.a + Eigen::VectorXd::Constant(eta_.size(), init.y0) + init.yp0 * eta_;
    const Eigen::VectorXd z = Pa2t_ * cv.b + Eigen::VectorXd::Constant(eta_.size(), init.z0) + init.zp0 * eta_;
    const Eigen::VectorXd dby = Pb1t_ * cv.a + init.yp0 * cap1_;
    const Eigen::VectorXd dbz = Pb2t_ * cv.b + init.zp0 * cap2_;
    const Eigen::VectorXd day = Ht_ * cv.a;
    const Eigen::VectorXd daz = Ht_ * cv.b;

    const Eigen::Index n = eta_.size();
    Eigen::VectorXd phi(2 * n);
    for (Eigen::Index c = 0; c < n; ++c) {
      const double x = eta_[c];
      phi[c] = day[c] + w1_[c] * dby[c] - detail::call_rhs(spec_.f1, "f1", x, y[c], z[c]);
      phi[n + c] = daz[c] + w2_[c] * dbz[c] - detail::call_rhs(spec_.f2, "f2", x, y[c], z[c]);
    }
    return phi;
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& flat) const { return residual(CoefficientVector::from_flat(flat)); }

  Eigen::VectorXd operator()(const Eigen::VectorXd& flat) const { return residual(flat); }

 private:
  Eigen::VectorXd row(double upsilon, double x) const {
    const int n = params_.basis_size;
    Eigen::VectorXd r(n);
    const double inv_gamma = 1.0 / gamma(upsilon + 1.0);
    for (int l = 1; l <= n; ++l) r[l - 1] = detail::scaled_frac_integral_haar(upsilon, l, x) * inv_gamma;
    return r;
  }

  ProblemSpec spec_;
  ResolutionParams params_;
  Eigen::VectorXd eta_;
  Eigen::MatrixXd Ht_, Pa1t_, Pa2t_, Pb1t_, Pb2t_;
  Eigen::VectorXd cap1_, cap2_, w1_, w2_;
  Eigen::VectorXd row_a1_, row_b1_, row_a_nu2_, row_b_nu1_;
};

inline Eigen::VectorXd residual_system(const CoefficientVector& cv, const ProblemSpec& spec,
                                       const ResolutionParams& params) {
  return CollocationSystem(spec, params).residual(cv);
}

}  // namespace fhaar
