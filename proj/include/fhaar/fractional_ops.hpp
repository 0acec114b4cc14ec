#pragma once

// Riemann-Liouville integrals of monomials and Haar functions, and the Caputo
// image of the linear boundary term.

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fhaar/haar_basis.hpp"

namespace fhaar {

/// Order of a fractional integral or derivative; always strictly positive.
class FracOrder {
 public:
  explicit FracOrder(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("fractional order must be positive and finite, got " +
                                  std::to_string(value));
    }
  }

  double value() const noexcept { return value_; }

 private:
  double value_;
};

inline double gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma is only provided for positive arguments, got " +
                            std::to_string(x));
  }
  return std::tgamma(x);
}

/// I^α x^μ = Γ(μ+1)/Γ(μ+α+1) x^{μ+α}.
inline double rl_integral_monomial(FracOrder alpha, double mu, double x) {
  if (!(mu > -1.0)) {
    throw std::domain_error("monomial exponent must exceed -1, got " + std::to_string(mu));
  }
  if (x < 0.0) throw std::domain_error("monomial integral needs x >= 0");
  const double a = alpha.value();
  if (x == 0.0) return 0.0;
  return std::exp(std::lgamma(mu + 1.0) - std::lgamma(mu + a + 1.0) + (mu + a) * std::log(x));
}

namespace detail {

// (t)_+^υ, zero for t <= 0 so the branch edges never produce NaN.
inline double positive_power(double t, double upsilon) {
  return t > 0.0 ? std::exp(upsilon * std::log(t)) : 0.0;
}

// Γ(υ+1) · I^υ h_l(x); callers divide by Γ(υ+1) once.
inline double scaled_frac_integral_haar(double upsilon, int l, double x) {
  if (l == 1) return positive_power(x, upsilon);
  const Breakpoints b = breakpoints(l);
  return positive_power(x - b.v1, upsilon) - 2.0 * positive_power(x - b.v2, upsilon) +
         positive_power(x - b.v3, upsilon);
}

}  // namespace detail

/// I^υ h_l(x) on [0, 1]. The four branches of the piecewise formula collapse
/// into one expression because (x - ϑ)_+^υ vanishes left of each breakpoint.
inline double frac_integral_haar(FracOrder upsilon, int l, double x) {
  if (l < 1) throw std::invalid_argument("Haar index must be >= 1");
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error("fractional Haar integral is defined on [0, 1], got x = " +
                            std::to_string(x));
  }
  const double u = upsilon.value();
  return detail::scaled_frac_integral_haar(u, l, x) / gamma(u + 1.0);
}

/// P(l-1, c-1) = I^υ h_l(η_c) at the collocation points.
inline Eigen::MatrixXd integration_matrix(FracOrder upsilon, const ResolutionParams& params) {
  const auto pts = collocation_points(params);
  const int n = params.basis_size;
  const double u = upsilon.value();
  const double inv_gamma = 1.0 / gamma(u + 1.0);
  Eigen::MatrixXd P(n, n);
  for (int l = 1; l <= n; ++l) {
    for (int c = 0; c < n; ++c) {
      P(l - 1, c) = detail::scaled_frac_integral_haar(u, l, pts[static_cast<std::size_t>(c)]) *
                    inv_gamma;
    }
  }
  return P;
}

/// Caputo D^β x = x^{1-β}/Γ(2-β) for 0 < β <= 1.
inline double caputo_linear_term(FracOrder beta, double x) {
  const double b = beta.value();
  if (b > 1.0) {
    throw std::domain_error("caputo_linear_term needs beta <= 1, got " + std::to_string(b));
  }
  if (x < 0.0) throw std::domain_error("caputo_linear_term needs x >= 0");
  if (b == 1.0) return 1.0;
  return detail::positive_power(x, 1.0 - b) / gamma(2.0 - b);
}

}  // namespace fhaar
