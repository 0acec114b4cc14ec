#pragma once

// Haar wavelet family on [0, 1): index arithmetic, supports, pointwise values,
// midpoint collocation grid and exact inner products.
//
// Indices are 1-based throughout the public API: l = 1 is the scaling function,
// l = 2^j + k + 1 (0 <= k < 2^j) is the wavelet at scale j and translation k.

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fhaar {

/// Resolution of the discretization: level J, M = 2^J, 2M basis functions,
/// 2M collocation points spaced `step` = 1/(2M) apart.
struct ResolutionParams {
  int J = 0;
  int M = 1;
  int basis_size = 2;
  double step = 0.5;

  static ResolutionParams from_level(int level) {
    if (level < 0 || level > 20) {
      throw std::invalid_argument("resolution level J must lie in [0, 20], got " +
                                  std::to_string(level));
    }
    ResolutionParams p;
    p.J = level;
    p.M = 1 << level;
    p.basis_size = 2 * p.M;
    p.step = 1.0 / p.basis_size;
    return p;
  }

  friend bool operator==(const ResolutionParams&, const ResolutionParams&) = default;
};

struct WaveletIndex {
  int l = 1;
  int j = 0;
  int k = 0;
  int m = 0;  // 2^j; zero for the scaling function

  int recompose() const { return l == 1 ? 1 : m + k + 1; }
};

/// Support of a wavelet: +1 on [v1, v2), -1 on [v2, v3).
struct Breakpoints {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
};

inline WaveletIndex decompose_index(int l) {
  if (l < 2) {
    throw std::invalid_argument("decompose_index expects l >= 2, got " + std::to_string(l));
  }
  const auto n = static_cast<unsigned>(l - 1);
  const int j = static_cast<int>(std::bit_width(n)) - 1;
  const int m = 1 << j;
  return WaveletIndex{l, j, l - m - 1, m};
}

/// ϑ1 = k/m, ϑ2 = (2k+1)/(2m), ϑ3 = (k+1)/m. Dyadic, hence exact in binary.
inline Breakpoints breakpoints(const WaveletIndex& idx) {
  if (idx.l < 2) {
    throw std::invalid_argument("breakpoints are defined for wavelets (l >= 2) only");
  }
  const double m = idx.m;
  return Breakpoints{idx.k / m, (2.0 * idx.k + 1.0) / (2.0 * m), (idx.k + 1.0) / m};
}

inline Breakpoints breakpoints(int l) { return breakpoints(decompose_index(l)); }

inline double haar_eval(int l, double x) {
  if (l < 1) throw std::invalid_argument("Haar index must be >= 1");
  if (l == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  const Breakpoints b = breakpoints(l);
  if (x >= b.v1 && x < b.v2) return 1.0;
  if (x >= b.v2 && x < b.v3) return -1.0;
  return 0.0;
}

/// Midpoints η_c = (c - 1/2)/(2M), c = 1..2M. Never touches 0, 1 or any breakpoint.
inline std::vector<double> collocation_points(const ResolutionParams& params) {
  std::vector<double> pts(static_cast<std::size_t>(params.basis_size));
  for (int c = 1; c <= params.basis_size; ++c) {
    pts[static_cast<std::size_t>(c - 1)] = (c - 0.5) * params.step;
  }
  return pts;
}

/// H(l-1, c-1) = h_l(η_c).
inline Eigen::MatrixXd haar_matrix(const ResolutionParams& params) {
  const auto pts = collocation_points(params);
  const int n = params.basis_size;
  Eigen::MatrixXd H(n, n);
  for (int l = 1; l <= n; ++l) {
    for (int c = 0; c < n; ++c) H(l - 1, c) = haar_eval(l, pts[static_cast<std::size_t>(c)]);
  }
  return H;
}

namespace detail {

struct ConstantPiece {
  double lo;
  double hi;
  double value;
};

inline std::vector<ConstantPiece> pieces(int l) {
  if (l == 1) return {{0.0, 1.0, 1.0}};
  const Breakpoints b = breakpoints(l);
  return {{b.v1, b.v2, 1.0}, {b.v2, b.v3, -1.0}};
}

}  // namespace detail

/// ∫₀¹ h_l h_r dx from the overlap of the constant pieces. All endpoints are
/// dyadic, so every overlap length and product is exact in double precision.
inline double pairwise_inner_product(int l, int r) {
  if (l < 1 || r < 1) throw std::invalid_argument("Haar indices must be >= 1");
  double total = 0.0;
  for (const auto& p : detail::pieces(l)) {
    for (const auto& q : detail::pieces(r)) {
      const double lo = std::max(p.lo, q.lo);
      const double hi = std::min(p.hi, q.hi);
      if (hi > lo) total += (hi - lo) * p.value * q.value;
    }
  }
  return total;
}

}  // namespace fhaar
