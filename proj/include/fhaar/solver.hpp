#pragma once

// Newton iteration for φ(c) = 0 with a forward-difference Jacobian and dense
// partial-pivoting LU (Eigen). Convergence is judged on ‖φ‖∞.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fhaar/assembly.hpp"
#include "fhaar/error.hpp"
#include "fhaar/problem.hpp"

namespace fhaar {

struct SolverConfig {
  double tol = 1e-12;
  int max_iter = 50;
  double fd_step_scale = std::sqrt(std::numeric_limits<double>::epsilon());
  std::optional<CoefficientVector> initial_guess;  // zeros when empty
  bool step_halving = false;
};

struct SolveDiagnostics {
  int iterations = 0;
  double final_residual_norm = std::numeric_limits<double>::infinity();
  double condition_estimate = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  std::vector<double> residual_history;  // ‖φ‖∞ at every iterate, starting with the guess
  std::string message;
};

struct SolveResult {
  CoefficientVector coefficients;
  SolveDiagnostics diagnostics;
};

/// Column i is (F(c + h_i e_i) - F(c)) / h_i with h_i = scale (1 + |c_i|).
template <class F>
Eigen::MatrixXd jacobian_fd(F&& f, const Eigen::VectorXd& c, double fd_step_scale, const Eigen::VectorXd& fc) {
  Eigen::MatrixXd J(fc.size(), c.size());
  Eigen::VectorXd shifted = c;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double h = fd_step_scale * (1.0 + std::abs(c[i]));
    shifted[i] = c[i] + h;
    // Use the step actually represented after rounding.
    const double hi = shifted[i] - c[i];
    J.col(i) = (f(shifted) - fc) / hi;
    shifted[i] = c[i];
  }
  return J;
}

template <class F>
Eigen::MatrixXd jacobian_fd(F&& f, const Eigen::VectorXd& c,
                            double fd_step_scale = std::sqrt(std::numeric_limits<double>::epsilon())) {
  const Eigen::VectorXd fc = f(c);
  return jacobian_fd(f, c, fd_step_scale, fc);
}

/// Partial-pivoting LU that refuses matrices singular to working precision.
class LuFactorization {
 public:
  explicit LuFactorization(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("LU needs a square matrix");
    if (!A.allFinite()) throw std::invalid_argument("LU input contains non-finite entries");
    lu_.compute(A);
    const auto& U = lu_.matrixLU();
    const double scale = std::max(A.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    const double floor = static_cast<double>(A.rows()) * std::numeric_limits<double>::epsilon() * scale;
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      if (!(std::abs(U(i, i)) > floor)) throw SingularMatrixError(static_cast<long>(i));
    }
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    if (rhs.size() != lu_.rows()) throw std::invalid_argument("rhs length does not match matrix");
    return lu_.solve(rhs);
  }

  /// Reciprocal 1-norm condition estimate (Hager/Higham, as implemented by Eigen).
  double rcond() const { return lu_.rcond(); }

  const Eigen::PartialPivLU<Eigen::MatrixXd>& eigen() const noexcept { return lu_; }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

inline Eigen::VectorXd lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs) {
  return LuFactorization(A).solve(rhs);
}

inline double condition_estimate_1norm(const LuFactorization& lu) {
  const double rc = lu.rcond();
  return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}

namespace detail {

inline double max_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace detail

inline SolveResult newton_solve(const CollocationSystem& system, const SolverConfig& config) {
  if (!(config.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
  if (config.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!(config.fd_step_scale > 0.0)) throw std::invalid_argument("fd step scale must be positive");

  const auto& params = system.params();
  CoefficientVector guess = config.initial_guess.value_or(CoefficientVector::zeros(params));
  check_sizes(guess, params);

  SolveResult out{guess, {}};
  auto& diag = out.diagnostics;
  Eigen::VectorXd c = guess.flat();
  Eigen::VectorXd fc;
  try {
    fc = system.residual(c);
  } catch (const EvalError& e) {
    diag.message = std::string("residual undefined at the initial guess: ") + e.what();
    return out;
  }
  double norm = detail::max_norm(fc);
  diag.residual_history.push_back(norm);

  Eigen::MatrixXd J;
  while (norm > config.tol && diag.iterations < config.max_iter) {
    J = jacobian_fd(system, c, config.fd_step_scale, fc);
    const Eigen::VectorXd step = LuFactorization(J).solve(fc);

    double lambda = 1.0;
    Eigen::VectorXd trial;
    Eigen::VectorXd ftrial;
    double trial_norm = std::numeric_limits<double>::infinity();
    std::string fault;
    for (int halvings = 0;; ++halvings) {
      trial = c - lambda * step;
      try {
        ftrial = system.residual(trial);
        trial_norm = detail::max_norm(ftrial);
        fault.clear();
      } catch (const EvalError& e) {
        trial_norm = std::numeric_limits<double>::infinity();
        fault = e.what();
      }
      if (!config.step_halving || trial_norm < norm || halvings == 20) break;
      lambda *= 0.5;
    }
    ++diag.iterations;
    if (!fault.empty()) {
      diag.message = "residual undefined at Newton iterate " + std::to_string(diag.iterations) + ": " + fault;
      break;
    }
    c = trial;
    fc = ftrial;
    norm = trial_norm;
    diag.residual_history.push_back(norm);
  }

  out.coefficients = CoefficientVector::from_flat(c);
  diag.final_residual_norm = norm;
  diag.converged = norm <= config.tol;
  if (diag.message.empty()) {
    diag.message = diag.converged ? "converged" : "no convergence within " + std::to_string(config.max_iter) + " iterations";
  }

  // Conditioning of the linearized system at the returned iterate.
  try {
    const Eigen::MatrixXd Jf = jacobian_fd(system, c, config.fd_step_scale, fc);
    diag.condition_estimate = condition_estimate_1norm(LuFactorization(Jf));
  } catch (const SingularMatrixError&) {
    diag.condition_estimate = std::numeric_limits<double>::infinity();
  } catch (const EvalError&) {
  }
  return out;
}

inline SolveResult newton_solve(const ProblemSpec& spec, const ResolutionParams& params,
                                const SolverConfig& config = {}) {
  require_valid(spec);
  return newton_solve(CollocationSystem(spec, params), config);
}

}  // namespace fhaar
