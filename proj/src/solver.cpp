#include "sparsetrig/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace sparsetrig {

namespace {

constexpr double kBalanceRatio = 10.0;
constexpr double kBalanceFactor = 2.0;
constexpr int kBalanceInterval = 10;

// Euclidean projection onto {c : F c = b}. Uses the Cholesky factor of F F^*
// when F has full row rank, otherwise a complete orthogonal decomposition of F.
class AffineProjector {
 public:
  AffineProjector(const Eigen::MatrixXcd& F, const Eigen::VectorXcd& b) : F_(F), b_(b) {
    const Eigen::MatrixXcd gram = F * F.adjoint();
    llt_.compute(gram);
    bool ok = llt_.info() == Eigen::Success;
    if (ok) {
      // Reject factorizations whose pivots collapse relative to the largest one.
      const auto diag = llt_.matrixLLT().diagonal().real();
      ok = diag.minCoeff() > 1e-7 * diag.maxCoeff();
    }
    if (!ok) cod_.emplace(F);
  }

  Eigen::VectorXcd operator()(const Eigen::VectorXcd& v) const {
    const Eigen::VectorXcd defect = F_ * v - b_;
    if (cod_) return v - cod_->solve(defect);
    return v - F_.adjoint() * llt_.solve(defect);
  }

 private:
  const Eigen::MatrixXcd& F_;
  const Eigen::VectorXcd& b_;
  Eigen::LLT<Eigen::MatrixXcd> llt_;
  std::optional<Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd>> cod_;
};

void shrink(const Eigen::VectorXcd& v, double threshold, Eigen::VectorXcd& out) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mod = std::abs(v(k));
    out(k) = mod > threshold ? v(k) * ((mod - threshold) / mod) : Complex(0.0, 0.0);
  }
}

double l1_norm(const Eigen::VectorXcd& c) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k) sum += std::abs(c(k));
  return sum;
}

}  // namespace

BPSolution solve_basis_pursuit(const BPProblem& problem, const SolverOptions& options) {
  const auto& F = problem.matrix;
  const auto& b = problem.rhs;
  if (F.rows() == 0 || F.cols() == 0) throw std::invalid_argument("solve_basis_pursuit: empty matrix");
  if (b.size() != F.rows()) throw std::invalid_argument("solve_basis_pursuit: rhs length != row count");
  if (!F.allFinite() || !b.allFinite()) throw std::invalid_argument("solve_basis_pursuit: non-finite data");
  if (options.max_iterations < 1 || !(options.primal_tolerance > 0.0) ||
      !(options.dual_tolerance > 0.0) || !(options.penalty > 0.0)) {
    throw std::invalid_argument("solve_basis_pursuit: invalid solver options");
  }

  const double b_scale = std::max(1.0, b.norm());
  const Eigen::Index D = F.cols();

  BPSolution out;
  if (b.norm() == 0.0) {
    out.coeffs = Eigen::VectorXcd::Zero(D);
    out.iterations = 1;
    out.converged = true;
    return out;
  }

  const AffineProjector project(F, b);
  double rho = options.penalty;
  Eigen::VectorXcd x(D);
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(D);
  Eigen::VectorXcd z_prev(D);
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(D);

  for (int it = 1; it <= options.max_iterations; ++it) {
    x = project(z - u);
    z_prev = z;
    shrink(x + u, 1.0 / rho, z);
    u += x - z;

    const double change = (z - z_prev).norm();
    const double feasibility = (F * z - b).norm() / b_scale;
    out.iterations = it;
    if (feasibility <= options.primal_tolerance &&
        change / std::max(1.0, z.norm()) <= options.dual_tolerance) {
      out.converged = true;
      break;
    }

    if (it % kBalanceInterval == 0) {
      const double r = (x - z).norm();
      const double s = rho * change;
      if (r > kBalanceRatio * s) {
        rho *= kBalanceFactor;
        u /= kBalanceFactor;
      } else if (s > kBalanceRatio * r) {
        rho /= kBalanceFactor;
        u *= kBalanceFactor;
      }
    }
  }

  out.coeffs = z;
  out.objective = l1_norm(z);
  out.constraint_residual = (F * z - b).norm() / b_scale;
  return out;
}

bool is_exact_recovery(const Eigen::VectorXcd& recovered, const Eigen::VectorXcd& truth,
                       double tolerance) {
  if (recovered.size() != truth.size()) return false;
  if (truth.size() == 0) return true;
  const double scale = std::max(1.0, truth.cwiseAbs().maxCoeff());
  return (recovered - truth).cwiseAbs().maxCoeff() <= tolerance * scale;
}

}  // namespace sparsetrig
