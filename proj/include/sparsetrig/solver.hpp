#pragma once

#include <span>

#include <Eigen/Dense>

#include "sparsetrig/model.hpp"

namespace sparsetrig {

/// min sum_k |c_k|  subject to  matrix * c = rhs, over complex c.
struct BPProblem {
  Eigen::MatrixXcd matrix;
  Eigen::VectorXcd rhs;
};

struct SolverOptions {
  int max_iterations = 50000;
  /// Bound on ||F c - b||_2 / max(1, ||b||_2) for the returned iterate.
  double primal_tolerance = 1e-9;
  /// Bound on the relative change of the shrunk iterate between sweeps.
  double dual_tolerance = 1e-9;
  /// Initial ADMM penalty rho; rescaled by residual balancing.
  double penalty = 1.0;
};

struct BPSolution {
  Eigen::VectorXcd coeffs;
  /// sum_k |coeffs_k| with the complex modulus.
  double objective = 0.0;
  /// ||F c - b||_2 / max(1, ||b||_2).
  double constraint_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// ADMM on the splitting c = z: c is projected onto {c : F c = b} using a
/// Cholesky factorization of F F^* computed once, and z takes the complex
/// soft-thresholding (modulus shrinkage) of c + u. The penalty follows the
/// usual residual-balancing rule (factor 2 when one residual exceeds the
/// other by more than 10x). The shrunk iterate z is returned.
///
/// Throws std::invalid_argument on an empty matrix, a rhs/row-count mismatch,
/// non-finite data or invalid options. Non-convergence is reported through
/// BPSolution::converged, never by throwing.
BPSolution solve_basis_pursuit(const BPProblem& problem, const SolverOptions& options = {});

struct CertificateReport {
  /// Candidate dual vector on the full grid, in enumeration order.
  Eigen::VectorXcd P;
  /// max |P_k| over k outside the support (0 when the support is the grid).
  double sup_off_support = 0.0;
  /// max |P_k - sgn(c_k)| over the support.
  double on_support_error = 0.0;
  /// Condition number estimate of F_TX^* F_TX (infinity when singular).
  double gram_condition = 0.0;
  bool gram_condition_ok = false;
  bool certified = false;
};

inline constexpr double kGramConditionLimit = 1e12;
inline constexpr double kSignMatchTolerance = 1e-8;

/// P = F_X^* F_TX (F_TX^* F_TX)^{-1} sgn(c)_T. A certified report means the
/// polynomial is the unique l1 minimizer for its own samples at X.
/// Throws std::invalid_argument for an empty support or an empty sampling set.
CertificateReport dual_certificate(const SamplingSet& samples, const FrequencyGrid& grid,
                                   const SparseTrigPoly& poly);

/// H0 = N I - F_TX^* F_TX on the support T.
Eigen::MatrixXcd h0_matrix(const SamplingSet& samples, std::span<const FrequencyIndex> support);

/// ||H0^n||_F by explicit powering. Throws for an empty support or n < 1.
double h0_frobenius_power(const SamplingSet& samples, std::span<const FrequencyIndex> support, int n);

/// Recovery criterion shared by the harness and tests:
/// ||c - c_true||_inf <= tolerance * max(1, ||c_true||_inf).
bool is_exact_recovery(const Eigen::VectorXcd& recovered, const Eigen::VectorXcd& truth,
                       double tolerance = 1e-4);

}  // namespace sparsetrig
