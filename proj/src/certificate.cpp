#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparsetrig/solver.hpp"

namespace sparsetrig {

CertificateReport dual_certificate(const SamplingSet& samples, const FrequencyGrid& grid,
                                   const SparseTrigPoly& poly) {
  if (poly.support_size() == 0) throw std::invalid_argument("dual_certificate: empty support");
  if (samples.size() == 0) throw std::invalid_argument("dual_certificate: empty sampling set");
  if (samples.dim() != grid.dim() || !(poly.grid() == grid)) {
    throw std::invalid_argument("dual_certificate: grid/sampling dimension mismatch");
  }

  const auto support = poly.support();
  const Eigen::MatrixXcd F_T = fourier_matrix(samples, support);
  const Eigen::MatrixXcd gram = F_T.adjoint() * F_T;

  Eigen::VectorXcd sign(static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Complex c = poly.coefficient(support[i]);
    sign(static_cast<Eigen::Index>(i)) = c / std::abs(c);
  }

  CertificateReport report;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const double lambda_min = eig.eigenvalues().minCoeff();
  const double lambda_max = eig.eigenvalues().maxCoeff();
  report.gram_condition =
      lambda_min > 0.0 ? lambda_max / lambda_min : std::numeric_limits<double>::infinity();
  report.gram_condition_ok = report.gram_condition <= kGramConditionLimit;

  const auto D = static_cast<Eigen::Index>(grid.size());
  if (!report.gram_condition_ok) {
    report.P = Eigen::VectorXcd::Zero(D);
    report.sup_off_support = std::numeric_limits<double>::infinity();
    report.on_support_error = std::numeric_limits<double>::infinity();
    return report;
  }

  const Eigen::VectorXcd y = gram.ldlt().solve(sign);
  const Eigen::VectorXcd lambda = F_T * y;
  const auto all = grid.enumerate();
  report.P = fourier_matrix(samples, all).adjoint() * lambda;

  std::vector<bool> in_support(static_cast<std::size_t>(D), false);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto pos = grid.position(support[i]);
    in_support[static_cast<std::size_t>(pos)] = true;
    report.on_support_error =
        std::max(report.on_support_error, std::abs(report.P(pos) - sign(static_cast<Eigen::Index>(i))));
  }
  for (Eigen::Index k = 0; k < D; ++k) {
    if (!in_support[static_cast<std::size_t>(k)]) {
      report.sup_off_support = std::max(report.sup_off_support, std::abs(report.P(k)));
    }
  }
  report.certified = report.sup_off_support < 1.0 && report.on_support_error <= kSignMatchTolerance;
  return report;
}

Eigen::MatrixXcd h0_matrix(const SamplingSet& samples, std::span<const FrequencyIndex> support) {
  if (support.empty()) throw std::invalid_argument("h0_matrix: empty support");
  const Eigen::MatrixXcd F_T = fourier_matrix(samples, support);
  const auto M = static_cast<Eigen::Index>(support.size());
  return static_cast<double>(samples.size()) * Eigen::MatrixXcd::Identity(M, M) - F_T.adjoint() * F_T;
}

double h0_frobenius_power(const SamplingSet& samples, std::span<const FrequencyIndex> support, int n) {
  if (n < 1) throw std::invalid_argument("h0_frobenius_power: n must be positive");
  const Eigen::MatrixXcd H0 = h0_matrix(samples, support);
  Eigen::MatrixXcd power = H0;
  for (int i = 1; i < n; ++i) power = power * H0;
  return power.norm();
}

}  // namespace sparsetrig
