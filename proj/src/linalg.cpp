// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "nhgap/errors.hpp"

namespace nhgap {

struct SchurCache {
  CMatrix t;  // upper triangular factor; sigma_min(A - mu I) == sigma_min(T - mu I)
};

SpectralOperand::SpectralOperand(CMatrix matrix, double k_bound, long m_max,
                                 bool norm_certified)
    : matrix_(std::move(matrix)),
      k_bound_(k_bound),
      m_max_(m_max),
      norm_certified_(norm_certified) {
  validate_matrix(matrix_);
  if (k_bound_ < 1.0) throw InvalidArgument("k_bound must be >= 1");
  if (m_max_ < 1) throw InvalidArgument("m_max must be >= 1");
  const double norm = spectral_norm(matrix_);
  if (norm > 1.0 + kTolNorm) {
    scale_ = norm;
    matrix_ /= norm;
  }
  norm_certified_ = norm_certified_ || scale_ != 1.0;
}

SpectralOperand SpectralOperand::with_estimated_k(CMatrix matrix) {
  double k = jordan_condition_estimate(matrix);
  return SpectralOperand(std::move(matrix), std::max(1.0, k), 1);
}

const SchurCache& SpectralOperand::schur() const {
  if (!schur_) {
    Eigen::ComplexSchur<CMatrix> dec(matrix_, /*computeU=*/false);
    if (dec.info() != Eigen::Success) {
      throw DecompositionFailure("Schur factorization failed");
    }
    schur_ = std::make_shared<SchurCache>(SchurCache{dec.matrixT()});
  }
  return *schur_;
}

CVector SpectralOperand::schur_eigenvalues() const { return schur().t.diagonal(); }

double spectral_norm(const CMatrix& m) {
  validate_matrix(m);
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double sigma_min_shifted(const SpectralOperand& op, Complex mu) {
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag())) {
    throw InvalidArgument("mu must be finite");
  }
  CMatrix shifted = op.matrix();
  shifted.diagonal().array() -= mu;
  Eigen::JacobiSVD<CMatrix> svd(shifted);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double jordan_condition_estimate(const CMatrix& m) {
  validate_matrix(m);
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw DecompositionFailure("eigendecomposition failed");
  }
  Eigen::JacobiSVD<CMatrix> svd(es.eigenvectors());
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0 || sv(0) / smin > kDefectiveCondCutoff) {
    throw DefectiveMatrix("eigenvector matrix numerically singular; supply k_bound and m_max");
  }
  return sv(0) / smin;
}

double low_sv_overlap(const SpectralOperand& op, Complex mu, double eps,
                      const CVector& psi) {
  if (eps <= 0.0) throw InvalidArgument("eps must be positive");
  if (psi.size() != op.dim()) throw InvalidState("state dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw InvalidState("psi must be unit-norm");
  }
  CMatrix shifted = op.matrix();
  shifted.diagonal().array() -= mu;
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double acc = 0.0;
  for (long j = 0; j < sv.size(); ++j) {
    if (sv(j) <= eps) {
      const Complex c = svd.matrixV().col(j).adjoint() * psi;
      acc += std::norm(c);
    }
  }
  return std::sqrt(acc);
}

CVector smallest_right_singular_vector(const SpectralOperand& op, Complex mu) {
  CMatrix shifted = op.matrix();
  shifted.diagonal().array() -= mu;
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeThinV);
  return svd.matrixV().col(op.dim() - 1);
}

namespace {

// Inverse-iteration estimate of sigma_min(T - mu I) for triangular T.
// The returned value never underestimates sigma_min.
double sigma_min_estimate_triangular(const CMatrix& t, Complex mu, int iters) {
  const long n = t.rows();
  CMatrix shifted = t;
  shifted.diagonal().array() -= mu;
  auto upper = shifted.triangularView<Eigen::Upper>();
  auto lower = shifted.adjoint().triangularView<Eigen::Lower>();
  // Fixed deterministic start with nonzero overlap everywhere.
  CVector v(n);
  for (long i = 0; i < n; ++i) {
    v(i) = Complex(1.0, 0.3 + 1e-3 * static_cast<double>(i));
  }
  v.normalize();
  double est = 0.0;
  for (int k = 0; k < iters; ++k) {
    CVector w = lower.solve(v);
    CVector u = upper.solve(w);
    const double growth = u.norm();
    if (!std::isfinite(growth) || growth == 0.0) return 0.0;
    const double next = 1.0 / std::sqrt(growth);
    v = u / growth;
    if (k > 1 && std::abs(next - est) < 0.02 * est) return next;
    est = next;
  }
  return est;
}

}  // namespace

bool sigma_min_below(const SpectralOperand& op, Complex mu, double cut) {
  if (cut <= 0.0) throw InvalidArgument("cut must be positive");
  const CMatrix& t = op.schur().t;
  // Weyl: sigma_min <= min_j |lambda_j - mu| (Schur diagonal holds the
  // eigenvalues), so a near-diagonal hit decides immediately.
  double dmin = (t.diagonal().array() - mu).abs().minCoeff();
  if (dmin <= cut) return true;
  // Triangular entries with tiny diagonal make the solves useless; fall
  // back to the exact decision there as well as near the cut.
  const double est = sigma_min_estimate_triangular(t, mu, 14);
  if (est > 4.0 * cut) return false;
  if (est <= cut) return true;  // estimate is an upper bound on sigma_min
  // Near the cut: decide exactly. sigma_min^2 is the smallest eigenvalue of
  // the Hermitian square, much cheaper than a full SVD at this size.
  CMatrix shifted = t;
  shifted.diagonal().array() -= mu;
  CMatrix gram = shifted.adjoint() * shifted;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  const double lmin = std::max(0.0, es.eigenvalues()(0));
  return std::sqrt(lmin) <= cut;
}

}  // namespace nhgap
