// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_LINALG_HPP
#define NHGAP_LINALG_HPP

#include <memory>
#include <optional>

#include "nhgap/cmatrix.hpp"

namespace nhgap {

inline constexpr double kTolNorm = 1e-10;
inline constexpr double kDefectiveCondCutoff = 1e12;

/// Provenance of an operand's block encoding, for the modeled cost record.
/// A Pauli-LCU origin carries a term count J; a dense file carries nothing
/// and the block-encoding cost is reported as not modeled.
struct BlockEncodingProvenance {
  long term_count = 0;  // J
  long qubits = 0;      // n (system qubits of the encoded matrix)
};

struct SchurCache;  // internal: cached complex Schur factorization

/// A square complex matrix together with the spectral metadata the
/// detector and search drivers rely on. Matrices with spectral norm
/// above 1 are rescaled by 1/norm on ingestion; `scale` records the factor
/// so callers can map results back.
class SpectralOperand {
 public:
  /// k_bound is an upper bound K on the Jordan condition number (>= 1),
  /// m_max the largest Jordan block size (1 = diagonalizable).
  SpectralOperand(CMatrix matrix, double k_bound, long m_max = 1,
                  bool norm_certified = false);

  /// Convenience: estimates K via jordan_condition_estimate. Throws
  /// DefectiveMatrix when the estimate is unreliable.
  static SpectralOperand with_estimated_k(CMatrix matrix);

  const CMatrix& matrix() const { return matrix_; }
  long dim() const { return matrix_.rows(); }
  double k_bound() const { return k_bound_; }
  long m_max() const { return m_max_; }
  bool diagonalizable() const { return m_max_ == 1; }
  bool norm_certified() const { return norm_certified_; }
  /// Factor the original matrix was divided by (1.0 when none).
  double scale() const { return scale_; }

  std::optional<BlockEncodingProvenance> provenance() const { return provenance_; }
  void set_provenance(BlockEncodingProvenance p) { provenance_ = p; }

  /// Internal fast path for threshold tests on sigma_min(A - mu I).
  const SchurCache& schur() const;

  /// Eigenvalues read off the Schur triangular factor.
  CVector schur_eigenvalues() const;

 private:
  CMatrix matrix_;
  double k_bound_;
  long m_max_;
  bool norm_certified_;
  double scale_ = 1.0;
  std::optional<BlockEncodingProvenance> provenance_;
  mutable std::shared_ptr<SchurCache> schur_;
};

/// Eigendecomposition result. Eigenvector columns, when present, are
/// normalized to unit Euclidean norm.
struct Spectrum {
  CVector eigenvalues;
  std::optional<CMatrix> eigenvectors;
  bool diagonalizable = true;
};

/// Largest singular value. Throws InvalidMatrix on bad input.
double spectral_norm(const CMatrix& m);

/// sigma_min(A - mu I), the detector cost function C(mu).
double sigma_min_shifted(const SpectralOperand& op, Complex mu);

/// cond_2 of the computed eigenvector matrix: an upper-bound estimate of
/// the Jordan condition number. Throws DefectiveMatrix when the estimate
/// exceeds 1e12 (numerically defective input).
double jordan_condition_estimate(const CMatrix& m);

/// Norm of the projection of psi onto the right-singular subspace of
/// A - mu I with singular values <= eps. psi must be unit-norm.
double low_sv_overlap(const SpectralOperand& op, Complex mu, double eps,
                      const CVector& psi);

/// Decides sigma_min(A - mu I) <= cut without a full SVD when possible:
/// Weyl shortcut on the Schur diagonal, then inverse iteration on the
/// cached triangular factor, with an exact SVD fallback near the cut.
bool sigma_min_below(const SpectralOperand& op, Complex mu, double cut);

/// Right-singular vector of A - mu I with the smallest singular value.
CVector smallest_right_singular_vector(const SpectralOperand& op, Complex mu);

}  // namespace nhgap

#endif  // NHGAP_LINALG_HPP
