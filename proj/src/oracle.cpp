// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "nhgap/errors.hpp"

namespace nhgap {

Spectrum eigensolve(const CMatrix& m) {
  validate_matrix(m);
  if (m.rows() > 4096) throw DimensionTooLarge("oracle limited to N <= 4096");
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw DecompositionFailure("oracle eigensolver did not converge");
  }
  Spectrum s;
  s.eigenvalues = es.eigenvalues();
  CMatrix v = es.eigenvectors();
  for (long j = 0; j < v.cols(); ++j) v.col(j).normalize();
  Eigen::JacobiSVD<CMatrix> svd(v);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  s.diagonalizable = smin > 0.0 && sv(0) / smin < kDefectiveCondCutoff;
  s.eigenvectors = std::move(v);
  return s;
}

OracleResult oracle_solve(const CMatrix& m, const OracleOptions& opts) {
  OracleResult out;
  out.spectrum = eigensolve(m);
  const CVector& ev = out.spectrum.eigenvalues;

  double line = std::numeric_limits<double>::infinity();
  double point = std::numeric_limits<double>::infinity();
  double top = 0.0;
  for (long j = 0; j < ev.size(); ++j) {
    const double im = std::abs(ev(j).imag());
    if (im > opts.line_exclusion) line = std::min(line, im);
    point = std::min(point, std::abs(ev(j)));
    top = std::max(top, std::abs(ev(j)));
    out.max_abs_im = std::max(out.max_abs_im, im);
  }
  out.line_gap = std::isinf(line) ? 0.0 : line;
  out.point_gap = point;

  if (opts.stochastic) {
    double second = 0.0;
    for (long j = 0; j < ev.size(); ++j) {
      const double a = std::abs(ev(j));
      if (a < top - opts.abs_gap_tol) second = std::max(second, a);
    }
    out.abs_gap = top - second;
  }
  return out;
}

}  // namespace nhgap
