// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_ORACLE_HPP
#define NHGAP_ORACLE_HPP

#include <optional>

#include "nhgap/cmatrix.hpp"
#include "nhgap/linalg.hpp"

namespace nhgap {

/// Brute-force ground truth used by property tests and acceptance checks.
/// Solver outputs are judged against this, never the other way round.
struct OracleResult {
  Spectrum spectrum;
  double line_gap = 0.0;      // min_j |Im lambda_j| (over the kept eigenvalues)
  double point_gap = 0.0;     // min_j |lambda_j|
  std::optional<double> abs_gap;  // 1 - second largest modulus, when defined
  double max_abs_im = 0.0;
};

struct OracleOptions {
  /// Eigenvalues with |Im| <= line_exclusion are ignored for line_gap
  /// (steady states of a Liouvillian sit on the reference line).
  double line_exclusion = 0.0;
  /// Compute abs_gap treating the matrix as stochastic-like: eigenvalues
  /// within abs_gap_tol of the top modulus are excluded from the max.
  bool stochastic = false;
  double abs_gap_tol = 1e-9;
};

OracleResult oracle_solve(const CMatrix& m, const OracleOptions& opts = {});

/// Full eigendecomposition with normalized eigenvector columns.
Spectrum eigensolve(const CMatrix& m);

}  // namespace nhgap

#endif  // NHGAP_ORACLE_HPP
