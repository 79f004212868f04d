// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_FILTER_HPP
#define NHGAP_FILTER_HPP

#include <vector>

#include "nhgap/cmatrix.hpp"
#include "nhgap/linalg.hpp"

namespace nhgap {

/// Polynomial approximation of a reversed step on [0, 1]: close to 1 for
/// x <= eps_th, anywhere in [0, 1] on the transition band (eps_th, 2 eps_th],
/// and close to 0 beyond. Certified on a dense grid at construction.
struct PolyFilter {
  std::vector<double> coefficients;  // Chebyshev basis on [-1, 1]
  long degree = 0;                   // odd
  double eps_th = 0.0;
  double delta = 0.0;
};

/// Low-degree approximation of sign(x - (a_h+b_h)/2) on [0, a_h] u [b_h, 1]
/// with max error <= 2/3. Monomial coefficients, constant term first.
struct SignPoly {
  std::vector<double> coefficients;
  long degree = 0;
  double a_h = 0.0;
  double b_h = 0.0;
  double coeff_l1 = 0.0;  // sum of |alpha_j| over all terms
};

/// Builds and certifies the step filter. Degree doubles until a 2048-point
/// per-branch grid check passes; degrees beyond 1e5 raise
/// FilterSynthesisFailure.
PolyFilter build_heaviside_filter(double eps_th, double delta);

/// Clenshaw evaluation. x must lie in [-1, 1].
double eval_filter(const PolyFilter& f, double x);

/// Grid re-certification of the three branch bounds; used by tests and the
/// filter-check CLI command.
bool certify_filter(const PolyFilter& f, long grid_per_branch = 2048);

/// Poly(A~) = sum_j f(sigma_j) |u_j><v_j| for the SVD of (A - mu I)/(1+|mu|).
CMatrix apply_filter_to_operand(const PolyFilter& f, const SpectralOperand& op,
                                Complex mu);

/// Minimal-degree certified sign approximation for the interval pair
/// ([0, a_h], [b_h, 1]).
SignPoly build_sign_poly(double a_h, double b_h);

double eval_sign_poly(const SignPoly& sp, double x);

/// A = i C^-1 (I - f(H)) with C = 1 + coeff_l1; Hermitian H with spectrum in
/// [0, 1] maps to a purely imaginary-spectrum operand with the same
/// eigenvectors and Jordan condition number 1.
SpectralOperand bqp_reduction_map(const CMatrix& h, const SignPoly& sp);

}  // namespace nhgap

#endif  // NHGAP_FILTER_HPP
