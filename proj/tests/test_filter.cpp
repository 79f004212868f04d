// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "nhgap/errors.hpp"
#include "nhgap/filter.hpp"
#include "nhgap/oracle.hpp"

using namespace nhgap;

TEST_CASE("step filter certifies across the parameter grid") {
  for (double eps_th : {0.05, 0.1, 0.25}) {
    for (double delta : {0.1, 0.01}) {
      PolyFilter f = build_heaviside_filter(eps_th, delta);
      CHECK(certify_filter(f));
      CHECK(f.degree % 2 == 1);
      CHECK(eval_filter(f, 0.0) >= 1.0 - delta);
      CHECK(eval_filter(f, eps_th) >= 1.0 - delta);
      CHECK(eval_filter(f, 2.0 * eps_th + 1e-9) <= delta);
      CHECK(eval_filter(f, 1.0) <= delta);
    }
  }
}

TEST_CASE("filter degree grows as the threshold halves") {
  PolyFilter coarse = build_heaviside_filter(0.2, 0.01);
  PolyFilter fine = build_heaviside_filter(0.1, 0.01);
  PolyFilter finer = build_heaviside_filter(0.05, 0.01);
  CHECK(fine.degree >= coarse.degree);
  CHECK(finer.degree > coarse.degree);
}

TEST_CASE("eval_filter rejects points outside the domain") {
  PolyFilter f = build_heaviside_filter(0.1, 0.1);
  CHECK_THROWS_AS(eval_filter(f, 1.5), InvalidArgument);
  CHECK_THROWS_AS(eval_filter(f, -1.5), InvalidArgument);
}

TEST_CASE("applying the filter acts on shifted singular values") {
  // Hermitian diagonal: singular values of A - mu I are |d_j - mu|.
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.30;
  m(1, 1) = 0.32;
  m(2, 2) = 0.90;
  SpectralOperand op(m, 1.0);
  PolyFilter f = build_heaviside_filter(0.05 / 1.3, 0.01);
  CMatrix poly = apply_filter_to_operand(f, op, Complex(0.3, 0.0));
  CVector e0 = CVector::Zero(3); e0(0) = 1.0;
  CVector e2 = CVector::Zero(3); e2(2) = 1.0;
  CHECK((poly * e0).norm() >= 0.99);   // sigma 0 maps near 1
  CHECK((poly * e2).norm() <= 0.01);   // sigma 0.6/1.3 maps near 0
}

TEST_CASE("sign polynomial for the reference interval pair") {
  SignPoly sp = build_sign_poly(0.2, 0.6);
  CHECK(sp.degree % 2 == 1);
  CHECK(sp.coeff_l1 < 6.0);
  for (double x = 0.0; x <= 0.2; x += 0.01) {
    CHECK(std::abs(eval_sign_poly(sp, x) - (-1.0)) <= 2.0 / 3.0 + 1e-9);
  }
  for (double x = 0.6; x <= 1.0; x += 0.01) {
    CHECK(std::abs(eval_sign_poly(sp, x) - 1.0) <= 2.0 / 3.0 + 1e-9);
  }
}

TEST_CASE("reduction map produces a purely imaginary spectrum") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix r(8, 8);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j) r(i, j) = Complex(g(rng), g(rng));
  CMatrix herm = 0.5 * (r + r.adjoint());
  // Compress the spectrum into [0, 1].
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  double lo = es.eigenvalues()(0), hi = es.eigenvalues()(7);
  CMatrix h = (herm - lo * CMatrix::Identity(8, 8)) / (hi - lo);

  SignPoly sp = build_sign_poly(0.2, 0.6);
  SpectralOperand op = bqp_reduction_map(h, sp);
  CHECK(op.k_bound() == 1.0);
  Spectrum s = eigensolve(op.matrix());
  const double c = 1.0 + sp.coeff_l1;
  for (long j = 0; j < 8; ++j) {
    CHECK(std::abs(s.eigenvalues(j).real()) < 1e-9);
    // Spectrum of i C^-1 (I - f(H)): heights (1 - f(lambda)) / C.
    CHECK(s.eigenvalues(j).imag() >= -1e-12);
    CHECK(s.eigenvalues(j).imag() <= (1.0 + 2.0 / 3.0 + 1e-6) / c + 1e-9);
  }
}

TEST_CASE("reduction map rejects non-Hermitian or out-of-range input") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  SignPoly sp = build_sign_poly(0.2, 0.6);
  CHECK_THROWS_AS(bqp_reduction_map(m, sp), InvalidMatrix);
  CMatrix big = 2.0 * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(bqp_reduction_map(big, sp), InvalidMatrix);
}
