// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nhgap/errors.hpp"
#include "nhgap/oracle.hpp"

using namespace nhgap;

TEST_CASE("gaps of a known diagonal matrix") {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = Complex(0.3, 0.4);
  m(1, 1) = Complex(-0.1, 0.2);
  m(2, 2) = Complex(0.6, -0.7);
  OracleResult r = oracle_solve(m);
  CHECK(r.line_gap == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(r.point_gap == doctest::Approx(std::hypot(0.1, 0.2)).epsilon(1e-9));
  CHECK(r.max_abs_im == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("line exclusion masks eigenvalues on the reference line") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = Complex(0.1, 1e-14);
  m(1, 1) = Complex(0.0, 0.5);
  OracleOptions opts;
  opts.line_exclusion = 1e-6;
  OracleResult r = oracle_solve(m, opts);
  CHECK(r.line_gap == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("stochastic mode reports the absolute gap") {
  CMatrix p = CMatrix::Zero(2, 2);
  p(0, 0) = 0.7; p(0, 1) = 0.3;
  p(1, 0) = 0.2; p(1, 1) = 0.8;
  OracleOptions opts;
  opts.stochastic = true;
  OracleResult r = oracle_solve(p, opts);
  REQUIRE(r.abs_gap.has_value());
  CHECK(*r.abs_gap == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("eigensolve flags numerically defective input") {
  CMatrix j = CMatrix::Zero(2, 2);
  j(0, 0) = j(1, 1) = 0.5;
  j(0, 1) = 1.0;
  Spectrum s = eigensolve(j);
  CHECK_FALSE(s.diagonalizable);
}

TEST_CASE("eigensolve normalizes eigenvector columns") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g(0.0, 0.3);
  CMatrix m(6, 6);
  for (long r = 0; r < 6; ++r)
    for (long c = 0; c < 6; ++c) m(r, c) = Complex(g(rng), g(rng));
  Spectrum s = eigensolve(m);
  REQUIRE(s.eigenvectors.has_value());
  for (long c = 0; c < 6; ++c) {
    CHECK(s.eigenvectors->col(c).norm() == doctest::Approx(1.0).epsilon(1e-9));
    // Residual check: A v = lambda v.
    CHECK((m * s.eigenvectors->col(c) -
           s.eigenvalues(c) * s.eigenvectors->col(c))
              .norm() < 1e-9);
  }
}
