// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nhgap/cmatrix.hpp"
#include "nhgap/errors.hpp"

using namespace nhgap;

TEST_CASE("entry parsing accepts the documented forms") {
  CHECK(parse_complex_entry("1") == Complex(1.0, 0.0));
  CHECK(parse_complex_entry("-2.5") == Complex(-2.5, 0.0));
  CHECK(parse_complex_entry("2j") == Complex(0.0, 2.0));
  CHECK(parse_complex_entry("-0.5j") == Complex(0.0, -0.5));
  CHECK(parse_complex_entry("0.5-0.25j") == Complex(0.5, -0.25));
  CHECK(parse_complex_entry("0.2+0.3j") == Complex(0.2, 0.3));
  CHECK(parse_complex_entry("1e-3+2e-4j") == Complex(1e-3, 2e-4));
}

TEST_CASE("entry parsing rejects malformed tokens") {
  CHECK_THROWS_AS(parse_complex_entry(""), SchemaError);
  CHECK_THROWS_AS(parse_complex_entry("abc"), SchemaError);
  CHECK_THROWS_AS(parse_complex_entry("1+2"), SchemaError);
  CHECK_THROWS_AS(parse_complex_entry("1+2i"), SchemaError);
  CHECK_THROWS_AS(parse_complex_entry("1jj"), SchemaError);
  CHECK_THROWS_AS(parse_complex_entry("1+2j3"), SchemaError);
}

TEST_CASE("formatting round-trips exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    Complex z(u(rng), u(rng));
    CHECK(parse_complex_entry(format_complex_entry(z)) == z);
  }
}

TEST_CASE("matrix container round-trips exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(5, 5);
  for (long r = 0; r < 5; ++r)
    for (long c = 0; c < 5; ++c) m(r, c) = Complex(u(rng), u(rng));
  std::ostringstream out;
  write_cmatrix(out, m);
  std::istringstream in(out.str());
  CMatrix back = read_cmatrix(in);
  CHECK(back == m);
}

TEST_CASE("container rejects bad headers and truncation") {
  std::istringstream h("matrix 2\n1 0\n0 1\n");
  CHECK_THROWS_AS(read_cmatrix(h), SchemaError);
  std::istringstream n("cmatrix 0\n");
  CHECK_THROWS_AS(read_cmatrix(n), SchemaError);
  std::istringstream t("cmatrix 2\n1 0\n0\n");
  CHECK_THROWS_AS(read_cmatrix(t), SchemaError);
}

TEST_CASE("validate_matrix rejects non-square and non-finite input") {
  CHECK_THROWS_AS(validate_matrix(CMatrix::Zero(2, 3)), InvalidMatrix);
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(validate_matrix(m), InvalidMatrix);
}
