// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nhgap/covering.hpp"
#include "nhgap/errors.hpp"

using namespace nhgap;

TEST_CASE("ring cover keeps adjacent chords below the spacing") {
  for (double R : {0.3, 1.0}) {
    for (double s : {0.01, 0.1}) {
      RingCover rc = ring_cover(R, s);
      CHECK(rc.count == static_cast<long>(rc.points.size()));
      for (long k = 0; k < rc.count; ++k) {
        CHECK(std::abs(std::abs(rc.points[k]) - R) < 1e-12);
        Complex next = rc.points[(k + 1) % rc.count];
        CHECK(std::abs(next - rc.points[k]) <= s + 1e-12);
      }
    }
  }
}

TEST_CASE("ring cover catches every point of the circle") {
  RingCover rc = ring_cover(0.7, 0.05);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  for (int t = 0; t < 500; ++t) {
    Complex z = 0.7 * std::exp(Complex(0.0, u(rng)));
    double best = 1e300;
    for (const Complex& p : rc.points) best = std::min(best, std::abs(z - p));
    CHECK(best <= 0.05 / 2.0 + 1e-12);
  }
}

TEST_CASE("line cover spans [-1, 1] most-negative first") {
  LineCover lc = line_cover(0.25, 0.1);
  CHECK(lc.points.front().real() <= -1.0);
  CHECK(lc.points.back().real() >= 1.0);
  for (size_t k = 0; k + 1 < lc.points.size(); ++k) {
    CHECK(lc.points[k].real() < lc.points[k + 1].real());
    CHECK(lc.points[k + 1].real() - lc.points[k].real() <= 0.1 + 1e-12);
    CHECK(lc.points[k].imag() == 0.25);
  }
}

TEST_CASE("net cover puts a point within one cell of any disk point") {
  Complex c(0.2, -0.1);
  NetCover nc = net_cover(c, 0.5, 0.06);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  int kept = 0;
  for (int t = 0; t < 2000; ++t) {
    Complex z = c + Complex(u(rng), u(rng));
    if (std::abs(z - c) > 0.5) continue;
    ++kept;
    double best = 1e300;
    for (const Complex& p : nc.points) best = std::min(best, std::abs(z - p));
    CHECK(best <= 0.06 + 1e-12);
  }
  CHECK(kept > 500);
}

TEST_CASE("net cover refuses absurd point counts") {
  CHECK_THROWS_AS(net_cover(Complex(0, 0), 1.0, 1e-5), CoverTooLarge);
}
