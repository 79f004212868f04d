// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/covering.hpp"

#include <cmath>

#include "nhgap/errors.hpp"

namespace nhgap {

RingCover ring_cover(double R, double s) {
  if (!(R > 0.0) || !(s > 0.0)) {
    throw InvalidArgument("ring_cover needs R > 0 and s > 0");
  }
  const double two_pi = 2.0 * M_PI;
  const long m = static_cast<long>(std::ceil(two_pi / std::atan(s / (2.0 * R))));
  RingCover out;
  out.radius = R;
  out.spacing = s;
  out.count = m;
  out.points.reserve(static_cast<size_t>(m));
  for (long k = 1; k <= m; ++k) {
    const double th = two_pi * static_cast<double>(k) / static_cast<double>(m);
    out.points.emplace_back(R * std::cos(th), R * std::sin(th));
  }
  return out;
}

LineCover line_cover(double height, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("line_cover needs delta > 0");
  const long n = static_cast<long>(std::ceil(1.0 / delta));
  LineCover out;
  out.height = height;
  out.spacing = delta;
  out.count = 2 * n + 1;
  out.points.reserve(static_cast<size_t>(out.count));
  // Most negative real part first; the search drivers' tie-breaking
  // (first True wins) depends on this ordering.
  for (long k = -n; k <= n; ++k) {
    out.points.emplace_back(static_cast<double>(k) * delta, height);
  }
  return out;
}

NetCover net_cover(Complex center, double D, double cell) {
  if (!(D > 0.0) || !(cell > 0.0) || cell > D) {
    throw InvalidArgument("net_cover needs 0 < cell <= D");
  }
  // Hexagonal covering lattice: rows pitch (3/2)*a apart, points a*sqrt(3)
  // apart within a row, covering radius a. Shrink a hair so floating-point
  // boundary points stay covered.
  const double a = cell * (1.0 - 1e-6);
  const double row_pitch = 1.5 * a;
  const double col_pitch = std::sqrt(3.0) * a;
  const double clip = D + cell;
  const long rows = static_cast<long>(std::ceil(clip / row_pitch)) + 1;
  const long cols = static_cast<long>(std::ceil(clip / col_pitch)) + 1;
  const double expect =
      (2.0 * static_cast<double>(rows) + 1.0) * (2.0 * static_cast<double>(cols) + 2.0);
  if (expect > 1e7) throw CoverTooLarge("net cover would exceed 1e7 points");

  NetCover out;
  out.center = center;
  out.radius = D;
  out.cell = cell;
  for (long r = -rows; r <= rows; ++r) {
    const double y = static_cast<double>(r) * row_pitch;
    const double xoff = (r % 2 == 0) ? 0.0 : 0.5 * col_pitch;
    for (long c = -cols; c <= cols; ++c) {
      const double x = static_cast<double>(c) * col_pitch + xoff;
      if (x * x + y * y <= clip * clip) {
        out.points.emplace_back(center.real() + x, center.imag() + y);
      }
    }
  }
  if (out.points.size() > size_t(1e7)) {
    throw CoverTooLarge("net cover exceeds 1e7 points");
  }
  return out;
}

}  // namespace nhgap
