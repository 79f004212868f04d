// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_COVERING_HPP
#define NHGAP_COVERING_HPP

#include <vector>

#include "nhgap/cmatrix.hpp"

namespace nhgap {

/// M equally spaced points on the circle |z| = R, M = ceil(2*pi / atan(s/2R)),
/// so adjacent chords stay below s and detector disks of radius ~s cover the
/// circle.
struct RingCover {
  double radius = 0.0;
  double spacing = 0.0;
  long count = 0;
  std::vector<Complex> points;
};

/// Lattice {0, +-delta, ..., +-N*delta} + i*height with N = ceil(1/delta),
/// covering real parts [-1, 1] with gaps <= delta.
struct LineCover {
  double height = 0.0;
  double spacing = 0.0;
  long count = 0;
  std::vector<Complex> points;
};

/// Hexagonal lattice clipped to D(center, D + cell); disks of radius `cell`
/// around the points cover D(center, D).
struct NetCover {
  Complex center;
  double radius = 0.0;
  double cell = 0.0;
  std::vector<Complex> points;
};

RingCover ring_cover(double R, double s);
LineCover line_cover(double height, double delta);
/// Throws CoverTooLarge past 1e7 points.
NetCover net_cover(Complex center, double D, double cell);

}  // namespace nhgap

#endif  // NHGAP_COVERING_HPP
