// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_SEARCH_HPP
#define NHGAP_SEARCH_HPP

#include <utility>
#include <vector>

#include "nhgap/cmatrix.hpp"
#include "nhgap/fqed.hpp"
#include "nhgap/linalg.hpp"

namespace nhgap {

inline constexpr long kIterationCap = 1000000;
inline constexpr long kQueryCap = 10000000;

/// Region the search has narrowed the answer down to. Intervals and annuli
/// are stored as (lo, hi); disks carry a center and radius.
struct GuessRegion {
  enum class Kind { Interval, Annulus, Disk };
  Kind kind = Kind::Interval;
  double lo = 0.0;
  double hi = 0.0;
  Complex center;
  double radius = 0.0;

  static GuessRegion interval(double lo, double hi);
  static GuessRegion annulus(double r_min, double r_max);
  static GuessRegion disk(Complex center, double radius);
  double width() const;
};

struct TraceRow {
  long index = 0;
  double region_lo = 0.0;
  double region_hi = 0.0;
  long covering_size = 0;
  bool verdict = false;  // any detector fired this iteration
  long cumulative_queries = 0;
};

struct GapReport {
  Complex estimate;
  GuessRegion bracket;
  long fqed_queries = 0;  // detector invocations issued
  ModeledCost modeled_cost;
  long iterations = 0;
  std::vector<TraceRow> trace;
};

struct LineGapOptions {
  /// Also scan height -g for spectra without the Im > 0 promise.
  bool mirror = false;
  /// Ignore detector hits at heights <= exclusion (steady-state masking).
  double exclusion = 0.0;
};

/// Distance from the spectrum to the real axis, assuming Im(lambda) > eps
/// for every eigenvalue. Estimate is the last detector hit; its imaginary
/// part is within eps of the true gap.
GapReport line_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg,
                   const LineGapOptions& opts = {});

/// Distance from the spectrum to the origin, bracketed to width <= eps.
GapReport point_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg);

/// One annulus-shrinking step of the point-gap search: scans a ring of
/// detectors at the inner radius. True narrows the annulus to (lo, lo + r);
/// False advances the inner radius by nu(r)/2.
std::pair<GuessRegion, bool> ers_ring(const SpectralOperand& op,
                                      const GuessRegion& region, double r,
                                      const FqedConfig& cfg,
                                      long* queries = nullptr);

/// Unconstrained eigenvalue location: disk halving with hexagonal detector
/// nets until the radius drops below eps.
GapReport eig_search(const SpectralOperand& op, double eps, const FqedConfig& cfg);

/// Same, for operands promised to have a real spectrum: 1-D lattices
/// replace the nets.
GapReport eig_search_real(const SpectralOperand& op, double eps,
                          const FqedConfig& cfg);

/// Signed distance from a real spectrum to the origin: two detector probes
/// per step at +-R_a; the returned estimate carries the sign of the side
/// that fired.
GapReport real_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg);

/// True when some eigenvalue has |Im| >= eps; False when all |Im| <= eps/2;
/// unspecified between.
bool pt_witness(const SpectralOperand& op, double eps, const FqedConfig& cfg);

/// Absolute spectral gap 1 - |lambda_2| of a row-stochastic matrix, promised
/// to be at least delta_promise. alpha must dominate the spectral norm so
/// the scaled matrix is a valid operand.
GapReport markov_abs_gap(const CMatrix& stoch, double alpha,
                         double delta_promise, double eps,
                         const FqedConfig& cfg);

/// Distinguishes max Im(lambda) >= eps (returns true) from <= eps/2
/// (returns false) for purely-imaginary-spectrum operands, given a guide
/// state overlapping a large-Im eigenvector by at least 2*gamma.
bool decide_spectrum_reality(const SpectralOperand& op, double eps,
                             const CVector& guide, double gamma,
                             const FqedConfig& cfg);

}  // namespace nhgap

#endif  // NHGAP_SEARCH_HPP
