// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_FQED_HPP
#define NHGAP_FQED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nhgap/cmatrix.hpp"
#include "nhgap/filter.hpp"
#include "nhgap/linalg.hpp"

namespace nhgap {

enum class FqedBackend { Exact, Filtered };
enum class StateSource { SingularVectorOracle, UserVector, Uniform };
enum class NoiseMode { Deterministic, Sampled };

struct FqedConfig {
  FqedBackend backend = FqedBackend::Exact;
  double delta = 1e-3;   // failure probability budget per query
  double gamma = 0.5;    // promised low-singular-subspace overlap (Filtered)
  StateSource state_source = StateSource::SingularVectorOracle;
  std::optional<CVector> user_vector;
  NoiseMode noise = NoiseMode::Deterministic;
  long shots = 1;        // Sampled mode only
  std::uint64_t seed = 0;
};

/// Gate-count model for one detector invocation; block-encoding cost comes
/// from the operand's provenance when it has one.
struct ModeledCost {
  bool modeled = false;
  double c_be = 0.0;
  double c_sp = 0.0;
  double total = 0.0;
};

struct FqedOutcome {
  bool verdict = false;
  long queries_be = 0;
  long queries_sp = 0;
  std::optional<double> amplitude;  // Filtered backend diagnostic
  std::optional<ModeledCost> modeled_cost;
  bool evaluated = true;  // false for entries skipped by early exit
};

struct NuThreshold {
  double r = 0.0;
  long m_max = 1;
  double k_bound = 1.0;
  double value = 0.0;
};

/// Detection threshold for radius r: r/2K when diagonalizable, the Jordan
/// blow-up (r/3)^m_max / 2K otherwise.
NuThreshold nu(double r, const SpectralOperand& op);

/// Boolean eigenvalue detector at center mu with threshold eps_th.
/// Guarantees: True whenever some eigenvalue lies within eps_th of mu;
/// False whenever sigma_min(A - mu I) > 2 eps_th. Verdicts in between are
/// unspecified.
FqedOutcome fqed(const SpectralOperand& op, Complex mu, double eps_th,
                 const FqedConfig& cfg);

/// Element-wise fqed over centers. With early_exit the scan stops at the
/// first True; the remaining outcomes carry evaluated = false.
std::vector<FqedOutcome> fqed_batch(const SpectralOperand& op,
                                    const std::vector<Complex>& centers,
                                    double eps_th, const FqedConfig& cfg,
                                    bool early_exit = false);

/// Deterministic per-center sub-seed so parallel and serial batch runs agree.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nhgap

#endif  // NHGAP_FQED_HPP
