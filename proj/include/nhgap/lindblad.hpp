// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_LINDBLAD_HPP
#define NHGAP_LINDBLAD_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhgap/cmatrix.hpp"
#include "nhgap/search.hpp"

namespace nhgap {

/// A Pauli word with an attached quarter-turn phase i^phase.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  std::string word;  // letters over {I, X, Y, Z}
  int phase = 0;     // phase exponent, value in {0, 1, 2, 3}
};

/// H = sum_j alpha_j V_j and jump operators L_mu = sum_j sqrt(alpha_mu_j) V_mu_j,
/// all V given as phased Pauli words on n qubits.
struct LindbladSpec {
  long n = 0;
  std::vector<std::pair<double, PauliTerm>> hamiltonian;
  std::vector<std::vector<std::pair<double, PauliTerm>>> dissipators;
};

/// The vectorized generator as a length-2n Pauli LCU: L~ = sum_j beta_j i^{p_j} W_j
/// with beta_j > 0, plus the dense matrix for n <= 6.
struct VectorizedLiouvillian {
  long n = 0;
  std::vector<std::pair<double, PauliTerm>> terms;
  double c_tilde = 0.0;
  std::optional<CMatrix> dense;
};

struct LcuCostRecord {
  long term_count = 0;
  long qubits = 0;  // of the vectorized system, 2n
  double c_be = 0.0;
};

/// Row-major vectorization of the generator. Duplicate Pauli words are
/// merged before normalization. The dense matrix is materialized only for
/// n <= 6; the term list is always populated.
VectorizedLiouvillian vectorize(const LindbladSpec& spec);

/// LCU normalization constant the C~ <= 2C bound is stated against:
/// sum_j alpha_0j + sum_mu (sum_j sqrt(alpha_mu_j))^2.
double lcu_normalization(const LindbladSpec& spec);

LcuCostRecord modeled_block_encoding_cost(const VectorizedLiouvillian& v);

/// Dense matrix of a phased Pauli word.
CMatrix dense_pauli(const PauliTerm& t);

/// Direct superoperator action L(rho), used as the vectorization oracle.
CMatrix apply_lindblad(const LindbladSpec& spec, const CMatrix& rho);

/// Distance from the non-steady spectrum of the generator to the imaginary
/// axis. Reported bracket and estimate are in unscaled generator units.
GapReport liouvillian_gap(const LindbladSpec& spec, double eps,
                          const FqedConfig& cfg,
                          std::optional<double> k_bound = std::nullopt,
                          std::optional<long> m_max = std::nullopt);

/// Strict JSON ingestion: {"n": int, "hamiltonian": [term...],
/// "dissipators": [[term...], ...]} with term = {"coeff", "pauli", "phase"}.
/// Unknown keys are rejected with SchemaError.
LindbladSpec parse_lindblad_spec(const std::string& text);
LindbladSpec read_lindblad_file(const std::string& path);

}  // namespace nhgap

#endif  // NHGAP_LINDBLAD_HPP
