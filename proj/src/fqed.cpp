// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/fqed.hpp"

#include <cmath>
#include <random>

#include "nhgap/errors.hpp"

namespace nhgap {

NuThreshold nu(double r, const SpectralOperand& op) {
  if (!(r > 0.0)) throw InvalidArgument("nu radius must be positive");
  if (r > 3.0) throw InvalidArgument("nu radius must be <= 3");
  NuThreshold t;
  t.r = r;
  t.m_max = op.m_max();
  t.k_bound = op.k_bound();
  if (t.m_max == 1) {
    t.value = r / (2.0 * t.k_bound);
  } else {
    t.value = std::pow(r / 3.0, static_cast<double>(t.m_max)) / (2.0 * t.k_bound);
  }
  return t;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the combined word.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void check_common(const SpectralOperand& op, Complex mu, double eps_th,
                  const FqedConfig& cfg) {
  (void)op;
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()) || std::abs(mu) > 3.0) {
    throw InvalidArgument("detector center out of range");
  }
  if (!(eps_th > 0.0) || !(eps_th < 0.5)) {
    throw InvalidArgument("eps_th must lie in (0, 0.5)");
  }
  if (!(cfg.delta > 0.0) || cfg.delta >= 0.5) {
    throw InvalidArgument("delta must lie in (0, 0.5)");
  }
  if (cfg.backend == FqedBackend::Filtered) {
    if (!(cfg.gamma > 0.0) || cfg.gamma > 1.0) {
      throw InvalidArgument("gamma must lie in (0, 1]");
    }
    if (cfg.noise == NoiseMode::Sampled && cfg.shots < 1) {
      throw InvalidArgument("sampled mode needs shots >= 1");
    }
  }
}

ModeledCost model_cost(const SpectralOperand& op, double eps_th, double gamma) {
  ModeledCost mc;
  if (auto p = op.provenance()) {
    mc.modeled = true;
    const double n = static_cast<double>(p->qubits);
    mc.c_be = static_cast<double>(p->term_count) * n;
    mc.c_sp = n;
    mc.total = (1.0 / gamma) * ((1.0 / eps_th) * (mc.c_be + n) + mc.c_sp);
  }
  return mc;
}

CVector prepare_state(const SpectralOperand& op, Complex mu,
                      const FqedConfig& cfg) {
  switch (cfg.state_source) {
    case StateSource::SingularVectorOracle:
      return smallest_right_singular_vector(op, mu);
    case StateSource::UserVector: {
      if (!cfg.user_vector) throw InvalidState("user state vector not supplied");
      const CVector& v = *cfg.user_vector;
      if (v.size() != op.dim()) throw InvalidState("state dimension mismatch");
      if (std::abs(v.norm() - 1.0) > 1e-8) throw InvalidState("state must be unit-norm");
      return v;
    }
    case StateSource::Uniform: {
      CVector v = CVector::Constant(op.dim(), Complex(1.0, 0.0));
      v /= std::sqrt(static_cast<double>(op.dim()));
      return v;
    }
  }
  throw InternalError("unknown state source");
}

FqedOutcome fqed_seeded(const SpectralOperand& op, Complex mu, double eps_th,
                        const FqedConfig& cfg, std::uint64_t sub_seed) {
  check_common(op, mu, eps_th, cfg);
  FqedOutcome out;
  if (cfg.backend == FqedBackend::Exact) {
    out.verdict = sigma_min_below(op, mu, 1.5 * eps_th);
    out.modeled_cost = model_cost(op, eps_th, cfg.gamma);
    return out;
  }

  const double scale = 1.0 + std::abs(mu);
  PolyFilter filter = build_heaviside_filter(eps_th / scale, cfg.delta);
  CVector psi = prepare_state(op, mu, cfg);
  const double amplitude = (apply_filter_to_operand(filter, op, mu) * psi).norm();
  out.amplitude = amplitude;

  const long reps = static_cast<long>(
      std::ceil(std::log(1.0 / cfg.delta) / cfg.gamma));
  out.queries_be = filter.degree * reps;
  out.queries_sp = reps;

  const double threshold = cfg.gamma * (1.0 - cfg.delta) / 2.0;
  if (cfg.noise == NoiseMode::Deterministic) {
    out.verdict = amplitude >= threshold;
  } else {
    std::mt19937_64 rng(sub_seed);
    std::bernoulli_distribution hit(std::min(1.0, amplitude * amplitude));
    long count = 0;
    for (long s = 0; s < cfg.shots; ++s) count += hit(rng) ? 1 : 0;
    const double freq = static_cast<double>(count) / static_cast<double>(cfg.shots);
    out.verdict = freq >= threshold * threshold;
  }
  return out;
}

}  // namespace

FqedOutcome fqed(const SpectralOperand& op, Complex mu, double eps_th,
                 const FqedConfig& cfg) {
  return fqed_seeded(op, mu, eps_th, cfg, derive_seed(cfg.seed, 0));
}

std::vector<FqedOutcome> fqed_batch(const SpectralOperand& op,
                                    const std::vector<Complex>& centers,
                                    double eps_th, const FqedConfig& cfg,
                                    bool early_exit) {
  if (centers.empty()) throw InvalidArgument("empty detector batch");
  std::vector<FqedOutcome> out(centers.size());
  for (size_t i = 0; i < centers.size(); ++i) {
    out[i] = fqed_seeded(op, centers[i], eps_th, cfg, derive_seed(cfg.seed, i));
    if (early_exit && out[i].verdict) {
      for (size_t j = i + 1; j < centers.size(); ++j) out[j].evaluated = false;
      break;
    }
  }
  return out;
}

}  // namespace nhgap
