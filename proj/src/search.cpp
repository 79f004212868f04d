// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <vector>

#include "nhgap/covering.hpp"
#include "nhgap/errors.hpp"

namespace nhgap {

GuessRegion GuessRegion::interval(double lo, double hi) {
  GuessRegion g;
  g.kind = Kind::Interval;
  g.lo = lo;
  g.hi = hi;
  return g;
}

GuessRegion GuessRegion::annulus(double r_min, double r_max) {
  GuessRegion g;
  g.kind = Kind::Annulus;
  g.lo = r_min;
  g.hi = r_max;
  return g;
}

GuessRegion GuessRegion::disk(Complex center, double radius) {
  GuessRegion g;
  g.kind = Kind::Disk;
  g.center = center;
  g.radius = radius;
  return g;
}

double GuessRegion::width() const {
  return kind == Kind::Disk ? 2.0 * radius : hi - lo;
}

namespace {

// Largest eigenvalue distance at which a detector with threshold eps_th can
// still return True: sigma_min >= dist/K (diagonalizable) or the Jordan
// power-law bound otherwise, against the exact-backend cut. Centers farther
// from the whole spectrum than this are certified False and skipped; the
// scan result is identical to evaluating every detector in order.
double detection_reach(const SpectralOperand& op, double eps_th) {
  const double k = op.k_bound();
  if (op.m_max() == 1) return 2.0 * k * eps_th + 1e-12;
  return 3.0 * std::pow(2.0 * k * eps_th, 1.0 / static_cast<double>(op.m_max())) + 1e-12;
}

double dist_to_spectrum(const CVector& eigs, Complex z) {
  double d = std::numeric_limits<double>::infinity();
  for (long j = 0; j < eigs.size(); ++j) d = std::min(d, std::abs(eigs(j) - z));
  return d;
}

struct ScanHit {
  bool any = false;
  Complex center;
  long modeled = 0;    // queries the early-exit batch would have issued
  ModeledCost cost;
  bool cost_seen = false;
};

// Evaluates the detector at the candidate indices (sorted ascending) of an
// ordered virtual center list of length `total`; all other centers are
// certified False by the distance screen.
ScanHit run_candidates(const SpectralOperand& op, const FqedConfig& cfg,
                       double eps_th,
                       const std::function<Complex(long)>& center_of,
                       long total, std::vector<long>& cand,
                       double im_exclusion = 0.0) {
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  ScanHit out;
  out.modeled = total;
  for (long idx : cand) {
    const Complex c = center_of(idx);
    if (im_exclusion > 0.0 && std::abs(c.imag()) <= im_exclusion) continue;
    FqedConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(idx));
    FqedOutcome o = fqed(op, c, eps_th, sub);
    if (o.modeled_cost && !out.cost_seen) {
      out.cost = *o.modeled_cost;
      out.cost_seen = true;
    }
    if (o.verdict) {
      out.any = true;
      out.center = c;
      out.modeled = idx + 1;
      return out;
    }
  }
  return out;
}

// Candidate indices on the lattice {re0 + i*spacing : i in [0, count)} at
// height h, for centers within `reach` of some eigenvalue.
std::vector<long> lattice_candidates(const CVector& eigs, double re0, double h,
                                     double spacing, long count, double reach) {
  std::vector<long> cand;
  for (long j = 0; j < eigs.size(); ++j) {
    const double dy = eigs(j).imag() - h;
    if (std::abs(dy) > reach) continue;
    const double dx = std::sqrt(std::max(0.0, reach * reach - dy * dy));
    const double x = eigs(j).real();
    long lo = static_cast<long>(std::floor((x - dx - re0) / spacing)) - 1;
    long hi = static_cast<long>(std::ceil((x + dx - re0) / spacing)) + 1;
    lo = std::max(lo, long{0});
    hi = std::min(hi, count - 1);
    for (long i = lo; i <= hi; ++i) cand.push_back(i);
  }
  return cand;
}

// Candidate indices on the ring of M points at angles 2*pi*(k+1)/M, radius R.
std::vector<long> ring_candidates(const CVector& eigs, double R, long M,
                                  double reach) {
  const double step = 2.0 * M_PI / static_cast<double>(M);
  std::vector<long> cand;
  for (long j = 0; j < eigs.size(); ++j) {
    const double rho = std::abs(eigs(j));
    if (std::abs(rho - R) > reach) continue;
    if (rho == 0.0) {
      if (R <= reach) for (long k = 0; k < M; ++k) cand.push_back(k);
      continue;
    }
    const double cosd = (R * R + rho * rho - reach * reach) / (2.0 * R * rho);
    long half;
    if (cosd <= -1.0) {
      half = M;  // whole ring within reach
    } else if (cosd >= 1.0) {
      half = 0;
    } else {
      half = static_cast<long>(std::ceil(std::acos(cosd) / step)) + 1;
    }
    if (half * 2 + 1 >= M) {
      for (long k = 0; k < M; ++k) cand.push_back(k);
      continue;
    }
    const double theta = std::atan2(eigs(j).imag(), eigs(j).real());
    const long k0 = static_cast<long>(std::llround(theta / step)) - 1;
    for (long k = k0 - half; k <= k0 + half + 1; ++k) {
      long kk = ((k % M) + M) % M;
      cand.push_back(kk);
    }
  }
  return cand;
}

void bump_queries(GapReport& rep, long add) {
  rep.fqed_queries += add;
  if (rep.fqed_queries > kQueryCap) {
    throw BudgetExceeded("detector query budget exhausted");
  }
}

void bump_iterations(GapReport& rep) {
  if (++rep.iterations > kIterationCap) {
    throw BudgetExceeded("iteration budget exhausted");
  }
}

void finalize_cost(GapReport& rep, const ScanHit& hit) {
  if (hit.cost_seen && !rep.modeled_cost.modeled) rep.modeled_cost = hit.cost;
}

void scale_cost(GapReport& rep) {
  if (rep.modeled_cost.modeled) {
    rep.modeled_cost.total *= static_cast<double>(rep.fqed_queries);
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
}

}  // namespace

GapReport line_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg,
                   const LineGapOptions& opts) {
  check_eps(eps);
  const double K = op.k_bound();
  const CVector eigs = op.schur_eigenvalues();
  double g_min = eps, g_max = 1.0 + eps;
  GapReport rep;
  bool have = false;
  while (true) {
    bump_iterations(rep);
    const double width = g_max - g_min;
    const double delta = std::min(g_min / (2.0 * K), width / (4.0 * K));
    const double reach = detection_reach(op, delta);
    const long n = static_cast<long>(std::ceil(1.0 / delta));
    const long per_line = 2 * n + 1;
    const long total = opts.mirror ? 2 * per_line : per_line;
    const double re0 = -static_cast<double>(n) * delta;

    auto center_of = [&](long i) {
      const bool lower = i >= per_line;
      const long k = lower ? i - per_line : i;
      return Complex(re0 + static_cast<double>(k) * delta,
                     lower ? -g_min : g_min);
    };
    std::vector<long> cand =
        lattice_candidates(eigs, re0, g_min, delta, per_line, reach);
    if (opts.mirror) {
      auto low = lattice_candidates(eigs, re0, -g_min, delta, per_line, reach);
      for (long i : low) cand.push_back(i + per_line);
    }
    ScanHit hit = run_candidates(op, cfg, delta, center_of, total, cand,
                                 opts.exclusion);
    bump_queries(rep, hit.modeled);
    finalize_cost(rep, hit);
    rep.trace.push_back({rep.iterations, g_min, g_max, total, hit.any,
                         rep.fqed_queries});
    if (hit.any) {
      have = true;
      rep.estimate = hit.center;
      g_max = g_min + 2.0 * K * delta;
      if (g_max - g_min <= eps) break;
    } else {
      g_min += delta / 2.0;
      if (g_max - g_min < 1e-13) {
        if (!have) throw PromiseViolation("no eigenvalue near the scanned band");
        throw InternalError("guess region collapsed after a detection");
      }
    }
  }
  rep.bracket = GuessRegion::interval(g_min, g_max);
  scale_cost(rep);
  return rep;
}

namespace {

struct ErsOut {
  GuessRegion region;
  bool verdict = false;
  ScanHit hit;
  long ring_count = 0;
};

ErsOut ers_impl(const SpectralOperand& op, const CVector& eigs, double r_a,
                double r_b, double r, const FqedConfig& cfg) {
  const NuThreshold t = nu(r, op);
  const long m = static_cast<long>(
      std::ceil(2.0 * M_PI / std::atan(t.value / (2.0 * r_a))));
  const double step = 2.0 * M_PI / static_cast<double>(m);
  auto center_of = [&](long k) {
    const double th = step * static_cast<double>(k + 1);
    return Complex(r_a * std::cos(th), r_a * std::sin(th));
  };
  std::vector<long> cand =
      ring_candidates(eigs, r_a, m, detection_reach(op, t.value));
  ErsOut out;
  out.ring_count = m;
  out.hit = run_candidates(op, cfg, t.value, center_of, m, cand);
  out.verdict = out.hit.any;
  if (out.verdict) {
    out.region = GuessRegion::annulus(r_a, r_a + r);
  } else {
    out.region = GuessRegion::annulus(r_a + t.value / 2.0, r_b);
  }
  return out;
}

}  // namespace

std::pair<GuessRegion, bool> ers_ring(const SpectralOperand& op,
                                      const GuessRegion& region, double r,
                                      const FqedConfig& cfg, long* queries) {
  if (region.kind != GuessRegion::Kind::Annulus) {
    throw InvalidArgument("ers_ring expects an annulus region");
  }
  const double r_a = region.lo, r_b = region.hi;
  if (!(r > 0.0) || r > std::min(r_a, (r_b - r_a) / 2.0) + 1e-12) {
    throw InvalidArgument("ers_ring radius outside (0, min(R_a, width/2)]");
  }
  const CVector eigs = op.schur_eigenvalues();
  ErsOut out = ers_impl(op, eigs, r_a, r_b, r, cfg);
  if (queries) *queries += out.hit.modeled;
  return {out.region, out.verdict};
}

GapReport point_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg) {
  check_eps(eps);
  const CVector eigs = op.schur_eigenvalues();
  double r_a = eps, r_b = 1.0 + eps;
  GapReport rep;
  Complex last_hit;
  bool have = false;

  auto step = [&](double r) {
    ErsOut out = ers_impl(op, eigs, r_a, r_b, r, cfg);
    bump_queries(rep, out.hit.modeled);
    finalize_cost(rep, out.hit);
    rep.trace.push_back({rep.iterations, r_a, r_b, out.ring_count, out.verdict,
                         rep.fqed_queries});
    if (out.verdict) {
      have = true;
      last_hit = out.hit.center;
    }
    r_a = out.region.lo;
    r_b = out.region.hi;
  };

  // Stage 1: grow the inner radius until it dominates half the outer one.
  while (r_a < r_b / 2.0 - 1e-15) {
    bump_iterations(rep);
    if (r_a > 1.0 + eps + 1e-9) {
      throw PromiseViolation("no eigenvalue inside the search annulus");
    }
    step(std::min(r_a, (r_b - r_a) / 2.0));
  }
  // Stage 2: halve the bracket width.
  while (r_b - r_a > eps) {
    bump_iterations(rep);
    step((r_b - r_a) / 2.0);
  }
  (void)have;
  (void)last_hit;
  rep.estimate = Complex(0.5 * (r_a + r_b), 0.0);
  rep.bracket = GuessRegion::annulus(r_a, r_b);
  scale_cost(rep);
  return rep;
}

GapReport eig_search(const SpectralOperand& op, double eps, const FqedConfig& cfg) {
  check_eps(eps);
  const CVector eigs = op.schur_eigenvalues();
  Complex guess(0.0, 0.0);
  double d = 1.0;
  GapReport rep;
  while (d > eps) {
    bump_iterations(rep);
    const NuThreshold t = nu(d / 2.0, op);
    NetCover net = net_cover(guess, d, t.value);
    const double reach = detection_reach(op, t.value);
    std::vector<long> cand;
    for (size_t i = 0; i < net.points.size(); ++i) {
      if (dist_to_spectrum(eigs, net.points[i]) <= reach) {
        cand.push_back(static_cast<long>(i));
      }
    }
    auto center_of = [&](long i) { return net.points[static_cast<size_t>(i)]; };
    ScanHit hit = run_candidates(op, cfg, t.value, center_of,
                                 static_cast<long>(net.points.size()), cand);
    bump_queries(rep, hit.modeled);
    finalize_cost(rep, hit);
    rep.trace.push_back({rep.iterations, guess.real(), guess.imag(),
                         static_cast<long>(net.points.size()), hit.any,
                         rep.fqed_queries});
    if (!hit.any) {
      throw InternalError("eigenvalue net produced no detection");
    }
    guess = hit.center;
    d /= 2.0;
  }
  rep.estimate = guess;
  rep.bracket = GuessRegion::disk(guess, d);
  scale_cost(rep);
  return rep;
}

GapReport eig_search_real(const SpectralOperand& op, double eps,
                          const FqedConfig& cfg) {
  check_eps(eps);
  const double K = op.k_bound();
  const CVector eigs = op.schur_eigenvalues();
  double guess = 0.0;
  double d = 1.0;
  GapReport rep;
  const long side = static_cast<long>(std::ceil(2.0 * K));
  while (d > eps) {
    bump_iterations(rep);
    const double spacing = d / (2.0 * K);
    const double eps_th = d / (4.0 * K);
    const long count = 2 * side + 1;
    const double re0 = guess - static_cast<double>(side) * spacing;
    auto center_of = [&](long i) {
      return Complex(re0 + static_cast<double>(i) * spacing, 0.0);
    };
    std::vector<long> cand = lattice_candidates(
        eigs, re0, 0.0, spacing, count, detection_reach(op, eps_th));
    ScanHit hit = run_candidates(op, cfg, eps_th, center_of, count, cand);
    bump_queries(rep, hit.modeled);
    finalize_cost(rep, hit);
    rep.trace.push_back({rep.iterations, guess - d, guess + d, count, hit.any,
                         rep.fqed_queries});
    if (!hit.any) throw InternalError("real lattice produced no detection");
    guess = hit.center.real();
    d /= 2.0;
  }
  rep.estimate = Complex(guess, 0.0);
  rep.bracket = GuessRegion::interval(guess - d, guess + d);
  scale_cost(rep);
  return rep;
}

GapReport real_gap(const SpectralOperand& op, double eps, const FqedConfig& cfg) {
  check_eps(eps);
  const double K = op.k_bound();
  const CVector eigs = op.schur_eigenvalues();
  double r_a = eps, r_b = 1.0 + eps;
  int sign = 0;
  GapReport rep;
  while (true) {
    bump_iterations(rep);
    const double width = r_b - r_a;
    const double r = width > r_a ? r_a : width / 2.0;
    const double eps_th = r / (2.0 * K);
    const double reach = detection_reach(op, eps_th);
    auto center_of = [&](long i) {
      return Complex(i == 0 ? r_a : -r_a, 0.0);
    };
    std::vector<long> cand;
    if (dist_to_spectrum(eigs, Complex(r_a, 0.0)) <= reach) cand.push_back(0);
    if (dist_to_spectrum(eigs, Complex(-r_a, 0.0)) <= reach) cand.push_back(1);
    ScanHit hit = run_candidates(op, cfg, eps_th, center_of, 2, cand);
    bump_queries(rep, hit.modeled);
    finalize_cost(rep, hit);
    rep.trace.push_back({rep.iterations, r_a, r_b, 2, hit.any, rep.fqed_queries});
    if (hit.any) {
      sign = hit.center.real() >= 0.0 ? 1 : -1;
      r_b = r_a + r;
      if (r_b - r_a <= eps) break;
    } else {
      r_a += eps_th / 2.0;
      if (r_b - r_a < 1e-13) {
        if (sign == 0) throw PromiseViolation("no real eigenvalue in range");
        throw InternalError("bracket collapsed after a detection");
      }
    }
  }
  const double mid = 0.5 * (r_a + r_b);
  rep.estimate = Complex(sign * mid, 0.0);
  rep.bracket = GuessRegion::interval(r_a, r_b);
  scale_cost(rep);
  return rep;
}

bool pt_witness(const SpectralOperand& op, double eps, const FqedConfig& cfg) {
  check_eps(eps);
  const double K = op.k_bound();
  const CVector eigs = op.schur_eigenvalues();
  long queries = 0, iters = 0;
  for (double b = eps;; b *= 1.0 + 1.0 / (4.0 * K)) {
    if (++iters > kIterationCap) throw BudgetExceeded("iteration budget exhausted");
    const NuThreshold t = nu(b / 2.0, op);
    const double spacing = t.value;
    const long n = static_cast<long>(std::ceil(1.0 / spacing));
    const long per_line = 2 * n + 1;
    const double re0 = -static_cast<double>(n) * spacing;
    auto center_of = [&](long i) {
      const bool lower = i >= per_line;
      const long k = lower ? i - per_line : i;
      return Complex(re0 + static_cast<double>(k) * spacing, lower ? -b : b);
    };
    const double reach = detection_reach(op, t.value);
    std::vector<long> cand =
        lattice_candidates(eigs, re0, b, spacing, per_line, reach);
    auto low = lattice_candidates(eigs, re0, -b, spacing, per_line, reach);
    for (long i : low) cand.push_back(i + per_line);
    ScanHit hit =
        run_candidates(op, cfg, t.value, center_of, 2 * per_line, cand);
    queries += hit.modeled;
    if (queries > kQueryCap) throw BudgetExceeded("detector query budget exhausted");
    if (hit.any) return true;
    if (b >= 1.0) break;
  }
  return false;
}

namespace {

// Structural zero-gap check: a stochastic matrix has absolute gap zero when
// it has more than one closed communicating class or a periodic one.
void check_markov_promise(const CMatrix& stoch) {
  const long n = stoch.rows();
  std::vector<std::vector<long>> adj(n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (std::abs(stoch(i, j)) > 1e-12) adj[i].push_back(j);
    }
  }
  // States from which every reachable state can reach back form the closed
  // classes. Compute reachability sets (n <= a few thousand, bitset-free).
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (long s = 0; s < n; ++s) {
    std::queue<long> q;
    q.push(s);
    reach[s][s] = 1;
    while (!q.empty()) {
      long u = q.front();
      q.pop();
      for (long v : adj[u]) {
        if (!reach[s][v]) {
          reach[s][v] = 1;
          q.push(v);
        }
      }
    }
  }
  std::vector<long> class_of(n, -1);
  long closed_classes = 0;
  long sample = -1;
  for (long s = 0; s < n; ++s) {
    if (class_of[s] != -1) continue;
    bool closed = true;
    for (long v = 0; v < n; ++v) {
      if (reach[s][v] && !reach[v][s]) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    ++closed_classes;
    sample = s;
    for (long v = 0; v < n; ++v) {
      if (reach[s][v]) class_of[v] = s;
    }
  }
  if (closed_classes != 1) {
    throw PromiseViolation("chain has multiple closed classes; absolute gap is zero");
  }
  // Period of the closed class: gcd of (level(u) + 1 - level(v)) over its
  // edges, with levels from a BFS. Period > 1 puts extra eigenvalues on the
  // unit circle, so the gap is zero.
  std::vector<long> level(n, -1);
  std::queue<long> q;
  q.push(sample);
  level[sample] = 0;
  while (!q.empty()) {
    long u = q.front();
    q.pop();
    for (long v : adj[u]) {
      if (class_of[v] == class_of[sample] && level[v] == -1) {
        level[v] = level[u] + 1;
        q.push(v);
      }
    }
  }
  long g = 0;
  for (long u = 0; u < n; ++u) {
    if (level[u] < 0) continue;
    for (long v : adj[u]) {
      if (level[v] >= 0) {
        long d = std::abs(level[u] + 1 - level[v]);
        if (d != 0) g = g == 0 ? d : std::gcd(g, d);
      }
    }
  }
  if (g != 1) {
    throw PromiseViolation("chain is periodic; absolute gap is zero");
  }
}

}  // namespace

GapReport markov_abs_gap(const CMatrix& stoch, double alpha,
                         double delta_promise, double eps,
                         const FqedConfig& cfg) {
  validate_matrix(stoch);
  check_eps(eps);
  if (!(delta_promise > eps)) {
    throw InvalidArgument("need delta_promise > eps");
  }
  const long n = stoch.rows();
  for (long i = 0; i < n; ++i) {
    double row = 0.0;
    for (long j = 0; j < n; ++j) {
      if (stoch(i, j).real() < -1e-10 || std::abs(stoch(i, j).imag()) > 1e-10) {
        throw InvalidArgument("matrix is not row-stochastic");
      }
      row += stoch(i, j).real();
    }
    if (std::abs(row - 1.0) > 1e-10) {
      throw InvalidArgument("matrix rows must sum to one");
    }
  }
  if (spectral_norm(stoch) > alpha + 1e-9) {
    throw InvalidArgument("alpha must bound the spectral norm");
  }
  check_markov_promise(stoch);

  const double k_est = jordan_condition_estimate(stoch);
  SpectralOperand op(stoch / alpha, std::max(1.0, k_est), 1, true);
  const CVector eigs = op.schur_eigenvalues();
  const double top = 1.0 / alpha;
  double r_max = (1.0 - delta_promise) / alpha;
  double r_min = 0.0;
  GapReport rep;

  auto step = [&](double r) {
    const NuThreshold t = nu(r, op);
    const long m = static_cast<long>(
        std::ceil(2.0 * M_PI / std::atan(t.value / (2.0 * r_max))));
    const double astep = 2.0 * M_PI / static_cast<double>(m);
    auto center_of = [&](long k) {
      const double th = astep * static_cast<double>(k + 1);
      return Complex(r_max * std::cos(th), r_max * std::sin(th));
    };
    std::vector<long> cand =
        ring_candidates(eigs, r_max, m, detection_reach(op, t.value));
    ScanHit hit = run_candidates(op, cfg, t.value, center_of, m, cand);
    bump_queries(rep, hit.modeled);
    finalize_cost(rep, hit);
    rep.trace.push_back({rep.iterations, r_min, r_max, m, hit.any,
                         rep.fqed_queries});
    if (hit.any) {
      r_min = r_max - r;
    } else {
      r_max -= t.value / 2.0;
    }
  };

  // Stage 1: pull the outer radius down toward the subleading circle until
  // the bracket is balanced against the distance to the leading eigenvalue.
  while (top - r_min > 2.0 * (top - r_max) + 1e-15) {
    bump_iterations(rep);
    step(top - r_max);
  }
  // Stage 2: halve the bracket width.
  while (r_max - r_min > eps / alpha) {
    bump_iterations(rep);
    step((r_max - r_min) / 2.0);
    if (r_max <= r_min) {
      throw PromiseViolation("subleading-eigenvalue bracket collapsed");
    }
  }
  const double mid = 0.5 * (r_min + r_max);
  rep.estimate = Complex(1.0 - alpha * mid, 0.0);
  rep.bracket = GuessRegion::interval(1.0 - alpha * r_max, 1.0 - alpha * r_min);
  scale_cost(rep);
  return rep;
}

bool decide_spectrum_reality(const SpectralOperand& op, double eps,
                             const CVector& guide, double gamma,
                             const FqedConfig& cfg) {
  check_eps(eps);
  if (!(gamma > 0.0) || gamma > 1.0) throw InvalidArgument("gamma must lie in (0, 1]");
  if (guide.size() != op.dim()) throw InvalidState("guide dimension mismatch");
  if (std::abs(guide.norm() - 1.0) > 1e-8) throw InvalidState("guide must be unit-norm");

  const double K = op.k_bound();
  const CVector eigs = op.schur_eigenvalues();
  const double eps_th = eps / (16.0 * K);
  const double pitch = eps_th * gamma * std::sqrt(2.0);
  const double reach = detection_reach(op, eps_th);

  FqedConfig sub = cfg;
  if (cfg.backend == FqedBackend::Filtered) {
    sub.state_source = StateSource::UserVector;
    sub.user_vector = guide;
    sub.gamma = gamma;
  }

  const long n = static_cast<long>(std::ceil(1.0 / pitch));
  const long per_row = 2 * n + 1;
  const double re0 = -static_cast<double>(n) * pitch;
  long queries = 0;
  long iters = 0;
  // Rows sweep |Im| from 3 eps/4 upward past the unit band, both signs.
  for (double y = 0.75 * eps; y <= 1.0 + pitch; y += pitch) {
    for (int s : {+1, -1}) {
      if (++iters > kIterationCap) throw BudgetExceeded("iteration budget exhausted");
      const double h = s * y;
      auto center_of = [&](long i) {
        return Complex(re0 + static_cast<double>(i) * pitch, h);
      };
      std::vector<long> cand =
          lattice_candidates(eigs, re0, h, pitch, per_row, reach);
      ScanHit hit = run_candidates(op, sub, eps_th, center_of, per_row, cand);
      queries += hit.modeled;
      if (queries > kQueryCap) throw BudgetExceeded("detector query budget exhausted");
      if (hit.any) return true;
    }
  }
  return false;
}

}  // namespace nhgap
