// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: ingests matrix or Lindblad spec files, dispatches
// the gap solvers, and emits versioned JSON (or derived human) reports.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhgap/cmatrix.hpp"
#include "nhgap/errors.hpp"
#include "nhgap/filter.hpp"
#include "nhgap/fqed.hpp"
#include "nhgap/lindblad.hpp"
#include "nhgap/linalg.hpp"
#include "nhgap/oracle.hpp"
#include "nhgap/report.hpp"
#include "nhgap/search.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("NHGAP_LOG");
  if (!env) return 0;
  const std::string v = env;
  if (v == "debug") return 2;
  if (v == "info") return 1;
  return 0;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

struct CommonOpts {
  std::string input;
  double eps = 0.01;
  std::optional<double> k_bound;
  long m_max = 1;
  double gamma = 0.5;
  std::string backend = "exact";
  std::uint64_t seed = 0;
  std::string output = "json";
  bool oracle_check = false;
  std::string trace_path;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  auto* in = cmd->add_option("--input", o.input, "input file");
  if (needs_input) in->required();
  cmd->add_option("--eps", o.eps, "target accuracy in (0, 1)");
  cmd->add_option("--k-bound", o.k_bound,
                  "upper bound on the Jordan condition number");
  cmd->add_option("--m-max", o.m_max, "largest Jordan block size");
  cmd->add_option("--gamma", o.gamma, "state overlap promise (filtered backend)");
  cmd->add_option("--backend", o.backend, "detector backend: exact | filtered")
      ->check(CLI::IsMember({"exact", "filtered"}));
  cmd->add_option("--seed", o.seed, "random seed for sampled noise");
  cmd->add_option("--output", o.output, "output format: json | human")
      ->check(CLI::IsMember({"json", "human"}));
  cmd->add_flag("--oracle-check", o.oracle_check,
                "verify the result against the dense eigensolver");
  cmd->add_option("--trace", o.trace_path, "write the per-iteration trace CSV");
  cmd->add_option("--threads", o.threads, "worker threads for detector batches");
}

nhgap::FqedConfig make_cfg(const CommonOpts& o) {
  nhgap::FqedConfig cfg;
  cfg.backend = o.backend == "filtered" ? nhgap::FqedBackend::Filtered
                                        : nhgap::FqedBackend::Exact;
  cfg.gamma = o.gamma;
  cfg.seed = o.seed;
  return cfg;
}

nhgap::SpectralOperand load_operand(const CommonOpts& o) {
  nhgap::CMatrix m = nhgap::read_cmatrix_file(o.input);
  double k;
  if (o.k_bound) {
    k = *o.k_bound;
  } else {
    k = nhgap::jordan_condition_estimate(m);
    std::cerr << "warning: --k-bound not given; using estimate " << k << "\n";
  }
  nhgap::SpectralOperand op(std::move(m), std::max(1.0, k), o.m_max);
  log_info("loaded operand of dimension " + std::to_string(op.dim()));
  return op;
}

void emit(const CommonOpts& o, const nhgap::GapReport& rep,
          std::optional<bool> check, std::optional<double> oracle_value) {
  if (!o.trace_path.empty()) nhgap::emit_trace_csv(rep, o.trace_path);
  if (o.output == "human") {
    std::cout << nhgap::report_to_text(rep, check, oracle_value);
  } else {
    std::cout << nhgap::report_to_json(rep, check, oracle_value);
  }
}

int run_linegap(const CommonOpts& o, bool mirror) {
  auto op = load_operand(o);
  nhgap::LineGapOptions opts;
  opts.mirror = mirror;
  auto rep = nhgap::line_gap(op, o.eps, make_cfg(o), opts);
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    auto orc = nhgap::oracle_solve(op.matrix());
    oracle_value = orc.line_gap;
    check = std::abs(std::abs(rep.estimate.imag()) - orc.line_gap) <= o.eps;
  }
  emit(o, rep, check, oracle_value);
  return 0;
}

int run_pointgap(const CommonOpts& o) {
  auto op = load_operand(o);
  auto rep = nhgap::point_gap(op, o.eps, make_cfg(o));
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    auto orc = nhgap::oracle_solve(op.matrix());
    oracle_value = orc.point_gap;
    check = orc.point_gap >= rep.bracket.lo - 1e-9 &&
            orc.point_gap <= rep.bracket.hi + 1e-9;
  }
  emit(o, rep, check, oracle_value);
  return 0;
}

int run_eigsearch(const CommonOpts& o, bool real_line) {
  auto op = load_operand(o);
  auto rep = real_line ? nhgap::eig_search_real(op, o.eps, make_cfg(o))
                       : nhgap::eig_search(op, o.eps, make_cfg(o));
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    auto orc = nhgap::oracle_solve(op.matrix());
    double best = 1e300;
    for (long j = 0; j < orc.spectrum.eigenvalues.size(); ++j) {
      best = std::min(best,
                      std::abs(orc.spectrum.eigenvalues(j) - rep.estimate));
    }
    oracle_value = best;
    check = best <= o.eps + 1e-9;
  }
  emit(o, rep, check, oracle_value);
  return 0;
}

int run_realgap(const CommonOpts& o) {
  auto op = load_operand(o);
  auto rep = nhgap::real_gap(op, o.eps, make_cfg(o));
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    auto orc = nhgap::oracle_solve(op.matrix());
    double best = 1e300;
    for (long j = 0; j < orc.spectrum.eigenvalues.size(); ++j) {
      best = std::min(best,
                      std::abs(orc.spectrum.eigenvalues(j) - rep.estimate));
    }
    oracle_value = best;
    check = best <= o.eps + 1e-9;
  }
  emit(o, rep, check, oracle_value);
  return 0;
}

int run_ptwitness(const CommonOpts& o) {
  auto op = load_operand(o);
  const bool witness = nhgap::pt_witness(op, o.eps, make_cfg(o));
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["witness"] = witness;
  if (o.oracle_check) {
    auto orc = nhgap::oracle_solve(op.matrix());
    j["oracle_max_abs_im"] = orc.max_abs_im;
    if (orc.max_abs_im >= o.eps) j["oracle_check"] = witness;
    else if (orc.max_abs_im <= o.eps / 2.0) j["oracle_check"] = !witness;
    else j["oracle_check"] = true;  // fuzzy band, any verdict is valid
  }
  if (o.output == "human") {
    std::cout << "witness: " << (witness ? "true" : "false") << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_markovgap(const CommonOpts& o, double alpha, double delta_promise) {
  nhgap::CMatrix m = nhgap::read_cmatrix_file(o.input);
  if (alpha <= 0.0) alpha = nhgap::spectral_norm(m);
  auto rep = nhgap::markov_abs_gap(m, alpha, delta_promise, o.eps, make_cfg(o));
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    nhgap::OracleOptions oo;
    oo.stochastic = true;
    auto orc = nhgap::oracle_solve(m, oo);
    oracle_value = orc.abs_gap.value_or(0.0);
    check = std::abs(*oracle_value - rep.estimate.real()) <= o.eps + 1e-9;
  }
  emit(o, rep, check, oracle_value);
  const double gap = rep.estimate.real();
  if (o.output == "human" && gap > 0.0) {
    std::cout << "relaxation time: " << 1.0 / gap
              << " (error grows as the squared relaxation time times eps)\n";
  }
  return 0;
}

int run_liouvgap(const CommonOpts& o) {
  auto spec = nhgap::read_lindblad_file(o.input);
  std::optional<double> kb = o.k_bound;
  std::optional<long> mm;
  if (o.m_max > 1) mm = o.m_max;
  auto rep = nhgap::liouvillian_gap(spec, o.eps, make_cfg(o), kb, mm);
  std::optional<bool> check;
  std::optional<double> oracle_value;
  if (o.oracle_check) {
    auto v = nhgap::vectorize(spec);
    auto orc = nhgap::oracle_solve(*v.dense);
    double gap = 1e300;
    for (long j = 0; j < orc.spectrum.eigenvalues.size(); ++j) {
      const double re = std::abs(orc.spectrum.eigenvalues(j).real());
      if (re > o.eps / 2.0) gap = std::min(gap, re);
    }
    oracle_value = gap;
    check = gap >= rep.bracket.lo - 1e-9 && gap <= rep.bracket.hi + 1e-9;
  }
  emit(o, rep, check, oracle_value);
  return 0;
}

int run_filtercheck(double eps_th, double delta, long grid) {
  nhgap::PolyFilter f = nhgap::build_heaviside_filter(eps_th, delta);
  const bool ok = nhgap::certify_filter(f, grid);
  std::cout << "x,value,branch,pass\n";
  auto row = [&](double x, int branch, double lo, double hi) {
    const double v = nhgap::eval_filter(f, x);
    const bool pass = v >= lo && v <= hi;
    std::cout << x << ',' << v << ',' << branch << ',' << (pass ? 1 : 0)
              << "\n";
  };
  for (long k = 0; k < grid; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(grid - 1);
    row(s * eps_th, 1, 1.0 - delta, 1.0);
  }
  for (long k = 0; k < grid; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(grid - 1);
    row(eps_th + 1e-12 + s * (eps_th - 1e-12), 2, 0.0, 1.0);
  }
  for (long k = 0; k < grid; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(grid - 1);
    row(2 * eps_th + 1e-12 + s * (1.0 - 2 * eps_th - 1e-12), 3, 0.0, delta);
  }
  return ok ? 0 : 1;
}

int run_vectorize(const CommonOpts& o) {
  auto spec = nhgap::read_lindblad_file(o.input);
  auto v = nhgap::vectorize(spec);
  auto cost = nhgap::modeled_block_encoding_cost(v);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = v.n;
  j["c_tilde"] = v.c_tilde;
  j["term_count"] = cost.term_count;
  j["c_be"] = cost.c_be;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  static const char* kPhases[] = {"+1", "+i", "-1", "-i"};
  for (const auto& [beta, t] : v.terms) {
    nlohmann::ordered_json jt;
    jt["beta"] = beta;
    jt["pauli"] = t.word;
    jt["phase"] = kPhases[t.phase];
    terms.push_back(jt);
  }
  j["terms"] = terms;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_oracle(const CommonOpts& o) {
  nhgap::CMatrix m = nhgap::read_cmatrix_file(o.input);
  nhgap::OracleOptions oo;
  oo.stochastic = true;
  auto orc = nhgap::oracle_solve(m, oo);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["line_gap"] = orc.line_gap;
  j["point_gap"] = orc.point_gap;
  j["max_abs_im"] = orc.max_abs_im;
  if (orc.abs_gap) j["abs_gap"] = *orc.abs_gap;
  nlohmann::ordered_json ev = nlohmann::ordered_json::array();
  for (long k = 0; k < orc.spectrum.eigenvalues.size(); ++k) {
    ev.push_back({orc.spectrum.eigenvalues(k).real(),
                  orc.spectrum.eigenvalues(k).imag()});
  }
  j["eigenvalues"] = ev;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-gap solvers for non-Hermitian matrices"};
  app.require_subcommand(1);

  CommonOpts o;
  bool mirror = false;
  double alpha = 0.0, delta_promise = 0.05;
  double eps_th = 0.1, delta = 0.01;
  long grid = 2048;

  auto* linegap = app.add_subcommand("linegap", "distance to the real axis");
  add_common(linegap, o);
  linegap->add_flag("--mirror", mirror, "also scan below the axis");
  auto* pointgap = app.add_subcommand("pointgap", "distance to the origin");
  add_common(pointgap, o);
  auto* eigsearch = app.add_subcommand("eigsearch", "locate one eigenvalue");
  add_common(eigsearch, o);
  bool real_line = false;
  eigsearch->add_flag("--real", real_line, "assume a real spectrum");
  auto* realgap = app.add_subcommand("realgap", "signed distance, real spectrum");
  add_common(realgap, o);
  auto* ptwitness = app.add_subcommand("ptwitness", "complex-eigenvalue witness");
  add_common(ptwitness, o);
  auto* markovgap = app.add_subcommand("markovgap", "absolute gap of a chain");
  add_common(markovgap, o);
  markovgap->add_option("--alpha", alpha, "norm bound (default: computed)");
  markovgap->add_option("--delta-promise", delta_promise, "promised gap lower bound");
  auto* liouvgap = app.add_subcommand("liouvgap", "Liouvillian gap of a spec");
  add_common(liouvgap, o);
  auto* filtercheck = app.add_subcommand("filtercheck", "certify the step filter");
  filtercheck->add_option("--eps-th", eps_th, "filter threshold");
  filtercheck->add_option("--delta", delta, "filter tolerance");
  filtercheck->add_option("--grid", grid, "certification grid per branch");
  auto* vectorize = app.add_subcommand("vectorize", "vectorize a Lindblad spec");
  add_common(vectorize, o);
  auto* oracle = app.add_subcommand("oracle", "dense eigensolver ground truth");
  add_common(oracle, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (linegap->parsed()) return run_linegap(o, mirror);
    if (pointgap->parsed()) return run_pointgap(o);
    if (eigsearch->parsed()) return run_eigsearch(o, real_line);
    if (realgap->parsed()) return run_realgap(o);
    if (ptwitness->parsed()) return run_ptwitness(o);
    if (markovgap->parsed()) return run_markovgap(o, alpha, delta_promise);
    if (liouvgap->parsed()) return run_liouvgap(o);
    if (filtercheck->parsed()) return run_filtercheck(eps_th, delta, grid);
    if (vectorize->parsed()) return run_vectorize(o);
    if (oracle->parsed()) return run_oracle(o);
  } catch (const nhgap::PromiseViolation& e) {
    std::cerr << "promise violation: " << e.what() << "\n";
    return 2;
  } catch (const nhgap::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 3;
  } catch (const nhgap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
