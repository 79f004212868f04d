// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nhgap/errors.hpp"

namespace nhgap {

namespace {

nlohmann::ordered_json report_json(const GapReport& rep,
                                   std::optional<bool> oracle_check,
                                   std::optional<double> oracle_value) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["estimate_re"] = rep.estimate.real();
  j["estimate_im"] = rep.estimate.imag();
  nlohmann::ordered_json b;
  switch (rep.bracket.kind) {
    case GuessRegion::Kind::Interval:
      b["kind"] = "interval";
      b["lo"] = rep.bracket.lo;
      b["hi"] = rep.bracket.hi;
      break;
    case GuessRegion::Kind::Annulus:
      b["kind"] = "annulus";
      b["lo"] = rep.bracket.lo;
      b["hi"] = rep.bracket.hi;
      break;
    case GuessRegion::Kind::Disk:
      b["kind"] = "disk";
      b["center_re"] = rep.bracket.center.real();
      b["center_im"] = rep.bracket.center.imag();
      b["radius"] = rep.bracket.radius;
      break;
  }
  j["bracket"] = b;
  j["fqed_queries"] = rep.fqed_queries;
  j["iterations"] = rep.iterations;
  nlohmann::ordered_json mc;
  mc["modeled"] = rep.modeled_cost.modeled;
  if (rep.modeled_cost.modeled) {
    mc["c_be"] = rep.modeled_cost.c_be;
    mc["c_sp"] = rep.modeled_cost.c_sp;
    mc["total"] = rep.modeled_cost.total;
  } else {
    mc["note"] = "block-encoding cost not modeled for dense input";
  }
  j["modeled_cost"] = mc;
  if (oracle_check) {
    j["oracle_check"] = *oracle_check;
    if (oracle_value) j["oracle_value"] = *oracle_value;
  }
  return j;
}

}  // namespace

std::string report_to_json(const GapReport& rep,
                           std::optional<bool> oracle_check,
                           std::optional<double> oracle_value) {
  return report_json(rep, oracle_check, oracle_value).dump(2) + "\n";
}

std::string report_to_text(const GapReport& rep,
                           std::optional<bool> oracle_check,
                           std::optional<double> oracle_value) {
  auto j = report_json(rep, oracle_check, oracle_value);
  std::ostringstream out;
  out << "estimate: " << j["estimate_re"].get<double>();
  const double im = j["estimate_im"].get<double>();
  if (im != 0.0) out << (im > 0 ? "+" : "") << im << "i";
  out << "\n";
  out << "bracket: " << j["bracket"].dump() << "\n";
  out << "fqed queries: " << rep.fqed_queries << "\n";
  out << "iterations: " << rep.iterations << "\n";
  out << "modeled cost: " << j["modeled_cost"].dump() << "\n";
  if (oracle_check) {
    out << "oracle check: " << (*oracle_check ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

void emit_trace_csv(const GapReport& rep, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open trace file: " + path);
  f << "index,region_lo,region_hi,covering_size,verdict,cumulative_queries\n";
  for (const auto& row : rep.trace) {
    f << row.index << ',' << row.region_lo << ',' << row.region_hi << ','
      << row.covering_size << ',' << (row.verdict ? 1 : 0) << ','
      << row.cumulative_queries << "\n";
  }
  if (!f.good()) throw IoError("trace write failed: " + path);
}

}  // namespace nhgap
