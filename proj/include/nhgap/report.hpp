// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHGAP_REPORT_HPP
#define NHGAP_REPORT_HPP

#include <optional>
#include <string>

#include "nhgap/search.hpp"

namespace nhgap {

/// Versioned JSON form of a gap report ("schema": 1). oracle_check, when
/// present, records whether the independent eigensolver agreed.
std::string report_to_json(const GapReport& rep,
                           std::optional<bool> oracle_check = std::nullopt,
                           std::optional<double> oracle_value = std::nullopt);

/// Human-readable rendering derived from the JSON form.
std::string report_to_text(const GapReport& rep,
                           std::optional<bool> oracle_check = std::nullopt,
                           std::optional<double> oracle_value = std::nullopt);

/// One CSV row per iteration:
/// index,region_lo,region_hi,covering_size,verdict,cumulative_queries.
void emit_trace_csv(const GapReport& rep, const std::string& path);

}  // namespace nhgap

#endif  // NHGAP_REPORT_HPP
