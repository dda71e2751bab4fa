// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthkit/suite.hpp"

namespace gk {

struct ReportMeta {
  std::string tool = "growthkit";
  std::string command;
  std::string suite;
  std::uint64_t seed = 0;
  GridSpec grid;
  double conv_tol = 0;
};

std::vector<ReportRow> flatten(const std::vector<VerificationReport>& reports);

// theorem,case,instance,predicted_lo,predicted_hi,measured,margin,verdict,subject,relation
std::string rows_csv_header();
std::string rows_to_csv(const std::vector<ReportRow>& rows);
// {"meta": {...}, "rows": [...]}; non-finite numbers are written as strings.
std::string rows_to_json(const std::vector<ReportRow>& rows, const ReportMeta& meta);
// Fixed-width text table.
std::string rows_to_table(const std::vector<ReportRow>& rows);

// Reads rows back from either format; detects JSON by a leading '{'.
std::vector<ReportRow> parse_rows(const std::string& text);

// Merges rows from several artifacts, sorted by (theorem, instance) with the
// original row order kept inside each instance.
std::vector<ReportRow> aggregate_rows(const std::vector<std::string>& artifacts);

// Verdict counts over rows.
SuiteSummary summarize_rows(const std::vector<ReportRow>& rows);

}  // namespace gk
