// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "growthkit/error.hpp"
#include "growthkit/format.hpp"

namespace gk {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string>& columns() {
  static const std::vector<std::string> kColumns = {
      "theorem",  "case",   "instance", "predicted_lo", "predicted_hi",
      "measured", "margin", "verdict",  "subject",      "relation"};
  return kColumns;
}

double parse_number(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0;
  if (!(in >> v)) fail(ErrorCode::InvalidValue, "not a number in report: '" + s + "'");
  return v;
}

ordered_json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double json_number(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  fail(ErrorCode::InvalidValue, "report number has the wrong type");
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inconclusive, Verdict::HypothesisViolated}) {
    if (verdict_name(v) == s) return v;
  }
  fail(ErrorCode::InvalidValue, "unknown verdict '" + s + "'");
}

std::vector<std::string> row_fields(const ReportRow& r) {
  return {std::to_string(r.theorem),   r.case_tag,
          r.instance,                  format_number(r.predicted_lo),
          format_number(r.predicted_hi), format_number(r.measured),
          format_number(r.margin),     std::string(verdict_name(r.verdict)),
          r.subject,                   r.relation};
}

ReportRow row_from_fields(const std::vector<std::string>& f) {
  if (f.size() < 8) fail(ErrorCode::InvalidValue, "report row has too few columns");
  ReportRow r;
  r.theorem = static_cast<int>(parse_number(f[0]));
  r.case_tag = f[1];
  r.instance = f[2];
  r.predicted_lo = parse_number(f[3]);
  r.predicted_hi = parse_number(f[4]);
  r.measured = parse_number(f[5]);
  r.margin = parse_number(f[6]);
  r.verdict = verdict_from(f[7]);
  if (f.size() > 8) r.subject = f[8];
  if (f.size() > 9) r.relation = f[9];
  return r;
}

// RFC 4180 records.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
      }
      field.clear();
      record.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) fail(ErrorCode::InvalidValue, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::vector<ReportRow> flatten(const std::vector<VerificationReport>& reports) {
  std::vector<ReportRow> rows;
  for (const auto& rep : reports) rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
  return rows;
}

std::string rows_csv_header() { return csv_line(columns()); }

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = rows_csv_header();
  for (const auto& r : rows) out += csv_line(row_fields(r));
  return out;
}

std::string rows_to_json(const std::vector<ReportRow>& rows, const ReportMeta& meta) {
  ordered_json doc;
  const SuiteSummary s = summarize_rows(rows);
  doc["meta"] = {{"tool", meta.tool},
                 {"command", meta.command},
                 {"suite", meta.suite},
                 {"seed", meta.seed},
                 {"grid",
                  {{"t0", meta.grid.t0},
                   {"beta", meta.grid.beta},
                   {"points", meta.grid.points},
                   {"tail", meta.grid.tail}}},
                 {"conv_tol", meta.conv_tol},
                 {"summary",
                  {{"rows", s.rows},
                   {"pass", s.pass},
                   {"fail", s.fail},
                   {"inconclusive", s.inconclusive},
                   {"hypothesis_violated", s.hypothesis_violated}}}};
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"theorem", r.theorem},
                   {"case", r.case_tag},
                   {"instance", r.instance},
                   {"predicted_lo", number_json(r.predicted_lo)},
                   {"predicted_hi", number_json(r.predicted_hi)},
                   {"measured", number_json(r.measured)},
                   {"margin", number_json(r.margin)},
                   {"tolerance", number_json(r.tolerance)},
                   {"verdict", verdict_name(r.verdict)},
                   {"subject", r.subject},
                   {"relation", r.relation}});
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string rows_to_table(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> cells = {columns()};
  for (const auto& r : rows) cells.push_back(row_fields(r));
  std::vector<std::size_t> width(columns().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

std::vector<ReportRow> parse_rows(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) return {};
  std::vector<ReportRow> rows;
  if (text[start] == '{') {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidValue, std::string("malformed JSON report: ") + e.what());
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
      fail(ErrorCode::InvalidValue, "JSON report has no rows array");
    }
    for (const auto& j : doc["rows"]) {
      ReportRow r;
      try {
        r.theorem = j.at("theorem").get<int>();
        r.case_tag = j.at("case").get<std::string>();
        r.instance = j.at("instance").get<std::string>();
        r.predicted_lo = json_number(j.at("predicted_lo"));
        r.predicted_hi = json_number(j.at("predicted_hi"));
        r.measured = json_number(j.at("measured"));
        r.margin = json_number(j.at("margin"));
        if (j.contains("tolerance")) r.tolerance = json_number(j["tolerance"]);
        r.verdict = verdict_from(j.at("verdict").get<std::string>());
        r.subject = j.value("subject", "");
        r.relation = j.value("relation", "");
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidValue, std::string("malformed JSON report row: ") + e.what());
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }
  auto records = parse_csv(text);
  if (records.empty()) return rows;
  if (records.front() != columns()) {
    if (records.front().size() < 8 || records.front()[0] != "theorem") {
      fail(ErrorCode::InvalidValue, "CSV report lacks the expected header");
    }
  }
  for (std::size_t i = 1; i < records.size(); ++i) rows.push_back(row_from_fields(records[i]));
  return rows;
}

std::vector<ReportRow> aggregate_rows(const std::vector<std::string>& artifacts) {
  std::vector<ReportRow> all;
  for (const auto& text : artifacts) {
    auto rows = parse_rows(text);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return a.instance < b.instance;
  });
  return all;
}

SuiteSummary summarize_rows(const std::vector<ReportRow>& rows) {
  SuiteSummary s;
  std::map<std::pair<int, std::string>, Verdict> worst;
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Fail: return 3;
      case Verdict::Inconclusive: return 2;
      case Verdict::HypothesisViolated: return 1;
      case Verdict::Pass: return 0;
    }
    return 0;
  };
  for (const auto& r : rows) {
    ++s.rows;
    switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Inconclusive: ++s.inconclusive; break;
      case Verdict::HypothesisViolated: ++s.hypothesis_violated; break;
    }
    auto key = std::make_pair(r.theorem, r.instance);
    auto it = worst.find(key);
    if (it == worst.end() || rank(r.verdict) > rank(it->second)) worst[key] = r.verdict;
  }
  s.reports = static_cast<int>(worst.size());
  return s;
}

}  // namespace gk
