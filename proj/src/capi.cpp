// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/growthkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "growthkit/error.hpp"
#include "growthkit/expr.hpp"
#include "growthkit/format.hpp"
#include "growthkit/growth.hpp"
#include "growthkit/profile.hpp"
#include "growthkit/report.hpp"
#include "growthkit/series.hpp"
#include "growthkit/suite.hpp"

struct gk_function {
  gk::GrowthObject obj;
};

struct gk_suite_result {
  gk::SuiteResult result;
  gk::ReportMeta meta;
};

namespace {

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError g_last;

gk_status status_of(gk::ErrorCode code) {
  switch (code) {
    case gk::ErrorCode::InvalidValue: return GK_ERR_INVALID_VALUE;
    case gk::ErrorCode::DomainError: return GK_ERR_DOMAIN;
    case gk::ErrorCode::Overflow: return GK_ERR_OVERFLOW;
    case gk::ErrorCode::SyntaxError: return GK_ERR_SYNTAX;
    case gk::ErrorCode::NegativeCoefficient: return GK_ERR_NEGATIVE_COEFFICIENT;
    case gk::ErrorCode::ConstantFunction: return GK_ERR_CONSTANT_FUNCTION;
    case gk::ErrorCode::AdmissibilityError: return GK_ERR_ADMISSIBILITY;
    case gk::ErrorCode::GuardRadiusExceeded: return GK_ERR_GUARD_RADIUS;
    case gk::ErrorCode::NonpositiveArgument: return GK_ERR_NONPOSITIVE_ARGUMENT;
    case gk::ErrorCode::IndeterminateError: return GK_ERR_INDETERMINATE;
    case gk::ErrorCode::NotFound: return GK_ERR_NOT_FOUND;
    case gk::ErrorCode::HypothesisViolated: return GK_ERR_HYPOTHESIS_VIOLATED;
    case gk::ErrorCode::ConfigError: return GK_ERR_CONFIG;
  }
  return GK_ERR_INTERNAL;
}

gk_status set_error(gk_status status, const std::string& message) {
  g_last.message = message;
  g_last.line = g_last.column = 0;
  return status;
}

template <class Fn>
gk_status guarded(Fn&& fn) {
  g_last = LastError{};
  try {
    fn();
    return GK_OK;
  } catch (const gk::SyntaxError& e) {
    g_last.message = e.what();
    g_last.line = e.line();
    g_last.column = e.column();
    return status_of(e.code());
  } catch (const gk::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GK_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gk::GridSpec grid_of(const gk_grid* g) {
  gk::GridSpec spec;
  if (g) {
    spec.t0 = g->t0;
    spec.beta = g->beta;
    spec.points = g->points;
    spec.tail = g->tail;
  }
  if (!(spec.t0 > 0) || !(spec.beta > 1) || spec.points < 2 || !(spec.tail > 0) || spec.tail > 1) {
    throw gk::Error(gk::ErrorCode::ConfigError,
                    "grid needs t0 > 0, beta > 1, points >= 2 and 0 < tail <= 1");
  }
  return spec;
}

gk::Tolerances tol_of(const gk_tolerances* t) {
  gk::Tolerances tol;
  if (t) {
    tol.conv_tol = t->conv_tol;
    tol.slope_tol = t->slope_tol;
    tol.huge = t->huge;
    tol.tiny = t->tiny;
  }
  return tol;
}

gk_class class_of(gk::GrowthClass c) {
  switch (c) {
    case gk::GrowthClass::Finite: return GK_CLASS_FINITE;
    case gk::GrowthClass::Infinity: return GK_CLASS_INFINITY;
    case gk::GrowthClass::Zero: return GK_CLASS_ZERO;
    case gk::GrowthClass::Unit: return GK_CLASS_UNIT;
    case gk::GrowthClass::Unsettled: return GK_CLASS_UNSETTLED;
  }
  return GK_CLASS_UNSETTLED;
}

void fill(const gk::GrowthEstimate& e, gk_estimate* out) {
  if (!out) return;
  out->cls = class_of(e.cls);
  out->value = e.value;
  out->sup_tail = e.sup_tail;
  out->inf_tail = e.inf_tail;
  out->slope = e.slope;
  out->conv_tol = e.conv_tol;
  out->points = e.points;
  out->absorbed = e.absorbed ? 1 : 0;
}

gk_verdict verdict_of(gk::Verdict v) {
  switch (v) {
    case gk::Verdict::Pass: return GK_VERDICT_PASS;
    case gk::Verdict::Fail: return GK_VERDICT_FAIL;
    case gk::Verdict::Inconclusive: return GK_VERDICT_INCONCLUSIVE;
    case gk::Verdict::HypothesisViolated: return GK_VERDICT_HYPOTHESIS_VIOLATED;
  }
  return GK_VERDICT_INCONCLUSIVE;
}

gk::Verdict verdict_from(gk_verdict v) {
  switch (v) {
    case GK_VERDICT_PASS: return gk::Verdict::Pass;
    case GK_VERDICT_FAIL: return gk::Verdict::Fail;
    case GK_VERDICT_INCONCLUSIVE: return gk::Verdict::Inconclusive;
    case GK_VERDICT_HYPOTHESIS_VIOLATED: return gk::Verdict::HypothesisViolated;
  }
  throw gk::Error(gk::ErrorCode::InvalidValue, "unknown verdict");
}

void fill(const gk::SuiteSummary& s, gk_summary* out) {
  out->reports = s.reports;
  out->rows = s.rows;
  out->pass = s.pass;
  out->fail = s.fail;
  out->inconclusive = s.inconclusive;
  out->hypothesis_violated = s.hypothesis_violated;
}

std::string format_rows(const std::vector<gk::ReportRow>& rows, gk_format format,
                        const gk::ReportMeta& meta) {
  switch (format) {
    case GK_FORMAT_CSV: return gk::rows_to_csv(rows);
    case GK_FORMAT_JSON: return gk::rows_to_json(rows, meta);
    case GK_FORMAT_TABLE: return gk::rows_to_table(rows);
  }
  throw gk::Error(gk::ErrorCode::InvalidValue, "unknown format");
}

// Pads comma-separated lines into aligned columns; fields hold no commas.
std::string align_columns(const std::string& csv) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string::npos) end = csv.size();
    std::vector<std::string> line;
    std::size_t a = start;
    while (true) {
      const std::size_t b = csv.find(',', a);
      if (b == std::string::npos || b > end) {
        line.push_back(csv.substr(a, end - a));
        break;
      }
      line.push_back(csv.substr(a, b - a));
      a = b + 1;
    }
    if (width.size() < line.size()) width.resize(line.size(), 0);
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    cells.push_back(std::move(line));
    start = end + 1;
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out += line[i];
      if (i + 1 < line.size()) out += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "0.1.0"; }

const char* gk_status_name(gk_status status) {
  switch (status) {
    case GK_OK: return "Ok";
    case GK_ERR_INVALID_VALUE: return "InvalidValue";
    case GK_ERR_DOMAIN: return "DomainError";
    case GK_ERR_OVERFLOW: return "Overflow";
    case GK_ERR_SYNTAX: return "SyntaxError";
    case GK_ERR_NEGATIVE_COEFFICIENT: return "NegativeCoefficient";
    case GK_ERR_CONSTANT_FUNCTION: return "ConstantFunction";
    case GK_ERR_ADMISSIBILITY: return "AdmissibilityError";
    case GK_ERR_GUARD_RADIUS: return "GuardRadiusExceeded";
    case GK_ERR_NONPOSITIVE_ARGUMENT: return "NonpositiveArgument";
    case GK_ERR_INDETERMINATE: return "IndeterminateError";
    case GK_ERR_NOT_FOUND: return "NotFound";
    case GK_ERR_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case GK_ERR_CONFIG: return "ConfigError";
    case GK_ERR_NULL_ARGUMENT: return "NullArgument";
    case GK_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* gk_class_name(gk_class cls) {
  switch (cls) {
    case GK_CLASS_FINITE: return "Finite";
    case GK_CLASS_INFINITY: return "Infinity";
    case GK_CLASS_ZERO: return "Zero";
    case GK_CLASS_UNIT: return "Unit";
    case GK_CLASS_UNSETTLED: return "Unsettled";
  }
  return "Unknown";
}

const char* gk_verdict_name(gk_verdict verdict) {
  switch (verdict) {
    case GK_VERDICT_PASS: return "Pass";
    case GK_VERDICT_FAIL: return "Fail";
    case GK_VERDICT_INCONCLUSIVE: return "Inconclusive";
    case GK_VERDICT_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
  }
  return "Unknown";
}

const char* gk_last_error(void) { return g_last.message.c_str(); }
int gk_last_error_line(void) { return g_last.line; }
int gk_last_error_column(void) { return g_last.column; }

void gk_string_free(char* s) { std::free(s); }

void gk_grid_default(gk_grid* grid) {
  if (!grid) return;
  const gk::GridSpec spec;
  *grid = gk_grid{spec.t0, spec.beta, spec.points, spec.tail};
}

void gk_tolerances_default(gk_tolerances* tol) {
  if (!tol) return;
  const gk::Tolerances t;
  *tol = gk_tolerances{t.conv_tol, t.slope_tol, t.huge, t.tiny};
}

void gk_suite_config_default(gk_suite_config* config) {
  if (!config) return;
  *config = gk_suite_config{};
  config->suite = "default";
  config->seed = 1;
  gk_grid_default(&config->grid);
  gk_tolerances_default(&config->tol);
  config->regular_count = 50;
}

gk_status gk_expr_canonical(const char* text, char** out) {
  if (!text || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(gk::print(gk::parse_expr(text))); });
}

gk_status gk_function_from_expr(const char* text, gk_function** out) {
  if (!text || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new gk_function{gk::GrowthObject(gk::parse_expr(text))}; });
}

gk_status gk_function_from_profile(int p, int q, double rho, double lambda, double t0,
                                   double gamma, gk_function** out) {
  if (!out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<gk::Oscillation> osc;
    if (gamma > 0) osc = gk::Oscillation{t0 > 0 ? t0 : gk::Oscillation{}.t0, gamma};
    *out = new gk_function{gk::GrowthObject(gk::make_profile(p, q, rho, lambda, osc))};
  });
}

gk_status gk_function_comparator(unsigned height, gk_function** out) {
  if (!out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new gk_function{gk::exp_tower_comparator(height)}; });
}

void gk_function_free(gk_function* f) { delete f; }

gk_status gk_function_describe(const gk_function* f, char** out) {
  if (!f || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(f->obj.describe()); });
}

gk_status gk_max_modulus(const gk_function* f, const char* r, char** out) {
  if (!f || !r || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const gk::TowerReal x = gk::parse_tower(r);
    if (x.is_negative()) throw gk::Error(gk::ErrorCode::DomainError, "radius must be nonnegative");
    *out = dup_string(gk::to_string(f->obj.max_modulus(x)));
  });
}

gk_status gk_inverse_max_modulus(const gk_function* f, const char* s, char** out) {
  if (!f || !s || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(gk::to_string(gk::inverse_max_modulus(f->obj, gk::parse_tower(s))));
  });
}

gk_status gk_tower_to_double(const char* value, double* out) {
  if (!value || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = gk::to_real(gk::parse_tower(value)); });
}

gk_status gk_order(const gk_function* f, int p, int q, const gk_grid* grid,
                   const gk_tolerances* tol, gk_estimate* rho, gk_estimate* lambda) {
  if (!f) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const gk::OrderEstimate o = gk::pq_order(f->obj, p, q, grid_of(grid), tol_of(tol));
    fill(o.rho, rho);
    fill(o.lambda, lambda);
  });
}

gk_status gk_index_pair(const gk_function* f, int p_max, const gk_grid* grid,
                        const gk_tolerances* tol, int* p, int* q, gk_estimate* rho,
                        gk_estimate* lambda, int* regular) {
  if (!f || !p || !q) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const gk::IndexPairResult r = gk::detect_index_pair(f->obj, p_max, grid_of(grid), tol_of(tol));
    *p = r.p;
    *q = r.q;
    fill(r.rho, rho);
    fill(r.lambda, lambda);
    if (regular) *regular = r.regular ? 1 : 0;
  });
}

gk_status gk_relative_order(const gk_function* f, const gk_function* g, int p, int q,
                            const gk_grid* grid, const gk_tolerances* tol, gk_estimate* rho,
                            gk_estimate* lambda) {
  if (!f || !g) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const gk::OrderEstimate o =
        gk::relative_pq_order(f->obj, g->obj, p, q, grid_of(grid), tol_of(tol));
    fill(o.rho, rho);
    fill(o.lambda, lambda);
  });
}

gk_status gk_sandwich_check(const char* f, const char* g, double r, int truncation,
                            gk_sandwich* out) {
  if (!f || !g || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const gk::SandwichRecord rec =
        gk::check_sandwich(gk::parse_expr(f), gk::parse_expr(g), r, truncation > 0 ? truncation : 64);
    *out = gk_sandwich{rec.r,
                       {rec.lower.lo, rec.lower.hi},
                       {rec.middle.lo, rec.middle.hi},
                       {rec.upper.lo, rec.upper.hi},
                       verdict_of(rec.verdict),
                       rec.truncation};
  });
}

gk_status gk_sandwich_format(const gk_sandwich* records, size_t count, gk_format format,
                             char** out) {
  if ((!records && count) || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<gk::SandwichRecord> recs;
    for (size_t i = 0; i < count; ++i) {
      const gk_sandwich& s = records[i];
      recs.push_back(gk::SandwichRecord{s.r,
                                        {s.lower.lo, s.lower.hi},
                                        {s.middle.lo, s.middle.hi},
                                        {s.upper.lo, s.upper.hi},
                                        verdict_from(s.verdict),
                                        s.truncation});
    }
    std::string text;
    if (format == GK_FORMAT_JSON) {
      nlohmann::ordered_json doc;
      doc["meta"] = {{"tool", "growthkit"}, {"command", "sandwich"}};
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& s : recs) {
        rows.push_back({{"r", s.r},
                        {"lower", {s.lower.lo, s.lower.hi}},
                        {"middle", {s.middle.lo, s.middle.hi}},
                        {"upper", {s.upper.lo, s.upper.hi}},
                        {"verdict", gk::verdict_name(s.verdict)},
                        {"truncation", s.truncation}});
      }
      doc["rows"] = std::move(rows);
      text = doc.dump(2) + "\n";
    } else {
      text = gk::sandwich_csv_header();
      for (const auto& s : recs) text += gk::sandwich_csv_row(s);
      if (format == GK_FORMAT_TABLE) text = align_columns(text);
    }
    *out = dup_string(text);
  });
}

gk_status gk_suite_run(const gk_suite_config* config, gk_suite_result** out) {
  if (!config || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    gk::SuiteConfig cfg;
    cfg.suite = config->suite ? config->suite : "default";
    if (config->theorems) cfg.theorems.assign(config->theorems, config->theorems + config->theorem_count);
    cfg.seed = config->seed;
    cfg.grid = grid_of(&config->grid);
    cfg.tol = tol_of(&config->tol);
    cfg.regular_count = config->regular_count;
    cfg.corrupt_bound = config->corrupt_bound != 0;
    cfg.threads = config->threads;
    if ((config->f == nullptr) != (config->g == nullptr)) {
      throw gk::Error(gk::ErrorCode::ConfigError, "custom instances need both f and g");
    }
    if ((config->h == nullptr) != (config->k == nullptr)) {
      throw gk::Error(gk::ErrorCode::ConfigError, "comparators need both h and k");
    }
    if (config->f) {
      std::vector<int> ids = cfg.theorems;
      if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8};
      std::vector<gk::SuiteInstance> custom;
      for (int id : ids) {
        gk::SuiteInstance inst{"custom", id, config->f->obj, config->g->obj, std::nullopt,
                               std::nullopt};
        if (config->h) {
          inst.h = gk::comparator(config->h->obj, cfg.grid, cfg.tol);
          inst.k = gk::comparator(config->k->obj, cfg.grid, cfg.tol);
        }
        custom.push_back(std::move(inst));
      }
      cfg.instances = std::move(custom);
      cfg.suite = "custom";
    }
    auto res = std::make_unique<gk_suite_result>();
    res->result = gk::run_suite(cfg);
    res->meta.suite = cfg.suite;
    res->meta.seed = cfg.seed;
    res->meta.grid = cfg.grid;
    res->meta.conv_tol = cfg.tol.conv_tol;
    *out = res.release();
  });
}

void gk_suite_result_free(gk_suite_result* result) { delete result; }

gk_status gk_suite_result_summary(const gk_suite_result* result, gk_summary* out) {
  if (!result || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { fill(result->result.summary, out); });
}

gk_status gk_suite_result_chain_spread(const gk_suite_result* result, double* out) {
  if (!result || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = result->result.max_chain_spread; });
}

gk_status gk_suite_result_format(const gk_suite_result* result, gk_format format,
                                 const char* command, char** out) {
  if (!result || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    gk::ReportMeta meta = result->meta;
    meta.command = command ? command : "verify";
    *out = dup_string(format_rows(gk::flatten(result->result.reports), format, meta));
  });
}

gk_status gk_report_aggregate(const char* const* artifacts, size_t count, gk_format format,
                              char** out, gk_summary* summary) {
  if ((!artifacts && count) || !out) return set_error(GK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> texts;
    for (size_t i = 0; i < count; ++i) {
      if (!artifacts[i]) throw gk::Error(gk::ErrorCode::InvalidValue, "null artifact");
      texts.emplace_back(artifacts[i]);
    }
    const auto rows = gk::aggregate_rows(texts);
    gk::ReportMeta meta;
    meta.command = "report";
    meta.suite = "aggregate";
    *out = dup_string(format_rows(rows, format, meta));
    if (summary) fill(gk::summarize_rows(rows), summary);
  });
}

}  // extern "C"
