// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "growthkit/growthkit.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitFail = 3;

// Raised after a library call fails; carries the message already formatted.
struct LibraryFailure {
  gk_status status;
  std::string message;
};

void check(gk_status st) {
  if (st == GK_OK) return;
  std::string msg = gk_last_error();
  if (gk_last_error_line() > 0) msg = "at " + msg;
  throw LibraryFailure{st, std::string(gk_status_name(st)) + ": " + msg};
}

struct FunctionDeleter {
  void operator()(gk_function* f) const { gk_function_free(f); }
};
using Function = std::unique_ptr<gk_function, FunctionDeleter>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { gk_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Value as its class reads: inf, 0, the number, or unsettled.
std::string estimate_text(const gk_estimate& e) {
  switch (e.cls) {
    case GK_CLASS_INFINITY: return "inf";
    case GK_CLASS_ZERO: return "0";
    case GK_CLASS_UNSETTLED: return "unsettled";
    default: return number(e.value);
  }
}

nlohmann::ordered_json estimate_json(const gk_estimate& e) {
  nlohmann::ordered_json j;
  j["class"] = gk_class_name(e.cls);
  if (std::isfinite(e.value)) j["value"] = e.value;
  else j["value"] = number(e.value);
  j["slope"] = e.slope;
  j["conv_tol"] = e.conv_tol;
  j["points"] = e.points;
  j["absorbed"] = e.absorbed != 0;
  return j;
}

struct Options {
  std::string format = "table";
  std::string out;
  std::string expr;
  std::string profile;
  std::string f;
  std::string g;
  std::string h;
  std::string k;
  int p = 1;
  int q = 1;
  int pmax = 6;
  std::string r;
  std::vector<double> radii;
  std::string s;
  int truncation = 64;
  std::vector<int> theorems;
  std::string suite = "default";
  std::uint64_t seed = 1;
  int regular_count = 50;
  bool corrupt_bound = false;
  std::vector<std::string> inputs;
  gk_grid grid{};
  gk_tolerances tol{};
};

gk_format format_of(const std::string& name) {
  if (name == "csv") return GK_FORMAT_CSV;
  if (name == "json") return GK_FORMAT_JSON;
  return GK_FORMAT_TABLE;
}

// "profile:p,q,rho,lambda[,t0,gamma]" or an expression.
Function load_function(const std::string& spec) {
  gk_function* f = nullptr;
  const std::string prefix = "profile:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<double> v;
    std::stringstream in(spec.substr(prefix.size()));
    in.imbue(std::locale::classic());
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw CLI::ValidationError("profile", "not a number: '" + item + "'");
      }
    }
    if (v.size() != 4 && v.size() != 6) {
      throw CLI::ValidationError("profile", "expected p,q,rho,lambda[,t0,gamma]");
    }
    const double t0 = v.size() == 6 ? v[4] : 0;
    const double gamma = v.size() == 6 ? v[5] : 0;
    check(gk_function_from_profile(static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3], t0,
                                   gamma, &f));
  } else {
    check(gk_function_from_expr(spec.c_str(), &f));
  }
  return Function(f);
}

Function subject(const Options& o) {
  if (!o.profile.empty()) return load_function("profile:" + o.profile);
  if (o.expr.empty()) throw CLI::RequiredError("--expr or --profile");
  return load_function(o.expr);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw CLI::FileError("cannot write " + o.out);
  file << text;
}

std::string key_values(const std::vector<std::pair<std::string, std::string>>& kv,
                       const std::string& format) {
  std::string out;
  if (format == "csv") {
    for (std::size_t i = 0; i < kv.size(); ++i) out += (i ? "," : "") + kv[i].first;
    out += "\n";
    for (std::size_t i = 0; i < kv.size(); ++i) out += (i ? "," : "") + kv[i].second;
    return out + "\n";
  }
  for (std::size_t i = 0; i < kv.size(); ++i) {
    out += (i ? " " : "") + kv[i].first + "=" + kv[i].second;
  }
  return out + "\n";
}

int run_order(const Options& o) {
  Function f = subject(o);
  gk_estimate rho{}, lambda{};
  check(gk_order(f.get(), o.p, o.q, &o.grid, &o.tol, &rho, &lambda));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", "growthkit"}, {"command", "order"}};
    j["rows"] = nlohmann::ordered_json::array(
        {{{"p", o.p}, {"q", o.q}, {"rho", estimate_json(rho)}, {"lambda", estimate_json(lambda)}}});
    emit(o, j.dump(2) + "\n");
  } else if (o.format == "csv") {
    emit(o, key_values({{"p", std::to_string(o.p)},
                        {"q", std::to_string(o.q)},
                        {"rho", number(rho.value)},
                        {"rho_class", gk_class_name(rho.cls)},
                        {"lambda", number(lambda.value)},
                        {"lambda_class", gk_class_name(lambda.cls)}},
                       "csv"));
  } else {
    emit(o, key_values({{"rho", estimate_text(rho)}, {"lambda", estimate_text(lambda)}}, "table"));
  }
  return 0;
}

int run_index_pair(const Options& o) {
  Function f = subject(o);
  int p = 0, q = 0, regular = 0;
  gk_estimate rho{}, lambda{};
  check(gk_index_pair(f.get(), o.pmax, &o.grid, &o.tol, &p, &q, &rho, &lambda, &regular));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", "growthkit"}, {"command", "index-pair"}};
    j["rows"] = nlohmann::ordered_json::array({{{"p", p},
                                                {"q", q},
                                                {"rho", estimate_json(rho)},
                                                {"lambda", estimate_json(lambda)},
                                                {"regular", regular != 0}}});
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, key_values({{"p", std::to_string(p)},
                        {"q", std::to_string(q)},
                        {"rho", estimate_text(rho)},
                        {"lambda", estimate_text(lambda)},
                        {"regular", regular ? "true" : "false"}},
                       o.format));
  }
  return 0;
}

int run_relorder(const Options& o) {
  if (o.f.empty() || o.g.empty()) throw CLI::RequiredError("--f and --g");
  Function f = load_function(o.f);
  Function g = load_function(o.g);
  gk_estimate rho{}, lambda{};
  check(gk_relative_order(f.get(), g.get(), o.p, o.q, &o.grid, &o.tol, &rho, &lambda));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", "growthkit"}, {"command", "relorder"}};
    j["rows"] = nlohmann::ordered_json::array(
        {{{"p", o.p}, {"q", o.q}, {"rho", estimate_json(rho)}, {"lambda", estimate_json(lambda)}}});
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, key_values({{"rho", estimate_text(rho)}, {"lambda", estimate_text(lambda)}}, o.format));
  }
  return 0;
}

int run_maxmod(const Options& o, bool inverse) {
  Function f = subject(o);
  const std::string& arg = inverse ? o.s : o.r;
  if (arg.empty()) throw CLI::RequiredError(inverse ? "--s" : "--r");
  OwnedString value;
  check(inverse ? gk_inverse_max_modulus(f.get(), arg.c_str(), &value.ptr)
                : gk_max_modulus(f.get(), arg.c_str(), &value.ptr));
  double approx = 0;
  check(gk_tower_to_double(value.ptr, &approx));
  const std::string name = inverse ? "r" : "M";
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", "growthkit"}, {"command", inverse ? "invmaxmod" : "maxmod"}};
    j["rows"] = nlohmann::ordered_json::array(
        {{{inverse ? "s" : "r", arg}, {name, value.str()}, {"approx", number(approx)}}});
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, key_values({{inverse ? "s" : "r", arg}, {name, value.str()}, {"approx", number(approx)}},
                       o.format));
  }
  return 0;
}

int run_sandwich(const Options& o) {
  if (o.f.empty() || o.g.empty()) throw CLI::RequiredError("--f and --g");
  if (o.radii.empty()) throw CLI::RequiredError("--r");
  std::vector<gk_sandwich> recs;
  for (double r : o.radii) {
    gk_sandwich rec{};
    check(gk_sandwich_check(o.f.c_str(), o.g.c_str(), r, o.truncation, &rec));
    recs.push_back(rec);
  }
  OwnedString text;
  check(gk_sandwich_format(recs.data(), recs.size(), format_of(o.format), &text.ptr));
  emit(o, text.str());
  for (const auto& rec : recs) {
    if (rec.verdict == GK_VERDICT_FAIL) return kExitFail;
  }
  return 0;
}

int run_verify(const Options& o) {
  gk_suite_config cfg;
  gk_suite_config_default(&cfg);
  cfg.suite = o.suite.c_str();
  cfg.theorems = o.theorems.empty() ? nullptr : o.theorems.data();
  cfg.theorem_count = o.theorems.size();
  cfg.seed = o.seed;
  cfg.grid = o.grid;
  cfg.tol = o.tol;
  cfg.regular_count = o.regular_count;
  cfg.corrupt_bound = o.corrupt_bound ? 1 : 0;
  Function f, g, h, k;
  if (!o.f.empty() || !o.g.empty()) {
    if (o.f.empty() || o.g.empty()) throw CLI::RequiredError("--f and --g together");
    f = load_function(o.f);
    g = load_function(o.g);
    cfg.f = f.get();
    cfg.g = g.get();
  }
  if (!o.h.empty() || !o.k.empty()) {
    if (o.h.empty() || o.k.empty()) throw CLI::RequiredError("--h and --k together");
    h = load_function(o.h);
    k = load_function(o.k);
    cfg.h = h.get();
    cfg.k = k.get();
  }
  gk_suite_result* raw = nullptr;
  check(gk_suite_run(&cfg, &raw));
  std::unique_ptr<gk_suite_result, void (*)(gk_suite_result*)> result(raw, gk_suite_result_free);
  OwnedString text;
  check(gk_suite_result_format(result.get(), format_of(o.format), "verify", &text.ptr));
  emit(o, text.str());
  gk_summary s{};
  check(gk_suite_result_summary(result.get(), &s));
  std::cerr << "reports=" << s.reports << " pass=" << s.pass << " fail=" << s.fail
            << " inconclusive=" << s.inconclusive << " hypothesis_violated=" << s.hypothesis_violated
            << "\n";
  return s.fail > 0 ? kExitFail : 0;
}

int run_report(const Options& o) {
  std::vector<std::string> texts;
  for (const auto& path : o.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::FileError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    texts.push_back(buf.str());
  }
  std::vector<const char*> ptrs;
  for (const auto& t : texts) ptrs.push_back(t.c_str());
  OwnedString text;
  gk_summary s{};
  check(gk_report_aggregate(ptrs.data(), ptrs.size(), format_of(o.format), &text.ptr, &s));
  emit(o, text.str());
  std::cerr << "rows=" << s.rows << " pass=" << s.pass << " fail=" << s.fail
            << " inconclusive=" << s.inconclusive << " hypothesis_violated=" << s.hypothesis_violated
            << "\n";
  return s.fail > 0 ? kExitFail : 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to PATH");
  cmd->add_option("--grid-t0", o.grid.t0, "First grid point t0")->capture_default_str();
  cmd->add_option("--grid-beta", o.grid.beta, "Grid ratio")->capture_default_str();
  cmd->add_option("--grid-points", o.grid.points, "Grid steps J")->capture_default_str();
  cmd->add_option("--tail", o.grid.tail, "Tail fraction")->capture_default_str();
  cmd->add_option("--tol", o.tol.conv_tol, "Convergence tolerance (0 selects the default)");
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

void add_subject(CLI::App* cmd, Options& o) {
  cmd->add_option("--expr", o.expr, "Function expression, or profile:p,q,rho,lambda[,t0,gamma]");
  cmd->add_option("--profile", o.profile, "Growth profile p,q,rho,lambda[,t0,gamma]");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  gk_grid_default(&o.grid);
  gk_tolerances_default(&o.tol);

  CLI::App app{"growthkit: growth of composite entire functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gk_version());

  auto* order = app.add_subcommand("order", "(p,q)-order and lower order");
  add_common(order, o);
  add_subject(order, o);
  order->add_option("--p", o.p, "Outer log count")->capture_default_str();
  order->add_option("--q", o.q, "Inner log count")->capture_default_str();

  auto* index = app.add_subcommand("index-pair", "Smallest admissible index pair");
  add_common(index, o);
  add_subject(index, o);
  index->add_option("--pmax", o.pmax, "Largest p scanned")->capture_default_str();

  auto* rel = app.add_subcommand("relorder", "Relative (p,q)-order of f with respect to g");
  add_common(rel, o);
  rel->add_option("--f", o.f, "Function f")->required();
  rel->add_option("--g", o.g, "Comparison function g")->required();
  rel->add_option("--p", o.p, "Outer log count")->capture_default_str();
  rel->add_option("--q", o.q, "Inner log count")->capture_default_str();

  auto* mm = app.add_subcommand("maxmod", "Maximum modulus M(r)");
  add_common(mm, o);
  add_subject(mm, o);
  mm->add_option("--r", o.r, "Radius, decimal or E^L(x)")->required();

  auto* inv = app.add_subcommand("invmaxmod", "Radius r with M(r) = s");
  add_common(inv, o);
  add_subject(inv, o);
  inv->add_option("--s", o.s, "Target, decimal or E^L(x)")->required();

  auto* sw = app.add_subcommand("sandwich", "Certified composition sandwich at radii r");
  add_common(sw, o);
  sw->add_option("--f", o.f, "Outer expression")->required();
  sw->add_option("--g", o.g, "Inner expression")->required();
  sw->add_option("--r", o.radii, "Radius (repeatable)")->required();
  sw->add_option("--truncation", o.truncation, "Initial series truncation")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run a theorem verification suite");
  ver->set_help_flag("--help", "Print this help message and exit");
  add_common(ver, o);
  ver->add_option("--theorem", o.theorems, "Theorem id 1-8 (repeatable; default all)")
      ->check(CLI::Range(1, 8));
  ver->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"default", "regular"}))
      ->capture_default_str();
  ver->add_option("--regular-count", o.regular_count, "Instances in the regular suite")
      ->capture_default_str();
  ver->add_option("--f", o.f, "Custom outer function");
  ver->add_option("--g", o.g, "Custom inner function");
  ver->add_option("--h", o.h, "Numerator comparator for ratio theorems");
  ver->add_option("--k", o.k, "Denominator comparator for ratio theorems");
  ver->add_flag("--corrupt-bound", o.corrupt_bound, "Inject an inverted bound (harness self-test)");

  auto* rep = app.add_subcommand("report", "Aggregate CSV or JSON report artifacts");
  add_common(rep, o);
  rep->add_option("inputs", o.inputs, "Report files")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*order) return run_order(o);
    if (*index) return run_index_pair(o);
    if (*rel) return run_relorder(o);
    if (*mm) return run_maxmod(o, false);
    if (*inv) return run_maxmod(o, true);
    if (*sw) return run_sandwich(o);
    if (*ver) return run_verify(o);
    if (*rep) return run_report(o);
  } catch (const LibraryFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == GK_ERR_CONFIG || e.status == GK_ERR_NULL_ARGUMENT ? kExitUsage : kExitDomain;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
