// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "growthkit/error.hpp"
#include "growthkit/expr.hpp"
#include "growthkit/growth.hpp"
#include "growthkit/profile.hpp"
#include "growthkit/series.hpp"
#include "growthkit/suite.hpp"
#include "growthkit/verify.hpp"
#include "support.hpp"

#ifndef GK_CLI_PATH
#error "GK_CLI_PATH must name the growthkit executable"
#endif

using namespace gk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GrowthObject E(const std::string& text) { return GrowthObject(parse_expr(text)); }

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  CommandResult res;
  const std::string cmd = std::string("\"") + GK_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return res;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome criterion1() {
  const auto start = Clock::now();
  std::ostringstream d;
  bool ok = true;
  for (int m : {1, 3, 7}) {
    const OrderEstimate o = pq_order(E("exp(z^" + std::to_string(m) + ")"), 2, 1);
    const double er = std::fabs(o.rho.value - m), el = std::fabs(o.lambda.value - m);
    ok = ok && o.rho.finite() && o.lambda.finite() && er <= 1e-9 && el <= 1e-9;
    d << "m=" << m << " err=" << std::max(er, el) << " ";
  }
  const double secs = seconds_since(start);
  d << "time=" << secs << "s";
  return {ok && secs < 1.0, d.str()};
}

Outcome criterion2() {
  std::ostringstream d;
  bool ok = true;
  double worst = 0;
  for (int l : {2, 3}) {
    for (int m : {2, 5}) {
      const GrowthObject f = E("exp[" + std::to_string(l) + "](z^" + std::to_string(m) + ")");
      const OrderEstimate at = pq_order(f, l + 1, 1);
      worst = std::max({worst, std::fabs(at.rho.value - m), std::fabs(at.lambda.value - m)});
      ok = ok && at.rho.finite() && at.lambda.finite();
      for (int p = 2; p <= l; ++p) ok = ok && pq_order(f, p, 1).rho.cls == GrowthClass::Infinity;
      ok = ok && pq_order(f, l + 2, 1).rho.cls == GrowthClass::Zero;
    }
  }
  d << "worst err=" << worst;
  return {ok && worst <= 1e-9, d.str()};
}

Outcome criterion3() {
  std::ostringstream d;
  bool ok = true;
  for (int k : {1, 2, 3}) {
    for (int n : {2, 4}) {
      const GrowthObject f = E("exp[" + std::to_string(k) + "](z^" + std::to_string(n) + ")");
      const IndexPairResult r = detect_index_pair(f);
      const bool good = r.p == k + 1 && r.q == 1 && std::fabs(r.rho.value - n) <= 1e-6 &&
                        r.regular && r.consistent && !r.cells.empty();
      if (!good) d << "k=" << k << " n=" << n << " got (" << r.p << "," << r.q << ") ";
      ok = ok && good;
    }
  }
  if (ok) d << "6 functions, all (k+1,1), consistency cells classified";
  return {ok, d.str()};
}

Outcome criterion4() {
  const OrderEstimate o = relative_order(E("exp[2](z^6)"), E("exp[2](z^3)"));
  std::ostringstream d;
  d << "rho=" << o.rho.value << " lambda=" << o.lambda.value;
  return {std::fabs(o.rho.value - 2) <= 1e-6 && std::fabs(o.lambda.value - 2) <= 1e-6, d.str()};
}

Outcome criterion5() {
  const EntireExpr f = parse_expr("exp(z^2)"), g = parse_expr("z^3");
  const OrderEstimate o = pq_order(GrowthObject(compose(f, g)), 2, 1);
  const CompositionCase c = make_case("a5", GrowthObject(f), GrowthObject(g));
  const VerificationReport rep = check_theorem1(c);
  const double product = c.mf.rho.value * c.mg.rho.value;
  std::ostringstream d;
  d << "rho_fg=" << o.rho.value << " rho_f*rho_g=" << product << " verdict="
    << verdict_name(rep.verdict());
  return {std::fabs(o.rho.value - 6) <= 1e-6 && std::fabs(product - 6) <= 1e-6 &&
              rep.verdict() == Verdict::Pass,
          d.str()};
}

Outcome criterion6() {
  const EntireExpr f = parse_expr("exp(z^2)"), g = parse_expr("exp(z^3)");
  const IndexPairResult r = detect_index_pair(GrowthObject(compose(f, g)));
  const CompositionCase c = make_case("a6", GrowthObject(f), GrowthObject(g));
  std::ostringstream d;
  d << "pair=(" << r.p << "," << r.q << ") rho=" << r.rho.value << " rho_g=" << c.mg.rho.value;
  return {r.p == 3 && r.q == 1 && std::fabs(r.rho.value - 3) <= 1e-6 &&
              std::fabs(c.mg.rho.value - 3) <= 1e-6 && check_theorem1(c).verdict() == Verdict::Pass,
          d.str()};
}

Outcome criterion7() {
  const auto start = Clock::now();
  test::Rng rng(7);
  int pass = 0, inconclusive = 0, fail = 0, skipped = 0;
  for (int i = 0; i < 200; ++i) {
    const EntireExpr f = test::random_gentle_nonconstant(rng, 2);
    const EntireExpr g = test::random_gentle_nonconstant(rng, 2, false);
    for (int k = 0; k < 5; ++k) {
      const double r = test::uniform(rng, 0.5, 3.0);
      try {
        const SandwichRecord rec = check_sandwich(f, g, r);
        if (rec.verdict == Verdict::Fail) ++fail;
        else if (rec.verdict == Verdict::Pass) ++pass;
        else ++inconclusive;
      } catch (const Error& e) {
        // Outside guard limits: the oracle declines rather than guessing.
        if (e.code() != ErrorCode::GuardRadiusExceeded && e.code() != ErrorCode::NonpositiveArgument &&
            e.code() != ErrorCode::Overflow) {
          ++fail;
        }
        ++skipped;
      }
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "pass=" << pass << " inconclusive=" << inconclusive << " fail=" << fail
    << " outside-guard=" << skipped << " time=" << secs << "s";
  return {fail == 0 && pass >= 200 && secs < 30, d.str()};
}

Outcome criterion8() {
  const OrderEstimate o = pq_order(GrowthObject(make_profile(2, 2, 2.0, 1.5)), 2, 2);
  std::ostringstream d;
  d << "rho=" << o.rho.value << " lambda=" << o.lambda.value;
  return {std::fabs(o.rho.value - 2.0) <= 0.04 && std::fabs(o.lambda.value - 1.5) <= 0.03, d.str()};
}

Outcome criterion9() {
  test::Rng rng(9);
  double worst = 0;
  int checked = 0;
  while (checked < 100) {
    const GrowthObject f(test::random_gentle_nonconstant(rng, 3));
    const TowerReal s = exp_k(TowerReal::from_real(test::uniform(rng, 1.5, 2.7)),
                              static_cast<std::uint32_t>(test::uniform_int(rng, 1, 4)));
    if (!(f.anchor() < s)) continue;
    worst = std::max(worst, static_cast<double>(comparison_metric(f.max_modulus(inverse_max_modulus(f, s)), s)));
    ++checked;
  }
  std::ostringstream d;
  d << "100 functions, worst metric=" << worst;
  return {worst <= 1e-9, d.str()};
}

Outcome criterion10() {
  SuiteConfig cfg;
  cfg.suite = "regular";
  cfg.regular_count = 50;
  const SuiteResult r = run_suite(cfg);
  bool cases[3] = {false, false, false};
  bool ratio_ii = false;
  for (const auto& rep : r.reports) {
    if (rep.theorem == 1) {
      cases[0] = cases[0] || rep.case_tag == "i";
      cases[1] = cases[1] || rep.case_tag == "ii";
      cases[2] = cases[2] || rep.case_tag == "iii";
    } else {
      ratio_ii = ratio_ii || rep.case_tag == "ii";
    }
  }
  const CommandResult cli = run_cli("verify --suite regular --format csv");
  std::ostringstream d;
  d << "reports=" << r.summary.reports << " pass=" << r.summary.pass
    << " max chain spread=" << r.max_chain_spread << " cli exit=" << cli.status;
  return {r.summary.reports == 50 && r.summary.pass == 50 && cases[0] && cases[1] && cases[2] &&
              ratio_ii && r.max_chain_spread <= kConvTolSymbolic && cli.status == 0,
          d.str()};
}

Outcome criterion11() {
  test::Rng rng(11);
  const test::OracleSweep s = test::tower_oracle_sweep(rng, 10000);
  std::ostringstream d;
  d << "ops=" << s.count << " failures=" << s.failures << " max rel err=" << s.max_rel_err;
  return {s.count == 10000 && s.failures == 0 && s.max_rel_err <= 1e-12, d.str()};
}

Outcome criterion12() {
  test::Rng rng(12);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const EntireExpr e = test::random_nonconstant_ast(rng, 4);
    const std::string text = print(e);
    const EntireExpr back = parse_expr(text);
    if (!(back == e) || print(back) != text) ++mismatches;
  }
  const std::string args = "verify --suite regular --regular-count 14 --seed 5 --format csv";
  const CommandResult a = run_cli(args);
  const CommandResult b = run_cli(args);
  std::ostringstream d;
  d << "round-trip mismatches=" << mismatches << " csv bytes=" << a.out.size()
    << " identical=" << (a.out == b.out ? "yes" : "no");
  return {mismatches == 0 && a.status == 0 && !a.out.empty() && a.out == b.out, d.str()};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 12> criteria = {{
      {"order of exp(z^m)", criterion1},
      {"generalized order and classes of exp^[l](z^m)", criterion2},
      {"index pair of exp^[k](z^n)", criterion3},
      {"relative order of exp^[2](z^6) against exp^[2](z^3)", criterion4},
      {"composition order, q = m", criterion5},
      {"composition index pair and order, q < m", criterion6},
      {"composition sandwich property suite", criterion7},
      {"oscillating profile recovery", criterion8},
      {"inverse maximum modulus round trip", criterion9},
      {"regular-instance collapse", criterion10},
      {"tower arithmetic oracle agreement", criterion11},
      {"grammar round trip and CSV determinism", criterion12},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
