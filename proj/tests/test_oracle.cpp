// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "growthkit/error.hpp"
#include "growthkit/growth_object.hpp"
#include "growthkit/series.hpp"
#include "support.hpp"

using namespace gk;

namespace {

std::vector<double> real_parts(const PowerSeries& s) {
  std::vector<double> out;
  for (const auto& c : s.coefficients()) out.push_back(c.real());
  return out;
}

bool close(const std::vector<double>& got, const std::vector<double>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (std::fabs(got[i] - want[i]) > 1e-15 * std::max(1.0, std::fabs(want[i]))) return false;
  }
  return true;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidValue;
}

}  // namespace

TEST_CASE("series_from_expr examples") {
  CHECK(close(real_parts(series_from_expr(parse_expr("exp(z)"), 4)),
              {1, 1, 0.5, 1.0 / 6, 1.0 / 24}));
  CHECK(close(real_parts(series_from_expr(parse_expr("z^3"), 5)), {0, 0, 0, 1, 0, 0}));
  CHECK(close(real_parts(series_from_expr(parse_expr("exp(z^2)"), 4)), {1, 0, 1, 0, 0.5}));
}

TEST_CASE("series coefficients of composed and nested expressions") {
  // exp(exp(z)) = e * sum B_n z^n / n! with Bell numbers 1, 1, 2, 5, 15, 52.
  const double e = std::exp(1.0);
  CHECK(close(real_parts(series_from_expr(parse_expr("exp[2](z)"), 5)),
              {e, e, e, e * 5 / 6, e * 15 / 24, e * 52 / 120}));
  CHECK(close(real_parts(series_from_expr(parse_expr("(z + z^2) o (2 * z)"), 3)), {0, 2, 4, 0}));
  CHECK(close(real_parts(series_from_expr(parse_expr("3 + z * z^2"), 4)), {3, 0, 0, 1, 0}));
}

TEST_CASE("max_modulus_circle examples") {
  Interval a = max_modulus_circle(series_from_expr(parse_expr("exp(z)"), 64), 1.0);
  CHECK(a.contains(std::exp(1.0)));
  CHECK(a.width() < 1e-9);
  Interval b = max_modulus_circle(series_from_expr(parse_expr("z + z^2"), 8), 2.0);
  CHECK(b.contains(6.0));
  Interval c = max_modulus_circle(series_from_expr(parse_expr("exp(z^2)"), 64), 1.5);
  CHECK(c.contains(std::exp(2.25)));
}

TEST_CASE("series guard radius") {
  PowerSeries s = series_from_expr(parse_expr("exp(z)"), 16);
  CHECK(code_of([&] { max_modulus_circle(s, 30.0); }) == ErrorCode::GuardRadiusExceeded);
}

TEST_CASE("circle maximum is found away from the positive axis") {
  // |1 - z| ... is not in the family, so build a series directly:
  // p(z) = 1 - z^2 on |z| = 1 peaks at z = +-i with value 2.
  PowerSeries s({{1, 0}, {0, 0}, {-1, 0}}, std::monostate{});
  Interval v = max_modulus_circle(s, 1.0);
  CHECK(v.contains(2.0));
  CHECK(v.width() < 1e-8);
  // q(z) = 1 + i z on |z| = 2 peaks at 3.
  PowerSeries t({{1, 0}, {0, 1}}, std::monostate{});
  CHECK(max_modulus_circle(t, 2.0).contains(3.0));
}

TEST_CASE("property: circle enclosure contains the positive-axis value") {
  test::Rng rng(31);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    EntireExpr f = test::random_gentle_nonconstant(rng, 3);
    double r = test::uniform(rng, 0.2, 2.5);
    TowerReal exact = evaluate(f, TowerReal::from_real(r));
    auto x = to_extended(exact);
    if (!x || *x > 1e200) continue;
    try {
      Interval v = max_modulus_circle(series_from_expr(f, 96), r);
      CHECK_MESSAGE(v.contains(static_cast<double>(*x)), print(f) << " r=" << r);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GuardRadiusExceeded);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: closed-form products of exp and monomials") {
  test::Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    int m = test::uniform_int(rng, 1, 4);
    int n = test::uniform_int(rng, 1, 3);
    double r = test::uniform(rng, 0.3, 1.8);
    EntireExpr f = EntireExpr::product({EntireExpr::monomial(static_cast<unsigned>(m)),
                                        EntireExpr::exp_iter(1, EntireExpr::monomial(static_cast<unsigned>(n)))});
    double exact = std::pow(r, m) * std::exp(std::pow(r, n));
    CHECK(max_modulus_circle(series_from_expr(f, 128), r).contains(exact));
  }
}

TEST_CASE("compare_le") {
  CHECK(compare_le({1, 2}, {3, 4}) == Verdict::Pass);
  CHECK(compare_le({3, 4}, {1, 2}) == Verdict::Fail);
  CHECK(compare_le({1, 3}, {2, 4}) == Verdict::Inconclusive);
  CHECK(compare_le({1, 1 + 1e-7}, {1, 1 + 1e-7}) == Verdict::Pass);
}

TEST_CASE("check_sandwich examples") {
  SandwichRecord id = check_sandwich(parse_expr("z"), parse_expr("z"), 5.0);
  CHECK(id.lower.contains(0.3125));
  CHECK(id.middle.contains(5.0));
  CHECK(id.upper.contains(5.0));
  CHECK(id.verdict == Verdict::Pass);

  SandwichRecord ex = check_sandwich(parse_expr("exp(z)"), parse_expr("exp(z)"), 4.5);
  CHECK(ex.verdict == Verdict::Pass);
  CHECK(ex.upper.contains(std::exp(std::exp(4.5))));

  SandwichRecord c = check_sandwich(parse_expr("exp(z^2)"), parse_expr("z + z^3"), 1.2);
  CHECK(c.verdict == Verdict::Pass);
  const double g = 1.2 + std::pow(1.2, 3);
  CHECK(c.upper.contains(std::exp(g * g)));
}

TEST_CASE("check_sandwich rejects a nonpositive lower argument") {
  // M_g(1)/8 - |g(0)| = e/8 - 1 < 0.
  CHECK(code_of([] { check_sandwich(parse_expr("exp(z)"), parse_expr("exp(z)"), 2.0); }) ==
        ErrorCode::NonpositiveArgument);
}

TEST_CASE("sandwich CSV row") {
  SandwichRecord id = check_sandwich(parse_expr("z"), parse_expr("z"), 5.0);
  CHECK(sandwich_csv_header() == "r,lower_lo,lower_hi,mid_lo,mid_hi,upper_lo,upper_hi,verdict\n");
  std::string row = sandwich_csv_row(id);
  CHECK(row.rfind("5,0.3125", 0) == 0);
  CHECK(row.find(",Pass\n") != std::string::npos);
}

TEST_CASE("property: composition sandwich never fails on random pairs") {
  test::Rng rng(33);
  auto start = std::chrono::steady_clock::now();
  int pass = 0, inconclusive = 0, skipped = 0;
  for (int i = 0; i < 60; ++i) {
    EntireExpr f = test::random_gentle_nonconstant(rng, 2);
    EntireExpr g = test::random_gentle_nonconstant(rng, 2, false);
    for (int k = 0; k < 3; ++k) {
      double r = test::uniform(rng, 0.5, 3.0);
      try {
        SandwichRecord rec = check_sandwich(f, g, r);
        CHECK_MESSAGE(rec.verdict != Verdict::Fail, print(f) << " | " << print(g) << " r=" << r);
        if (rec.verdict == Verdict::Pass) ++pass;
        else ++inconclusive;
      } catch (const Error& e) {
        CHECK_MESSAGE((e.code() == ErrorCode::GuardRadiusExceeded || e.code() == ErrorCode::NonpositiveArgument ||
                       e.code() == ErrorCode::Overflow),
                      std::string(e.what()));
        ++skipped;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("pass=" << pass << " inconclusive=" << inconclusive << " skipped=" << skipped
                  << " seconds=" << secs);
  CHECK(pass > 60);
}

TEST_CASE("rescaled series certify radii where plain coefficients underflow") {
  EntireExpr ee = parse_expr("exp(z) o exp(z)");
  const double exact = std::exp(std::exp(4.5));
  CHECK_THROWS_AS(max_modulus_circle(series_from_expr(ee, 1024), 4.5), Error);
  Interval v = max_modulus_circle(series_from_expr(ee, 1024, 4.5), 1.0);
  CHECK(v.contains(exact));
  CHECK(v.width() / exact < 1e-6);
  PowerSeries s = series_from_expr(parse_expr("exp(z)"), 4, 2.0);
  CHECK(close(real_parts(s), {1, 2, 2, 8.0 / 6, 16.0 / 24}));
}

TEST_CASE("series agrees with tower evaluation at small radii") {
  test::Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    EntireExpr f = test::random_gentle_nonconstant(rng, 3);
    double r = test::uniform(rng, 0.1, 1.5);
    auto exact = to_extended(GrowthObject(f).max_modulus(TowerReal::from_real(r)));
    REQUIRE(exact);
    PowerSeries s = series_from_expr(f, 96);
    double v = std::abs(s.eval({r, 0}));
    double bound = s.error_bound(r) + 1e-13 * v;
    CHECK(std::fabs(v - static_cast<double>(*exact)) <= bound);
  }
}
