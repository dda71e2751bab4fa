// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "growthkit/error.hpp"
#include "growthkit/tower.hpp"
#include "support.hpp"

using namespace gk;

namespace {

long double rel(long double a, long double b) {
  if (a == b) return 0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

TEST_CASE("normalize lifts large level-0 values into the band") {
  TowerReal v = TowerReal::normalize(0, 100);
  CHECK(v.level() == 2);
  CHECK(static_cast<double>(v.mantissa()) == doctest::Approx(std::log(std::log(100.0))).epsilon(1e-15));
  CHECK(v.mantissa() >= 1);
  CHECK(v.mantissa() < euler());
}

TEST_CASE("normalize keeps canonical values and lowers sub-band mantissas") {
  TowerReal one = TowerReal::normalize(1, 1.0L);
  CHECK(one.level() == 1);
  CHECK(one.mantissa() == 1.0L);

  TowerReal v = TowerReal::normalize(3, 0.5L);
  CHECK(v.level() == 2);
  CHECK(static_cast<double>(v.mantissa()) == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
}

TEST_CASE("normalize rejects non-finite mantissas") {
  CHECK_THROWS_AS(TowerReal::normalize(0, INFINITY), Error);
  CHECK_THROWS_AS(TowerReal::normalize(2, NAN), Error);
}

TEST_CASE("log_k examples") {
  TowerReal five = TowerReal::from_real(5);
  CHECK(log_k(exp_k(five, 3), 3) == five);
  TowerReal v = log_k(TowerReal::normalize(2, 1.2L), 1);
  CHECK(v.level() == 1);
  CHECK(v.mantissa() == 1.2L);
  TowerReal h = log_k(TowerReal::from_real(0.5L), 1);
  CHECK(h.level() == 0);
  CHECK(static_cast<double>(h.mantissa()) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
  CHECK(log_k(v, 0) == v);
}

TEST_CASE("log_k of nonpositive values is a domain error") {
  try {
    log_k(TowerReal::from_real(-1), 1);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
  CHECK_THROWS_AS(log_k(TowerReal::from_real(0.5), 2), Error);
}

TEST_CASE("exp_k examples") {
  TowerReal v = exp_k(TowerReal::normalize(1, 1.5L), 2);
  CHECK(v.level() == 3);
  CHECK(v.mantissa() == 1.5L);
  TowerReal one = exp_k(TowerReal::zero(), 1);
  CHECK(one.level() == 0);
  CHECK(one.mantissa() == 1.0L);
  TowerReal w = exp_k(TowerReal::from_real(10), 1);
  CHECK(w.level() == 2);
  CHECK(static_cast<double>(w.mantissa()) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
}

TEST_CASE("arithmetic examples") {
  TowerReal s = add(TowerReal::from_real(3), TowerReal::from_real(4));
  CHECK(s == TowerReal::from_real(7));

  TowerReal p = mul(TowerReal::normalize(1, 2), TowerReal::normalize(1, 2));
  CHECK(p.level() == 2);
  CHECK(static_cast<double>(p.mantissa()) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(to_real(p) == doctest::Approx(std::exp(4.0)).epsilon(1e-14));

  TowerReal big = TowerReal::normalize(5, 1.3L);
  TowerReal a = add(big, TowerReal::from_real(10));
  CHECK(a == big);
  CHECK(a.absorbed());
  CHECK_FALSE(s.absorbed());
}

TEST_CASE("sub_guarded") {
  TowerReal d = sub_guarded(TowerReal::from_real(100), TowerReal::from_real(1));
  CHECK(to_real(d) == doctest::Approx(99).epsilon(1e-15));
  CHECK_THROWS_AS(sub_guarded(TowerReal::from_real(1), TowerReal::from_real(1)), Error);
  CHECK_THROWS_AS(sub_guarded(TowerReal::from_real(1), TowerReal::from_real(2)), Error);
  // e^e^e^10 minus a small value is the large value itself.
  TowerReal huge = exp_k(TowerReal::from_real(10), 3);
  CHECK(sub_guarded(huge, TowerReal::from_real(5)) == huge);
}

TEST_CASE("to_real examples") {
  CHECK(to_real(TowerReal::from_real(2.5)) == 2.5);
  CHECK(to_real(TowerReal::normalize(1, 1)) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  try {
    to_real(TowerReal::normalize(9, 1.5L));
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("text rendering round-trips exactly") {
  TowerReal v = TowerReal::from_real(100);
  CHECK(to_string(v).rfind("E^2(1.5271796258079", 0) == 0);
  test::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    TowerReal w = test::random_tower(rng);
    CHECK(parse_tower(to_string(w)) == w);
  }
  CHECK(parse_tower("42") == TowerReal::from_real(42));
  CHECK_THROWS_AS(parse_tower("E^2(1.5"), Error);
  CHECK_THROWS_AS(parse_tower("abc"), Error);
}

TEST_CASE("property: log_k undoes exp_k exactly") {
  test::Rng rng(1);
  for (int i = 0; i < 5000; ++i) {
    TowerReal v = test::random_tower(rng);
    if (!v.is_positive()) continue;
    std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(0, 6)(rng);
    if (v.level() < 1 && v.mantissa() < 1) continue;
    CHECK(log_k(exp_k(v, k), k) == v);
  }
}

TEST_CASE("property: log_k and exp_k are monotone") {
  test::Rng rng(2);
  for (int i = 0; i < 5000; ++i) {
    TowerReal a = test::random_tower(rng);
    TowerReal b = test::random_tower(rng);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
    CHECK(exp_k(a, k) <= exp_k(b, k));
    try {
      TowerReal la = log_k(a, k);
      TowerReal lb = log_k(b, k);
      CHECK(la <= lb);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("property: normalize is idempotent") {
  test::Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    TowerReal v = test::random_tower(rng);
    TowerReal w = TowerReal::normalize(v.level(), v.mantissa());
    CHECK(w == v);
  }
}

TEST_CASE("property: order agrees with real order when representable") {
  test::Rng rng(4);
  std::uniform_real_distribution<double> ex(-300, 300);
  for (int i = 0; i < 5000; ++i) {
    double x = std::pow(10.0, ex(rng));
    double y = std::pow(10.0, ex(rng));
    TowerReal a = TowerReal::from_real(x);
    TowerReal b = TowerReal::from_real(y);
    CHECK((a < b) == (x < y));
  }
}

TEST_CASE("property: arithmetic agrees with direct evaluation below 1e300") {
  test::Rng rng(5);
  const auto report = test::tower_oracle_sweep(rng, 10000);
  CHECK(report.failures == 0);
  CHECK(report.max_rel_err <= 1e-12);
  MESSAGE("max relative error " << report.max_rel_err);
}

TEST_CASE("level-index coordinate is continuous and invertible") {
  CHECK(psi(TowerReal::from_real(0.5)) == 0.5L);
  CHECK(rel(psi(TowerReal::normalize(1, 1)), 2) < 1e-18);
  test::Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    TowerReal v = test::random_tower(rng);
    if (v.is_negative()) continue;
    TowerReal w = from_psi(psi(v));
    CHECK(comparison_metric(v, w) < 1e-15);
  }
}

TEST_CASE("comparison metric") {
  TowerReal a = exp_k(TowerReal::from_real(3), 4);
  CHECK(comparison_metric(a, a) == 0);
  TowerReal b = exp_k(TowerReal::from_real(3.0L * (1 + 1e-10L)), 4);
  CHECK(comparison_metric(a, b) > 0);
  CHECK(comparison_metric(a, b) < 1e-9);
  CHECK(std::isinf(comparison_metric(a, TowerReal::from_real(-1))));
}
