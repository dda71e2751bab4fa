// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
// Hand-rolled generators and oracles shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "growthkit/error.hpp"
#include "growthkit/expr.hpp"
#include "growthkit/tower.hpp"

namespace gk::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline TowerReal random_tower(Rng& rng) {
  const int level = uniform_int(rng, 0, 5);
  if (level == 0) {
    const double x = uniform(rng, -50, static_cast<double>(euler()));
    return TowerReal::normalize(0, x);
  }
  const long double x =
      1 + (euler() - 1) * static_cast<long double>(uniform(rng, 0, 1)) * 0.999999L;
  return TowerReal::normalize(level, x);
}

struct OracleSweep {
  int count = 0;
  int failures = 0;
  double max_rel_err = 0;
};

// Random tower operations on operands below 1e300 compared with plain double
// evaluation of the same operation.
inline OracleSweep tower_oracle_sweep(Rng& rng, int n) {
  OracleSweep out;
  auto pow10 = [&](double lo, double hi) { return std::pow(10.0, uniform(rng, lo, hi)); };
  for (int i = 0; i < n; ++i) {
    double expected = 0;
    double got = 0;
    try {
      switch (uniform_int(rng, 0, 5)) {
        case 0: {
          double x = pow10(-300, 299.5), y = pow10(-300, 299.5);
          expected = x + y;
          got = to_real(add(TowerReal::from_real(x), TowerReal::from_real(y)));
          break;
        }
        case 1: {
          double x = pow10(-300, 299.5);
          double y = -x * uniform(rng, 0, 0.5);
          expected = x + y;
          got = to_real(add(TowerReal::from_real(x), TowerReal::from_real(y)));
          break;
        }
        case 2: {
          double x = pow10(-150, 150), y = pow10(-150, 149);
          expected = x * y;
          got = to_real(mul(TowerReal::from_real(x), TowerReal::from_real(y)));
          break;
        }
        case 3: {
          double x = pow10(-20, 20);
          double s = uniform(rng, 0.05, 14);
          expected = std::pow(x, s);
          got = to_real(pow_scalar(TowerReal::from_real(x), s));
          break;
        }
        case 4: {
          int k = uniform_int(rng, 1, 3);
          double x = k == 1 ? pow10(-300, 300) : k == 2 ? pow10(0.01, 300) : pow10(0.5, 300);
          expected = x;
          for (int j = 0; j < k; ++j) expected = std::log(expected);
          got = to_real(log_k(TowerReal::from_real(x), k));
          break;
        }
        default: {
          int k = uniform_int(rng, 1, 3);
          double x = k == 1 ? uniform(rng, -690, 690) : k == 2 ? uniform(rng, -5, 6.5)
                                                               : uniform(rng, -2, 1.8);
          expected = x;
          for (int j = 0; j < k; ++j) expected = std::exp(expected);
          got = to_real(exp_k(TowerReal::from_real(x), k));
          break;
        }
      }
    } catch (const Error&) {
      ++out.failures;
      ++out.count;
      continue;
    }
    ++out.count;
    double err = expected == got ? 0.0
                                 : std::fabs(expected - got) /
                                       std::max(std::fabs(expected), std::fabs(got));
    out.max_rel_err = std::max(out.max_rel_err, err);
    if (!(err <= 1e-12)) ++out.failures;
  }
  return out;
}

inline double random_coefficient(Rng& rng) {
  switch (uniform_int(rng, 0, 3)) {
    case 0: return static_cast<double>(uniform_int(rng, 0, 9));
    case 1: return uniform_int(rng, 1, 8) / 4.0;
    case 2: return uniform(rng, 0, 100);
    default: return std::pow(10.0, uniform(rng, -8, 8));
  }
}

// Arbitrary trees over every node kind, for the grammar round trip.
inline EntireExpr random_ast(Rng& rng, int depth) {
  if (depth <= 0 || uniform_int(rng, 0, 4) == 0) {
    switch (uniform_int(rng, 0, 2)) {
      case 0: return EntireExpr::variable();
      case 1: return EntireExpr::monomial(static_cast<unsigned>(uniform_int(rng, 1, 12)));
      default: return EntireExpr::constant(random_coefficient(rng));
    }
  }
  auto children = [&] {
    std::vector<EntireExpr> out;
    const int n = uniform_int(rng, 2, 3);
    for (int i = 0; i < n; ++i) out.push_back(random_ast(rng, depth - 1));
    return out;
  };
  switch (uniform_int(rng, 0, 4)) {
    case 0: return EntireExpr::sum(children());
    case 1: return EntireExpr::product(children());
    case 2: {
      double c = random_coefficient(rng);
      if (c == 0) c = 1.5;
      return EntireExpr::scale(c, random_ast(rng, depth - 1));
    }
    case 3:
      return EntireExpr::exp_iter(static_cast<unsigned>(uniform_int(rng, 1, 3)),
                                  random_ast(rng, depth - 1));
    default:
      return EntireExpr::compose_node(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
  }
}

inline EntireExpr random_nonconstant_ast(Rng& rng, int depth) {
  for (;;) {
    EntireExpr e = random_ast(rng, depth);
    if (!e.is_constant()) return e;
  }
}

// Moderate-growth family members for series-based checks.
inline EntireExpr random_gentle(Rng& rng, int depth, bool allow_exp = true) {
  if (depth <= 0 || uniform_int(rng, 0, 3) == 0) {
    switch (uniform_int(rng, 0, 3)) {
      case 0:
      case 1: return EntireExpr::monomial(static_cast<unsigned>(uniform_int(rng, 1, 3)));
      case 2: return EntireExpr::variable();
      default: return EntireExpr::constant(uniform_int(rng, 0, 4) / 2.0);
    }
  }
  const int kind = uniform_int(rng, 0, allow_exp ? 3 : 2);
  switch (kind) {
    case 0:
      return EntireExpr::sum({random_gentle(rng, depth - 1, allow_exp),
                              random_gentle(rng, depth - 1, allow_exp)});
    case 1:
      return EntireExpr::product({random_gentle(rng, depth - 1, allow_exp),
                                  random_gentle(rng, depth - 1, allow_exp)});
    case 2:
      return EntireExpr::scale(uniform_int(rng, 1, 6) / 2.0, random_gentle(rng, depth - 1, allow_exp));
    default:
      return EntireExpr::exp_iter(1, random_gentle(rng, depth - 1, false));
  }
}

inline EntireExpr random_gentle_nonconstant(Rng& rng, int depth, bool allow_exp = true) {
  for (;;) {
    EntireExpr e = random_gentle(rng, depth, allow_exp);
    if (!e.is_constant()) return e;
  }
}

}  // namespace gk::test
