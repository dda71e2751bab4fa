// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "growthkit/expr.hpp"
#include "growthkit/verdict.hpp"

namespace gk {

struct Interval {
  double lo = 0;
  double hi = 0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

// Truncated Taylor series a_0..a_N with a rigorous bound on what was cut off.
class PowerSeries {
 public:
  using Coeff = std::complex<double>;

  // |a_n| <= c * radius^-n for n > N.
  struct GeometricTail {
    double c;
    double radius;
  };
  // Nonnegative-coefficient expression whose value at r bounds the full sum.
  struct MajorantTail {
    EntireExpr majorant;
  };
  using Tail = std::variant<std::monostate, GeometricTail, MajorantTail>;

  PowerSeries(std::vector<Coeff> coeffs, Tail tail, double coeff_rel_err = 0);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }
  const Tail& tail() const noexcept { return tail_; }
  // Bound on |computed a_n - exact a_n| relative to |a_n|.
  double coeff_rel_err() const noexcept { return coeff_rel_err_; }

  Coeff eval(Coeff z) const;
  // Bound on |f(z) - s_N(z)| for |z| = r, including coefficient rounding.
  // Infinite when the tail model cannot certify r.
  double error_bound(double r) const;

 private:
  std::vector<Coeff> coeffs_;
  Tail tail_;
  double coeff_rel_err_;
};

// Taylor coefficients of w -> f(scale * w). A scale near the evaluation radius
// keeps high-order coefficients out of the subnormal range.
PowerSeries series_from_expr(const EntireExpr& f, int truncation, double scale = 1);

struct CircleOptions {
  int samples = 4096;
  double guard = 1e-6;
  // Refinement stops once the certified upper end is within this relative gap.
  double target_gap = 1e-9;
  long max_evaluations = 400000;
};

// Certified enclosure of max_{|z|=r} |f(z)|. Throws GuardRadiusExceeded when the
// truncation error exceeds guard * value.
Interval max_modulus_circle(const PowerSeries& s, double r, const CircleOptions& opt = {});

struct SandwichRecord {
  double r = 0;
  Interval lower;
  Interval middle;
  Interval upper;
  Verdict verdict = Verdict::Inconclusive;
  int truncation = 0;
};

// Relative width below which overlapping enclosures count as equal.
inline constexpr double kSandwichResolution = 1e-5;

Verdict compare_le(const Interval& a, const Interval& b);

// Checks M_f(M_g(r/2)/8 - |g(0)|) <= M_{f o g}(r) <= M_f(M_g(r)) with series
// enclosures. The truncation starts at `truncation` and doubles on guard
// failures up to `max_truncation`.
SandwichRecord check_sandwich(const EntireExpr& f, const EntireExpr& g, double r,
                              int truncation = 64, int max_truncation = 1024);

std::string sandwich_csv_header();
std::string sandwich_csv_row(const SandwichRecord& rec);

}  // namespace gk
