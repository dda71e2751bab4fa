// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "growthkit/error.hpp"
#include "growthkit/format.hpp"

namespace gk {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr long double kUnitLd = std::numeric_limits<long double>::epsilon();

using Coeff = PowerSeries::Coeff;

// Truncated series with a bound on the relative coefficient error. All series
// built from the family have nonnegative coefficients, which is what makes the
// relative bound propagate through products and exp.
struct Tracked {
  std::vector<Coeff> c;
  double err = 0;
};

Tracked constant_series(std::size_t len, double v) {
  Tracked t{std::vector<Coeff>(len, 0.0), 0};
  t.c[0] = v;
  return t;
}

Tracked add_series(const Tracked& a, const Tracked& b) {
  Tracked out{a.c, std::max(a.err, b.err) + kUnit};
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Tracked mul_series(const Tracked& a, const Tracked& b) {
  const std::size_t len = a.c.size();
  Tracked out{std::vector<Coeff>(len, 0.0), 0};
  for (std::size_t i = 0; i < len; ++i) {
    if (a.c[i] == Coeff(0)) continue;
    for (std::size_t j = 0; i + j < len; ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  out.err = a.err + b.err + a.err * b.err + static_cast<double>(len + 2) * kUnit;
  return out;
}

Tracked scale_series(const Tracked& a, double s) {
  Tracked out{a.c, a.err + kUnit};
  for (auto& x : out.c) x *= s;
  return out;
}

Tracked pow_series(Tracked base, unsigned n) {
  Tracked acc = constant_series(base.c.size(), 1.0);
  bool first = true;
  while (n) {
    if (n & 1u) {
      acc = first ? base : mul_series(acc, base);
      first = false;
    }
    n >>= 1u;
    if (n) base = mul_series(base, base);
  }
  return acc;
}

Tracked exp_series(const Tracked& a) {
  const std::size_t len = a.c.size();
  Tracked out{std::vector<Coeff>(len, 0.0), 0};
  out.c[0] = std::exp(a.c[0]);
  for (std::size_t n = 1; n < len; ++n) {
    Coeff s = 0;
    for (std::size_t j = 1; j <= n; ++j) s += static_cast<double>(j) * a.c[j] * out.c[n - j];
    out.c[n] = s / static_cast<double>(n);
  }
  // Coefficient n of exp((1+e)A) is at most (1+e)^n times that of exp(A), and
  // e^{a0 e} accounts for the constant term.
  const double n = static_cast<double>(len);
  const double inherited =
      std::expm1(n * std::log1p(a.err) + std::abs(a.c[0]) * a.err);
  out.err = inherited + (n * n / 2 + 3 * n + 2) * kUnit;
  return out;
}

Tracked series_eval(const EntireExpr& f, const Tracked& var) {
  const std::size_t len = var.c.size();
  switch (f.kind()) {
    case NodeKind::Variable:
      return var;
    case NodeKind::Const:
      return constant_series(len, f.coefficient());
    case NodeKind::Monomial:
      return pow_series(var, f.order());
    case NodeKind::Sum: {
      Tracked acc = series_eval(f.children()[0], var);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        acc = add_series(acc, series_eval(f.children()[i], var));
      return acc;
    }
    case NodeKind::Product: {
      Tracked acc = series_eval(f.children()[0], var);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        acc = mul_series(acc, series_eval(f.children()[i], var));
      return acc;
    }
    case NodeKind::Scale:
      return scale_series(series_eval(f.children()[0], var), f.coefficient());
    case NodeKind::ExpIter: {
      Tracked t = series_eval(f.children()[0], var);
      for (unsigned i = 0; i < f.order(); ++i) t = exp_series(t);
      return t;
    }
    case NodeKind::Compose:
      return series_eval(f.children()[0], series_eval(f.children()[1], var));
  }
  return var;
}

// Upper bound of f(x) for x >= 0 using an evaluator independent of the tower
// layer: long double value plus a propagated relative error bound.
struct Bounded {
  long double v;
  long double err;
};

long double grow(long double e1, long double e2) { return (1 + e1) * (1 + e2) * (1 + kUnitLd) - 1; }

Bounded majorant_eval(const EntireExpr& f, const Bounded& x) {
  switch (f.kind()) {
    case NodeKind::Variable:
      return x;
    case NodeKind::Const:
      return {static_cast<long double>(f.coefficient()), 0};
    case NodeKind::Monomial: {
      const long double n = f.order();
      return {std::pow(x.v, n), std::expm1(n * std::log1p(x.err)) + 4 * kUnitLd};
    }
    case NodeKind::Sum: {
      Bounded acc{0, 0};
      for (const auto& c : f.children()) {
        Bounded t = majorant_eval(c, x);
        acc.v += t.v;
        acc.err = std::max(acc.err, t.err);
      }
      acc.err += static_cast<long double>(f.children().size()) * kUnitLd;
      return acc;
    }
    case NodeKind::Product: {
      Bounded acc{1, 0};
      for (const auto& c : f.children()) {
        Bounded t = majorant_eval(c, x);
        acc.v *= t.v;
        acc.err = grow(acc.err, t.err);
      }
      return acc;
    }
    case NodeKind::Scale: {
      Bounded t = majorant_eval(f.children()[0], x);
      return {t.v * static_cast<long double>(f.coefficient()), grow(t.err, 0)};
    }
    case NodeKind::ExpIter: {
      Bounded t = majorant_eval(f.children()[0], x);
      for (unsigned i = 0; i < f.order(); ++i) {
        long double abs_err = t.v * t.err;
        t = {std::exp(t.v), std::expm1(abs_err) + 2 * kUnitLd};
      }
      return t;
    }
    case NodeKind::Compose:
      return majorant_eval(f.children()[0], majorant_eval(f.children()[1], x));
  }
  return x;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Coeff> coeffs, Tail tail, double coeff_rel_err)
    : coeffs_(std::move(coeffs)), tail_(std::move(tail)), coeff_rel_err_(coeff_rel_err) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidValue, "power series needs at least a_0");
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      fail(ErrorCode::InvalidValue, "non-finite series coefficient");
}

Coeff PowerSeries::eval(Coeff z) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double PowerSeries::error_bound(double r) const {
  long double partial = 0;
  long double rn = 1;
  for (const auto& c : coeffs_) {
    partial += std::abs(c) * rn;
    rn *= r;
  }
  if (!std::isfinite(partial)) return std::numeric_limits<double>::infinity();
  const long double n = static_cast<long double>(coeffs_.size());
  const long double coeff_err = coeff_rel_err_ * partial / (1 - coeff_rel_err_);
  long double tail = 0;
  if (const auto* g = std::get_if<GeometricTail>(&tail_)) {
    const long double x = r / g->radius;
    if (!(x < 1)) return std::numeric_limits<double>::infinity();
    tail = g->c * std::pow(x, n) / (1 - x);
  } else if (const auto* m = std::get_if<MajorantTail>(&tail_)) {
    Bounded full = majorant_eval(m->majorant, {static_cast<long double>(r), 0});
    if (!std::isfinite(full.v)) return std::numeric_limits<double>::infinity();
    const long double upper = full.v * (1 + full.err);
    const long double partial_lo = partial * (1 - coeff_rel_err_ - n * kUnitLd);
    tail = std::max<long double>(0, upper - partial_lo);
  }
  return static_cast<double>(tail + coeff_err);
}

PowerSeries series_from_expr(const EntireExpr& f, int truncation, double scale) {
  if (truncation < 1) fail(ErrorCode::InvalidValue, "truncation order must be >= 1");
  if (!(scale > 0) || !std::isfinite(scale)) fail(ErrorCode::InvalidValue, "scale must be positive");
  const std::size_t len = static_cast<std::size_t>(truncation) + 1;
  Tracked z{std::vector<Coeff>(len, 0.0), 0};
  z.c[1] = scale;
  Tracked t = series_eval(f, z);
  for (const auto& c : t.c)
    if (!std::isfinite(c.real()))
      fail(ErrorCode::Overflow, "series coefficients of '" + print(f) + "' overflow");
  EntireExpr majorant =
      scale == 1 ? f : compose(f, EntireExpr::scale(scale, EntireExpr::variable()));
  return PowerSeries(std::move(t.c), PowerSeries::MajorantTail{std::move(majorant)}, t.err);
}

Interval max_modulus_circle(const PowerSeries& s, double r, const CircleOptions& opt) {
  if (!(r > 0) || !std::isfinite(r)) fail(ErrorCode::InvalidValue, "radius must be positive");
  const auto& a = s.coefficients();
  const std::size_t len = a.size();

  std::vector<Coeff> b(len);
  std::vector<long double> mag(len);
  long double s0 = 0;
  long double rn = 1;
  for (std::size_t n = 0; n < len; ++n) {
    const std::complex<long double> bn = std::complex<long double>(a[n]) * rn;
    mag[n] = std::abs(bn);
    b[n] = Coeff(static_cast<double>(bn.real()), static_cast<double>(bn.imag()));
    if (!std::isfinite(b[n].real()) || !std::isfinite(b[n].imag()))
      fail(ErrorCode::Overflow, "series too large to evaluate at this radius");
    s0 += mag[n];
    rn *= r;
  }
  const double tail = s.error_bound(r);
  // The maximum never exceeds s0, so this failure is certain without sampling.
  if (!(tail <= opt.guard * static_cast<double>(s0) * (1 + 1e-9)))
    fail(ErrorCode::GuardRadiusExceeded,
         "truncation error " + format_number(tail) + " exceeds the guard at r = " + format_number(r));
  // Terms too small to matter are moved into the rounding budget.
  long double dropped = 0;
  std::size_t used = len;
  while (used > 1 && dropped + mag[used - 1] <= 1e-20L * s0) dropped += mag[--used];
  b.resize(used);
  mag.resize(used);
  // Bound on |(|F|^2)''| in the angle: sum over pairs of (n-m)^2 |b_n||b_m|.
  long double curvature = 0;
  for (std::size_t n = 0; n < used; ++n) {
    if (mag[n] == 0) continue;
    for (std::size_t m = n + 1; m < used; ++m) {
      const long double d = static_cast<long double>(m - n);
      curvature += 2 * d * d * mag[n] * mag[m];
    }
  }
  const double horner_err = static_cast<double>((4.0L * used + 10) * kUnit * s0 + dropped);

  auto modulus = [&](double theta) {
    const Coeff w = std::polar(1.0, theta);
    Coeff acc = 0;
    for (std::size_t n = used; n-- > 0;) acc = acc * w + b[n];
    return std::abs(acc);
  };

  const int m = std::max(opt.samples, 8);
  const double h = 2 * std::numbers::pi / m;
  std::vector<double> v(static_cast<std::size_t>(m) + 1);
  std::size_t best_i = 0;
  for (int i = 0; i < m; ++i) {
    v[i] = modulus(i * h);
    if (v[i] > v[best_i]) best_i = i;
  }
  v[m] = v[0];
  double best = v[best_i];

  // Golden-section polish around the best sample.
  {
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double lo = best_i * h - h;
    double hi = best_i * h + h;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = modulus(x1);
    double f2 = modulus(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = modulus(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = modulus(x1);
      }
    }
    best = std::max({best, f1, f2});
  }

  if (!(tail <= opt.guard * best))
    fail(ErrorCode::GuardRadiusExceeded,
         "truncation error " + format_number(tail) + " exceeds the guard at r = " + format_number(r));

  // Branch and bound on |F|^2 with the curvature bound between sample points.
  const long double k8 = curvature / 8;
  auto f_up = [&](double val) {
    const long double u = static_cast<long double>(val) + horner_err;
    return u * u;
  };
  auto target = [&] {
    const long double u = (static_cast<long double>(best) + horner_err) * (1 + opt.target_gap);
    return u * u;
  };
  struct Seg {
    double a, b;
    long double fa, fb;
  };
  std::vector<Seg> stack;
  stack.reserve(static_cast<std::size_t>(m) + 64);
  for (int i = 0; i < m; ++i) stack.push_back({i * h, (i + 1) * h, f_up(v[i]), f_up(v[i + 1])});
  const long budget = std::max<long>(20000, 40000000L / static_cast<long>(used));
  long evals = 0;
  long double accepted = f_up(best);
  while (!stack.empty()) {
    Seg sg = stack.back();
    stack.pop_back();
    const long double w = sg.b - sg.a;
    const long double ub = std::max(sg.fa, sg.fb) + k8 * w * w;
    if (ub <= target() || w < 1e-13 || evals >= budget) {
      accepted = std::max(accepted, ub);
      continue;
    }
    const double mid = 0.5 * (sg.a + sg.b);
    const double vm = modulus(mid);
    ++evals;
    best = std::max(best, vm);
    const long double fm = f_up(vm);
    stack.push_back({sg.a, mid, sg.fa, fm});
    stack.push_back({mid, sg.b, fm, sg.fb});
  }
  const double upper = static_cast<double>(std::sqrt(accepted)) * (1 + 4 * kUnit);
  const double lower = std::max(0.0, best - horner_err);
  return Interval{std::max(0.0, lower - tail), upper + tail};
}

Verdict compare_le(const Interval& a, const Interval& b) {
  if (a.lo > b.hi) return Verdict::Fail;
  if (a.hi <= b.lo) return Verdict::Pass;
  auto rel_width = [](const Interval& x) {
    const double scale = std::max(std::fabs(x.lo), std::fabs(x.hi));
    return scale > 0 ? x.width() / scale : 0.0;
  };
  if (rel_width(a) <= kSandwichResolution && rel_width(b) <= kSandwichResolution)
    return Verdict::Pass;
  return Verdict::Inconclusive;
}

namespace {

// Circle maximum at radius r from a series rescaled to the unit circle.
Interval circle_at(const EntireExpr& f, int n, double r) {
  return max_modulus_circle(series_from_expr(f, n, r), 1.0);
}

SandwichRecord sandwich_at(const EntireExpr& f, const EntireExpr& g, double r, int n) {
  SandwichRecord rec;
  rec.r = r;
  rec.truncation = n;

  rec.middle = circle_at(compose(f, g), n, r);
  const Interval half = circle_at(g, n, r / 2);
  const PowerSeries sg0 = series_from_expr(g, 1);
  const double g0 = std::abs(sg0.coefficients()[0]);
  const double g0_err = g0 * sg0.coeff_rel_err() + g0 * kUnit;
  Interval arg{half.lo / 8 - g0 - g0_err, half.hi / 8 - g0 + g0_err};
  arg.lo = std::nextafter(arg.lo, -1.0);
  arg.hi = std::nextafter(arg.hi, std::numeric_limits<double>::infinity());
  if (!(arg.lo > 0))
    fail(ErrorCode::NonpositiveArgument,
         "M_g(r/2)/8 - |g(0)| is not positive at r = " + format_number(r));
  rec.lower = {circle_at(f, n, arg.lo).lo, circle_at(f, n, arg.hi).hi};
  const Interval mg = circle_at(g, n, r);
  rec.upper = {circle_at(f, n, mg.lo).lo, circle_at(f, n, mg.hi).hi};

  const Verdict left = compare_le(rec.lower, rec.middle);
  const Verdict right = compare_le(rec.middle, rec.upper);
  if (left == Verdict::Fail || right == Verdict::Fail) rec.verdict = Verdict::Fail;
  else if (left == Verdict::Pass && right == Verdict::Pass) rec.verdict = Verdict::Pass;
  else rec.verdict = Verdict::Inconclusive;
  return rec;
}

}  // namespace

SandwichRecord check_sandwich(const EntireExpr& f, const EntireExpr& g, double r, int truncation,
                              int max_truncation) {
  if (!(r > 0) || !std::isfinite(r)) fail(ErrorCode::InvalidValue, "radius must be positive");
  int n = std::max(truncation, 1);
  for (;;) {
    try {
      return sandwich_at(f, g, r, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GuardRadiusExceeded || n * 2 > max_truncation) throw;
      n *= 2;
    }
  }
}

std::string sandwich_csv_header() {
  return csv_line({"r", "lower_lo", "lower_hi", "mid_lo", "mid_hi", "upper_lo", "upper_hi", "verdict"});
}

std::string sandwich_csv_row(const SandwichRecord& rec) {
  return csv_line({format_number(rec.r), format_number(rec.lower.lo), format_number(rec.lower.hi),
                   format_number(rec.middle.lo), format_number(rec.middle.hi),
                   format_number(rec.upper.lo), format_number(rec.upper.hi),
                   std::string(verdict_name(rec.verdict))});
}

}  // namespace gk
