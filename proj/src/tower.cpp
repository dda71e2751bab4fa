// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/tower.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "growthkit/error.hpp"

namespace gk {

namespace {

// Below this log-ratio the smaller addend cannot move a 64-bit significand.
constexpr Mantissa kAbsorbGap = 64 * 0.6931471805599453094L + 2;

const Mantissa kE = std::exp(1.0L);

}  // namespace

Mantissa euler() { return kE; }

TowerReal TowerReal::normalize(std::int64_t level, Mantissa x) {
  if (!std::isfinite(x)) fail(ErrorCode::InvalidValue, "non-finite mantissa");
  if (level < 0) fail(ErrorCode::InvalidValue, "negative level");
  if (level > static_cast<std::int64_t>(UINT32_MAX) - 1)
    fail(ErrorCode::Overflow, "tower level out of range");
  for (;;) {
    if (x >= kE) {
      x = std::log(x);
      if (x < 1) x = 1;
      ++level;
      if (level > static_cast<std::int64_t>(UINT32_MAX) - 1)
        fail(ErrorCode::Overflow, "tower level out of range");
    } else if (level >= 1 && x < 1) {
      x = std::exp(x);
      if (x >= kE) x = std::nextafter(kE, 0.0L);
      --level;
    } else {
      break;
    }
  }
  if (x == 0) x = 0;  // drop negative zero
  return TowerReal(static_cast<std::uint32_t>(level), x, false);
}

TowerReal TowerReal::with_absorbed(bool flag) const {
  TowerReal out = *this;
  out.absorbed_ = flag;
  return out;
}

std::partial_ordering operator<=>(const TowerReal& a, const TowerReal& b) noexcept {
  if (a.level_ != b.level_) return a.level_ <=> b.level_;
  return a.mantissa_ <=> b.mantissa_;
}

TowerReal log_k(const TowerReal& v, std::uint32_t k) {
  if (k == 0) return v;
  if (k <= v.level()) {
    return TowerReal::normalize(v.level() - k, v.mantissa()).with_absorbed(v.absorbed());
  }
  Mantissa x = v.mantissa();
  for (std::uint32_t i = v.level(); i < k; ++i) {
    if (!(x > 0)) fail(ErrorCode::DomainError, "logarithm of a nonpositive value");
    x = std::log(x);
  }
  return TowerReal::normalize(0, x).with_absorbed(v.absorbed());
}

TowerReal exp_k(const TowerReal& v, std::uint32_t k) {
  if (k == 0) return v;
  return TowerReal::normalize(static_cast<std::int64_t>(v.level()) + k, v.mantissa())
      .with_absorbed(v.absorbed());
}

std::optional<Mantissa> to_extended(const TowerReal& v) {
  Mantissa x = v.mantissa();
  for (std::uint32_t i = 0; i < v.level(); ++i) {
    x = std::exp(x);
    if (!std::isfinite(x)) return std::nullopt;
  }
  return x;
}

double to_real(const TowerReal& v) {
  auto x = to_extended(v);
  if (!x || std::fabs(*x) > static_cast<Mantissa>(DBL_MAX))
    fail(ErrorCode::Overflow, "value " + to_string(v) + " exceeds the double range");
  return static_cast<double>(*x);
}

namespace {

std::optional<Mantissa> finite_sum(std::optional<Mantissa> a, std::optional<Mantissa> b) {
  if (!a || !b) return std::nullopt;
  Mantissa s = *a + *b;
  if (!std::isfinite(s)) return std::nullopt;
  return s;
}

// a > b > 0 with a beyond the mantissa range; result is a - b or a + b.
TowerReal log_route(const TowerReal& big, const TowerReal& small, bool subtract) {
  auto lb = to_extended(log_k(big, 1));
  if (!lb) return big.with_absorbed(true);
  Mantissa ls = *to_extended(log_k(small, 1));
  Mantissa d = ls - *lb;
  if (d < -kAbsorbGap) return big.with_absorbed(true);
  Mantissa s = subtract ? *lb + std::log1p(-std::exp(d)) : *lb + std::log1p(std::exp(d));
  TowerReal out = exp_k(TowerReal::from_real(s), 1);
  return out.with_absorbed(out == big);
}

}  // namespace

TowerReal add(const TowerReal& a, const TowerReal& b) {
  const bool flag = a.absorbed() || b.absorbed();
  if (a.level() == 0 && b.level() == 0)
    return TowerReal::normalize(0, a.mantissa() + b.mantissa()).with_absorbed(flag);
  const bool a_big = !(a < b);
  const TowerReal& big = a_big ? a : b;
  const TowerReal& small = a_big ? b : a;
  if (small.is_zero()) return big.with_absorbed(flag);
  if (auto s = finite_sum(to_extended(big), to_extended(small)))
    return TowerReal::from_real(*s).with_absorbed(flag);
  if (small.is_negative()) return big.with_absorbed(true);
  TowerReal out = log_route(big, small, false);
  return out.with_absorbed(out.absorbed() || flag);
}

TowerReal sub_guarded(const TowerReal& a, const TowerReal& b) {
  if (!(a > b)) fail(ErrorCode::DomainError, "sub_guarded requires a > b");
  const bool flag = a.absorbed() || b.absorbed();
  if (a.level() == 0)
    return TowerReal::normalize(0, a.mantissa() - b.mantissa()).with_absorbed(flag);
  if (!b.is_positive()) {
    return add(a, TowerReal::from_real(-b.mantissa())).with_absorbed(flag);
  }
  auto av = to_extended(a);
  if (av) return TowerReal::from_real(*av - *to_extended(b)).with_absorbed(flag);
  TowerReal out = log_route(a, b, true);
  return out.with_absorbed(out.absorbed() || flag);
}

TowerReal mul(const TowerReal& a, const TowerReal& b) {
  const bool flag = a.absorbed() || b.absorbed();
  if (a.is_zero() || b.is_zero()) return TowerReal::zero().with_absorbed(flag);
  auto av = to_extended(a);
  auto bv = to_extended(b);
  if (av && bv) {
    Mantissa p = *av * *bv;
    if (std::isfinite(p)) return TowerReal::from_real(p).with_absorbed(flag);
  }
  if (a.is_negative() || b.is_negative())
    fail(ErrorCode::DomainError, "product of a negative value and an unrepresentable value");
  TowerReal s = add(log_k(a, 1), log_k(b, 1));
  TowerReal out = exp_k(s, 1);
  return out.with_absorbed(out.absorbed() || flag);
}

TowerReal pow_scalar(const TowerReal& a, Mantissa s) {
  if (!(s > 0) || !std::isfinite(s)) fail(ErrorCode::InvalidValue, "exponent must be positive");
  if (a.is_zero()) return a;
  if (a.is_negative()) fail(ErrorCode::DomainError, "power of a negative value");
  return exp_k(mul(TowerReal::from_real(s), log_k(a, 1)), 1);
}

Mantissa psi(const TowerReal& v) {
  if (v.level() == 0) {
    if (v.mantissa() < 1) return v.mantissa();
    return 1 + std::log(v.mantissa());
  }
  return static_cast<Mantissa>(v.level()) + 1 + std::log(v.mantissa());
}

TowerReal from_psi(Mantissa s) {
  if (!std::isfinite(s)) fail(ErrorCode::InvalidValue, "non-finite level-index coordinate");
  if (s < 1) return TowerReal::from_real(s);
  Mantissa whole = std::floor(s);
  Mantissa frac = s - whole;
  return TowerReal::normalize(static_cast<std::int64_t>(whole) - 1, std::exp(frac));
}

Mantissa comparison_metric(const TowerReal& a, const TowerReal& b) {
  if (a == b) return 0;
  const std::uint32_t k = std::max(a.level(), b.level());
  Mantissa x = 0;
  Mantissa y = 0;
  try {
    x = log_k(a, k).mantissa();
    y = log_k(b, k).mantissa();
  } catch (const Error&) {
    return std::numeric_limits<Mantissa>::infinity();
  }
  Mantissa scale = std::max(std::fabs(x), std::fabs(y));
  if (scale == 0) return 0;
  return std::fabs(x - y) / scale;
}

std::string to_string(const TowerReal& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "E^%u(%.*Lg)", v.level(),
                std::numeric_limits<Mantissa>::max_digits10, v.mantissa());
  return buf;
}

TowerReal parse_tower(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorCode::InvalidValue, "malformed tower value '" + s + "'"); };
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) bad();
  s = s.substr(b, e - b + 1);
  char* end = nullptr;
  if (s.size() > 2 && s[0] == 'E' && s[1] == '^') {
    unsigned long level = std::strtoul(s.c_str() + 2, &end, 10);
    if (end == s.c_str() + 2 || *end != '(' || s.back() != ')') bad();
    const char* m = end + 1;
    Mantissa x = std::strtold(m, &end);
    if (end == m || end != s.c_str() + s.size() - 1) bad();
    return TowerReal::normalize(static_cast<std::int64_t>(level), x);
  }
  Mantissa x = std::strtold(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') bad();
  return TowerReal::from_real(x);
}

}  // namespace gk
