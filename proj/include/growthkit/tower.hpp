// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gk {

using Mantissa = long double;

// Level-index number exp^[L](x). For L >= 1 the mantissa lives in [1, e);
// level 0 holds any finite real, including zero and negatives.
class TowerReal {
 public:
  TowerReal() = default;

  static TowerReal normalize(std::int64_t level, Mantissa mantissa);
  static TowerReal from_real(Mantissa value) { return normalize(0, value); }
  static TowerReal zero() { return {}; }

  std::uint32_t level() const noexcept { return level_; }
  Mantissa mantissa() const noexcept { return mantissa_; }

  // Set when an addend vanished below the mantissa's resolution somewhere in
  // the computation. Ignored by comparisons.
  bool absorbed() const noexcept { return absorbed_; }
  TowerReal with_absorbed(bool flag) const;

  bool is_zero() const noexcept { return level_ == 0 && mantissa_ == 0; }
  bool is_negative() const noexcept { return level_ == 0 && mantissa_ < 0; }
  bool is_positive() const noexcept { return level_ > 0 || mantissa_ > 0; }

  friend bool operator==(const TowerReal& a, const TowerReal& b) noexcept {
    return a.level_ == b.level_ && a.mantissa_ == b.mantissa_;
  }
  friend std::partial_ordering operator<=>(const TowerReal& a, const TowerReal& b) noexcept;

 private:
  TowerReal(std::uint32_t level, Mantissa mantissa, bool absorbed)
      : level_(level), mantissa_(mantissa), absorbed_(absorbed) {}

  std::uint32_t level_ = 0;
  Mantissa mantissa_ = 0;
  bool absorbed_ = false;
};

// Euler's number in the mantissa format; upper edge of the canonical band.
Mantissa euler();

TowerReal log_k(const TowerReal& v, std::uint32_t k);
TowerReal exp_k(const TowerReal& v, std::uint32_t k);

TowerReal add(const TowerReal& a, const TowerReal& b);
TowerReal mul(const TowerReal& a, const TowerReal& b);
TowerReal pow_scalar(const TowerReal& a, Mantissa s);
TowerReal sub_guarded(const TowerReal& a, const TowerReal& b);

// Nullopt when the value exceeds the mantissa format's range.
std::optional<Mantissa> to_extended(const TowerReal& v);
double to_real(const TowerReal& v);

// Continuous level-index coordinate; strictly increasing on values >= 0.
Mantissa psi(const TowerReal& v);
TowerReal from_psi(Mantissa s);

// Relative difference after reducing both values by the same number of logs
// (the larger level). Infinite when the reduction is undefined.
Mantissa comparison_metric(const TowerReal& a, const TowerReal& b);

std::string to_string(const TowerReal& v);
// Accepts "E^L(x)" or a plain decimal.
TowerReal parse_tower(std::string_view text);

}  // namespace gk
