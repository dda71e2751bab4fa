// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/curves.hpp"

#include <algorithm>

#include "growthkit/error.hpp"
#include "growthkit/growth.hpp"

namespace gk {

namespace {

const TowerReal kHalf = TowerReal::from_real(0.5L);
const TowerReal kEighth = TowerReal::from_real(0.125L);
const TowerReal kTwo = TowerReal::from_real(2);
const TowerReal kEight = TowerReal::from_real(8);

// Smallest radius above which M_g(r) exceeds `level`.
TowerReal radius_reaching(const GrowthObject& g, const TowerReal& level) {
  if (!(level > g.anchor())) return g.domain_floor();
  return inverse_max_modulus(g, level);
}

class CurveSource final : public GrowthSource {
 public:
  CurveSource(GrowthObject f, GrowthObject g, CurveKind kind)
      : f_(std::move(f)), g_(std::move(g)), kind_(kind) {
    g0_ = g_.anchor();
    // The inner value must exceed f's floor, and for the lower curve also be positive.
    if (kind_ == CurveKind::Upper) {
      floor_ = std::max(g_.domain_floor(), radius_reaching(g_, f_.domain_floor()));
    } else {
      const TowerReal need = mul(add(f_.domain_floor(), g0_), kEight);
      floor_ = mul(std::max(g_.domain_floor(), radius_reaching(g_, need)), kTwo);
    }
  }

  TowerReal max_modulus(const TowerReal& r) const override {
    return f_.max_modulus(inner(r));
  }

  TowerReal anchor() const override { return f_.anchor(); }
  TowerReal domain_floor() const override { return floor_; }
  bool oscillating() const override { return f_.oscillating() || g_.oscillating(); }

  std::vector<TowerReal> boundary_radii(const TowerReal& lo, const TowerReal& hi) const override {
    std::vector<TowerReal> out;
    const TowerReal scale = kind_ == CurveKind::Upper ? TowerReal::from_real(1) : kHalf;
    const TowerReal back = kind_ == CurveKind::Upper ? TowerReal::from_real(1) : kTwo;
    for (const auto& b : g_.boundary_radii(mul(lo, scale), mul(hi, scale))) out.push_back(mul(b, back));
    if (f_.oscillating() && hi > floor_) {
      const TowerReal from = lo > floor_ ? inner(lo) : f_.domain_floor();
      for (const auto& u : f_.boundary_radii(from, inner(hi))) {
        TowerReal level = kind_ == CurveKind::Upper ? u : mul(add(u, g0_), kEight);
        if (!(level > g_.anchor())) continue;
        out.push_back(mul(inverse_max_modulus(g_, level), back));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string describe() const override {
    return std::string(curve_kind_name(kind_)) + "[" + f_.describe() + " ; " + g_.describe() + "]";
  }

 private:
  TowerReal inner(const TowerReal& r) const {
    if (kind_ == CurveKind::Upper) return g_.max_modulus(r);
    const TowerReal m = mul(g_.max_modulus(mul(r, kHalf)), kEighth);
    if (!(m > g0_))
      fail(ErrorCode::NonpositiveArgument,
           "M_g(r/2)/8 - |g(0)| is not positive at r = " + to_string(r));
    return g0_.is_zero() ? m : sub_guarded(m, g0_);
  }

  GrowthObject f_;
  GrowthObject g_;
  CurveKind kind_;
  TowerReal g0_;
  TowerReal floor_;
};

}  // namespace

std::string_view curve_kind_name(CurveKind kind) noexcept {
  return kind == CurveKind::Upper ? "upper" : "lower";
}

GrowthObject bound_curve(const GrowthObject& f, const GrowthObject& g, CurveKind kind) {
  return GrowthObject(std::make_shared<const CurveSource>(f, g, kind));
}

CompositeCurves composite_bound_curves(const GrowthObject& f, const GrowthObject& g,
                                       const std::vector<TowerReal>& sample_radii) {
  CompositeCurves out{bound_curve(f, g, CurveKind::Lower), bound_curve(f, g, CurveKind::Upper),
                      std::nullopt, true, {}};
  if (f.expr() && g.expr()) out.exact = GrowthObject(compose(*f.expr(), *g.expr()));
  for (const auto& r : sample_radii) {
    if (!(r > out.lower.domain_floor())) continue;
    const TowerReal lo = out.lower.max_modulus(r);
    const TowerReal hi = out.upper.max_modulus(r);
    if (lo > hi) out.exact_within = false;
    if (out.exact) {
      const TowerReal mid = out.exact->max_modulus(r);
      if (lo > mid || mid > hi) out.exact_within = false;
    }
    out.sample_radii.push_back(r);
  }
  if (out.sample_radii.empty() && !sample_radii.empty())
    fail(ErrorCode::NonpositiveArgument,
         "the lower bound argument is not positive at any sample radius");
  return out;
}

CompositeCurves composite_bound_curves(const GrowthObject& f, const GrowthObject& g) {
  const RGrid grid = make_grid(1, GridSpec{});
  return composite_bound_curves(
      f, g, std::vector<TowerReal>(grid.r.begin() + static_cast<long>(grid.tail_begin), grid.r.end()));
}

}  // namespace gk
