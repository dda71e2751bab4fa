// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/growth_object.hpp"

#include "growthkit/error.hpp"

namespace gk {

std::vector<TowerReal> GrowthSource::boundary_radii(const TowerReal&, const TowerReal&) const {
  return {};
}

namespace {

class ExprSource final : public GrowthSource {
 public:
  explicit ExprSource(EntireExpr f) : f_(std::move(f)) { require_nonconstant(f_); }
  TowerReal max_modulus(const TowerReal& r) const override {
    if (r.is_negative()) fail(ErrorCode::DomainError, "negative radius");
    return evaluate(f_, r);
  }
  TowerReal anchor() const override { return evaluate(f_, TowerReal::zero()); }
  TowerReal domain_floor() const override { return TowerReal::zero(); }
  bool oscillating() const override { return false; }
  std::string describe() const override { return print(f_); }
  const EntireExpr& expr() const { return f_; }

 private:
  EntireExpr f_;
};

class ProfileSource final : public GrowthSource {
 public:
  explicit ProfileSource(GrowthProfile g) : g_(std::move(g)) {}
  TowerReal max_modulus(const TowerReal& r) const override { return g_.max_modulus(r); }
  TowerReal anchor() const override { return g_.anchor(); }
  TowerReal domain_floor() const override { return g_.domain_floor(); }
  bool oscillating() const override {
    return g_.oscillation().has_value() && g_.lambda() < g_.rho();
  }
  std::vector<TowerReal> boundary_radii(const TowerReal& lo, const TowerReal& hi) const override {
    std::vector<TowerReal> out;
    if (!g_.oscillation()) return out;
    Mantissa t_lo = -1;
    if (lo > g_.domain_floor()) {
      if (auto v = to_extended(log_k(lo, g_.q()))) t_lo = *v;
    }
    auto t_hi = to_extended(log_k(hi, g_.q()));
    Mantissa cap = t_hi ? *t_hi : static_cast<Mantissa>(1e4000L);
    for (Mantissa t : g_.boundaries(t_lo, cap)) {
      TowerReal r = exp_k(TowerReal::from_real(t), g_.q());
      if (!(r < lo) && !(r > hi)) out.push_back(r);
    }
    return out;
  }
  std::string describe() const override { return g_.describe(); }
  const GrowthProfile& profile() const { return g_; }

 private:
  GrowthProfile g_;
};

}  // namespace

GrowthObject::GrowthObject(EntireExpr f)
    : GrowthObject(std::make_shared<const ExprSource>(std::move(f))) {}

GrowthObject::GrowthObject(GrowthProfile profile)
    : GrowthObject(std::make_shared<const ProfileSource>(std::move(profile))) {}

GrowthObject::GrowthObject(std::shared_ptr<const GrowthSource> source)
    : src_(std::move(source)) {
  if (!src_) fail(ErrorCode::InvalidValue, "null growth source");
  anchor_ = src_->anchor();
}

const EntireExpr* GrowthObject::expr() const noexcept {
  auto* s = dynamic_cast<const ExprSource*>(src_.get());
  return s ? &s->expr() : nullptr;
}

const GrowthProfile* GrowthObject::profile() const noexcept {
  auto* s = dynamic_cast<const ProfileSource*>(src_.get());
  return s ? &s->profile() : nullptr;
}

GrowthObject exp_tower_comparator(unsigned j) {
  if (j == 0) return GrowthObject(EntireExpr::variable());
  return GrowthObject(EntireExpr::exp_iter(j, EntireExpr::variable()));
}

}  // namespace gk
