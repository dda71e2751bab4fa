// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "growthkit/expr.hpp"
#include "growthkit/profile.hpp"
#include "growthkit/tower.hpp"

namespace gk {

// Anything with a continuous strictly increasing maximum modulus.
class GrowthSource {
 public:
  virtual ~GrowthSource() = default;
  virtual TowerReal max_modulus(const TowerReal& r) const = 0;
  virtual TowerReal anchor() const = 0;
  virtual TowerReal domain_floor() const = 0;
  virtual bool oscillating() const = 0;
  // Radii in [lo, hi] where tail statistics are attained (block boundaries).
  virtual std::vector<TowerReal> boundary_radii(const TowerReal& lo, const TowerReal& hi) const;
  virtual std::string describe() const = 0;
};

class GrowthObject {
 public:
  explicit GrowthObject(EntireExpr f);
  explicit GrowthObject(GrowthProfile profile);
  explicit GrowthObject(std::shared_ptr<const GrowthSource> source);

  TowerReal max_modulus(const TowerReal& r) const { return src_->max_modulus(r); }
  // |f(0)|, the left end of the inverse's domain.
  const TowerReal& anchor() const noexcept { return anchor_; }
  TowerReal domain_floor() const { return src_->domain_floor(); }
  bool oscillating() const { return src_->oscillating(); }
  std::vector<TowerReal> boundary_radii(const TowerReal& lo, const TowerReal& hi) const {
    return src_->boundary_radii(lo, hi);
  }
  std::string describe() const { return src_->describe(); }

  // Null unless the object wraps that representation.
  const EntireExpr* expr() const noexcept;
  const GrowthProfile* profile() const noexcept;
  const GrowthSource& source() const noexcept { return *src_; }

 private:
  std::shared_ptr<const GrowthSource> src_;
  TowerReal anchor_;
};

// exp^[j](z); j = 0 gives z.
GrowthObject exp_tower_comparator(unsigned j);

}  // namespace gk
