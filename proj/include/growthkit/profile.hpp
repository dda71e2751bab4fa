// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthkit/tower.hpp"

namespace gk {

struct Oscillation {
  double t0 = 10;
  double gamma = 2;
};

// Abstract growth with prescribed (p,q)-order rho and lower order lambda:
//   M(r) = exp^[p](E(t)),  t = log^[q](r),
// so that log^[p] M(r) / log^[q] r = E(t)/t. Without oscillation E(t) = rho*t.
// With oscillation E is piecewise linear on blocks [t_j, t_{j+1}], t_j = t0*gamma^j,
// with E(t_j)/t_j = lambda at j = 0, rho at odd j, max(lambda, rho/gamma) at even j >= 2.
class GrowthProfile {
 public:
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  double rho() const noexcept { return rho_; }
  double lambda() const noexcept { return lambda_; }
  const std::optional<Oscillation>& oscillation() const noexcept { return osc_; }

  // E(t)/t for a plain real t > 0.
  Mantissa quotient_at(Mantissa t) const;
  TowerReal exponent(const TowerReal& t) const;
  TowerReal max_modulus(const TowerReal& r) const;
  // exp^[p-1](0): the limit of M at the left end of its domain.
  TowerReal anchor() const;
  // M is defined for r > domain_floor.
  TowerReal domain_floor() const;
  // Block boundaries t_j inside [lo, hi].
  std::vector<Mantissa> boundaries(Mantissa lo, Mantissa hi) const;
  // E(t_j)/t_j.
  Mantissa boundary_ratio(long long j) const;
  std::string describe() const;

  friend GrowthProfile make_profile(int p, int q, double rho, double lambda,
                                    std::optional<Oscillation> osc);

 private:
  GrowthProfile() = default;
  int p_ = 1;
  int q_ = 1;
  double rho_ = 1;
  double lambda_ = 1;
  std::optional<Oscillation> osc_;
};

// Throws AdmissibilityError outside b < lambda <= rho < inf (b = 1 when p = q),
// and for oscillating schedules with t0 <= e, gamma <= 1 or lambda*gamma <= rho.
GrowthProfile make_profile(int p, int q, double rho, double lambda,
                           std::optional<Oscillation> osc = std::nullopt);

// Schedule used when lambda < rho and none is given: t0 = 10, gamma = 2*rho/lambda.
Oscillation default_oscillation(double rho, double lambda);

}  // namespace gk
