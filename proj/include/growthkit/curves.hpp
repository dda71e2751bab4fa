// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "growthkit/growth_object.hpp"

namespace gk {

enum class CurveKind { Lower, Upper };

// The composition sandwich
//   M_f(M_g(r/2)/8 - |g(0)|) <= M_{f o g}(r) <= M_f(M_g(r))
// as growth objects. Both curves need only M_f and M_g, so profiles qualify.
GrowthObject bound_curve(const GrowthObject& f, const GrowthObject& g, CurveKind kind);

struct CompositeCurves {
  GrowthObject lower;
  GrowthObject upper;
  // f o g itself when both inputs are expressions.
  std::optional<GrowthObject> exact;
  // lower <= exact <= upper held at every sample radius (vacuous without exact).
  bool exact_within = true;
  std::vector<TowerReal> sample_radii;
};

// Throws NonpositiveArgument when the lower argument is not positive at any
// sample radius.
CompositeCurves composite_bound_curves(const GrowthObject& f, const GrowthObject& g,
                                       const std::vector<TowerReal>& sample_radii);

// Samples at the tail of the default q = 1 grid.
CompositeCurves composite_bound_curves(const GrowthObject& f, const GrowthObject& g);

std::string_view curve_kind_name(CurveKind kind) noexcept;

}  // namespace gk
