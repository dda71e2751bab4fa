// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthkit/growth_object.hpp"
#include "growthkit/tower.hpp"

namespace gk {

struct GridSpec {
  double t0 = 8;
  double beta = 2;
  int points = 40;  // J; the grid has J + 1 base points
  double tail = 0.4;
};

// Radii r = exp^[q](t) for a geometric t-grid, plus snapped radii, sorted.
// The tail is every point at or beyond the start of the last ceil(tail*J)
// base points.
struct RGrid {
  int q = 1;
  std::vector<Mantissa> t;
  std::vector<TowerReal> r;
  std::size_t tail_begin = 0;

  std::size_t size() const { return t.size(); }
  std::size_t tail_size() const { return t.size() - tail_begin; }
};

RGrid make_grid(int q, const GridSpec& spec, const std::vector<TowerReal>& snap = {});
// First and last base radii of the q-grid.
std::pair<TowerReal, TowerReal> grid_span(int q, const GridSpec& spec);

enum class GrowthClass { Finite, Infinity, Zero, Unit, Unsettled };
std::string_view growth_class_name(GrowthClass c) noexcept;

enum class TailStat { Sup, Inf };

struct Tolerances {
  // <= 0 selects 1e-6, or 2e-2 when an oscillating object is involved.
  double conv_tol = 0;
  double slope_tol = 1e-3;
  double huge = 1e6;
  double tiny = 1e-6;
};

inline constexpr double kConvTolSymbolic = 1e-6;
inline constexpr double kConvTolOscillating = 2e-2;

double resolve_conv_tol(const Tolerances& tol, bool oscillating);

struct GrowthEstimate {
  GrowthClass cls = GrowthClass::Unsettled;
  // Tail statistic over the later half of the tail; meaningful for Finite/Unit.
  double value = 0;
  double sup_tail = 0;
  double inf_tail = 0;
  // Change of the tail statistic from the first to the second half of the
  // tail, per grid point.
  double slope = 0;
  double conv_tol = 0;
  std::size_t points = 0;
  bool absorbed = false;

  bool finite() const { return cls == GrowthClass::Finite || cls == GrowthClass::Unit; }
  bool positive_finite() const { return finite() && value > 0; }
};

// Classifies a tail sequence (sorted by radius) for a limsup (Sup) or liminf (Inf).
GrowthEstimate summarize_tail(const std::vector<double>& values, TailStat stat, double conv_tol,
                              const Tolerances& tol = {});

struct OrderEstimate {
  GrowthEstimate rho;
  GrowthEstimate lambda;
};

// log^[p] M_f(r) / log^[q] r. +inf when the numerator exceeds the mantissa range.
double quotient(const GrowthObject& f, const TowerReal& r, int p, int q);

RGrid grid_for(const GrowthObject& f, int q, const GridSpec& spec);

OrderEstimate pq_order(const GrowthObject& f, int p, int q, const GridSpec& spec = {},
                       const Tolerances& tol = {});
OrderEstimate pq_order_on(const GrowthObject& f, int p, int q, const RGrid& grid,
                          const Tolerances& tol = {});

struct ConsistencyCell {
  int p = 0;
  int q = 0;
  GrowthClass expected = GrowthClass::Finite;
  GrowthEstimate measured;
  bool ok = false;
};

struct IndexPairResult {
  int p = 0;
  int q = 0;
  GrowthEstimate rho;
  GrowthEstimate lambda;
  bool regular = false;
  std::vector<ConsistencyCell> cells;
  bool consistent = true;
};

// Smallest admissible (p, q) in scan order p = 1..p_max, q = 1..p.
IndexPairResult detect_index_pair(const GrowthObject& f, int p_max = 6,
                                  const GridSpec& spec = {}, const Tolerances& tol = {});

// r with M_f(r) = s up to the comparison metric.
TowerReal inverse_max_modulus(const GrowthObject& f, const TowerReal& s, double rel_tol = 1e-12);

// log^[p] M_g^{-1}(M_f(r)) / log^[q] r.
double relative_quotient(const GrowthObject& f, const GrowthObject& g, const TowerReal& r, int p,
                         int q);

OrderEstimate relative_pq_order(const GrowthObject& f, const GrowthObject& g, int p, int q,
                                const GridSpec& spec = {}, const Tolerances& tol = {});
// The (1,1) and (k,1) parameterizations.
OrderEstimate relative_order(const GrowthObject& f, const GrowthObject& g,
                             const GridSpec& spec = {}, const Tolerances& tol = {});
OrderEstimate generalized_relative_order(const GrowthObject& f, const GrowthObject& g, int k,
                                         const GridSpec& spec = {}, const Tolerances& tol = {});

// Radii r at which M_f(r) crosses a block boundary of g, inside the f-image of [lo, hi].
std::vector<TowerReal> pulled_back_boundaries(const GrowthObject& f, const GrowthObject& g,
                                              const TowerReal& lo, const TowerReal& hi);

}  // namespace gk
