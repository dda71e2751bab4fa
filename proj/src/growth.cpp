// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "growthkit/error.hpp"

namespace gk {

std::string_view growth_class_name(GrowthClass c) noexcept {
  switch (c) {
    case GrowthClass::Finite: return "finite";
    case GrowthClass::Infinity: return "infinity";
    case GrowthClass::Zero: return "zero";
    case GrowthClass::Unit: return "unit";
    case GrowthClass::Unsettled: return "unsettled";
  }
  return "?";
}

double resolve_conv_tol(const Tolerances& tol, bool oscillating) {
  if (tol.conv_tol > 0) return tol.conv_tol;
  return oscillating ? kConvTolOscillating : kConvTolSymbolic;
}

namespace {

void validate(const GridSpec& spec) {
  if (!(spec.t0 > 0) || !std::isfinite(spec.t0)) fail(ErrorCode::ConfigError, "grid t0 must be positive");
  if (!(spec.beta > 1) || !std::isfinite(spec.beta)) fail(ErrorCode::ConfigError, "grid beta must exceed 1");
  if (spec.points < 4) fail(ErrorCode::ConfigError, "grid needs at least 4 points");
  if (!(spec.tail > 0) || spec.tail > 1) fail(ErrorCode::ConfigError, "tail fraction must be in (0, 1]");
}

Mantissa base_t(const GridSpec& spec, int j) {
  return static_cast<Mantissa>(spec.t0) * std::pow(static_cast<Mantissa>(spec.beta), j);
}

}  // namespace

std::pair<TowerReal, TowerReal> grid_span(int q, const GridSpec& spec) {
  validate(spec);
  if (q < 1) fail(ErrorCode::InvalidValue, "q must be >= 1");
  return {exp_k(TowerReal::from_real(base_t(spec, 0)), q),
          exp_k(TowerReal::from_real(base_t(spec, spec.points)), q)};
}

RGrid make_grid(int q, const GridSpec& spec, const std::vector<TowerReal>& snap) {
  validate(spec);
  if (q < 1) fail(ErrorCode::InvalidValue, "q must be >= 1");
  const int J = spec.points;
  int tail_count = static_cast<int>(std::ceil(spec.tail * J - 1e-9));
  tail_count = std::clamp(tail_count, 2, J + 1);

  struct Point {
    Mantissa t;
    TowerReal r;
    bool snapped;
  };
  std::vector<Point> pts;
  for (int j = 0; j <= J; ++j) {
    const Mantissa t = base_t(spec, j);
    pts.push_back({t, exp_k(TowerReal::from_real(t), q), false});
  }
  const Mantissa t_first = pts.front().t;
  const Mantissa t_last = pts.back().t;
  const Mantissa tail_start = pts[static_cast<std::size_t>(J + 1 - tail_count)].t;
  for (const auto& r : snap) {
    std::optional<Mantissa> t;
    try {
      t = to_extended(log_k(r, q));
    } catch (const Error&) {
      continue;
    }
    if (t && *t >= t_first && *t <= t_last) pts.push_back({*t, r, true});
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.t < b.t; });

  RGrid g;
  g.q = q;
  for (const auto& p : pts) {
    if (!g.t.empty() && std::fabs(p.t - g.t.back()) <= 1e-15L * p.t) {
      if (p.snapped) g.r.back() = p.r;
      continue;
    }
    g.t.push_back(p.t);
    g.r.push_back(p.r);
  }
  g.tail_begin = static_cast<std::size_t>(
      std::lower_bound(g.t.begin(), g.t.end(), tail_start * (1 - 1e-15L)) - g.t.begin());
  return g;
}

GrowthEstimate summarize_tail(const std::vector<double>& values, TailStat stat, double conv_tol,
                              const Tolerances& tol) {
  GrowthEstimate e;
  e.conv_tol = conv_tol;
  e.points = values.size();
  if (values.size() < 2) return e;
  for (double v : values)
    if (std::isnan(v)) return e;

  auto pick = [&](std::size_t b, std::size_t n) {
    auto [lo, hi] = std::minmax_element(values.begin() + b, values.begin() + n);
    return stat == TailStat::Sup ? *hi : *lo;
  };
  const std::size_t n = values.size();
  const std::size_t half = n / 2;
  e.sup_tail = *std::max_element(values.begin(), values.end());
  e.inf_tail = *std::min_element(values.begin(), values.end());
  const double whole = pick(0, n);
  const double first_half = pick(0, half);
  const double second_half = pick(half, n);
  e.value = second_half;
  const double span = static_cast<double>(n - half);
  if (std::isfinite(first_half) && std::isfinite(second_half)) {
    e.slope = (second_half - first_half) / span;
  } else {
    e.slope = second_half > first_half ? std::numeric_limits<double>::infinity() : 0.0;
  }

  const double first = values.front();
  const double last = values.back();
  if ((std::isinf(last) && last > 0) || (last > tol.huge && last > first)) {
    e.cls = GrowthClass::Infinity;
    e.value = std::numeric_limits<double>::infinity();
  } else if (std::fabs(last) < tol.tiny && last <= first) {
    e.cls = GrowthClass::Zero;
    e.value = 0;
  } else if (std::isfinite(whole) && std::fabs(whole - second_half) <= conv_tol &&
             std::fabs(e.slope) <= tol.slope_tol) {
    e.cls = std::fabs(second_half - 1) <= conv_tol ? GrowthClass::Unit : GrowthClass::Finite;
  }
  return e;
}

namespace {

double quotient_impl(const GrowthObject& f, const TowerReal& r, int p, int q, bool* absorbed) {
  if (p < 0 || q < 1) fail(ErrorCode::InvalidValue, "quotient needs p >= 0 and q >= 1");
  const TowerReal m = f.max_modulus(r);
  if (absorbed && m.absorbed()) *absorbed = true;
  const auto den = to_extended(log_k(r, static_cast<std::uint32_t>(q)));
  if (!den) fail(ErrorCode::IndeterminateError, "log^[q] r exceeds the mantissa range");
  if (!(*den > 0)) fail(ErrorCode::IndeterminateError, "log^[q] r is not positive");
  const auto num = to_extended(log_k(m, static_cast<std::uint32_t>(p)));
  if (!num) return std::numeric_limits<double>::infinity();
  return static_cast<double>(*num / *den);
}

OrderEstimate summarize_pair(const std::vector<double>& values, double ctol, const Tolerances& tol,
                             bool absorbed) {
  OrderEstimate out{summarize_tail(values, TailStat::Sup, ctol, tol),
                    summarize_tail(values, TailStat::Inf, ctol, tol)};
  out.rho.absorbed = out.lambda.absorbed = absorbed;
  return out;
}

}  // namespace

double quotient(const GrowthObject& f, const TowerReal& r, int p, int q) {
  return quotient_impl(f, r, p, q, nullptr);
}

RGrid grid_for(const GrowthObject& f, int q, const GridSpec& spec) {
  auto [lo, hi] = grid_span(q, spec);
  return make_grid(q, spec, f.boundary_radii(lo, hi));
}

OrderEstimate pq_order_on(const GrowthObject& f, int p, int q, const RGrid& grid,
                          const Tolerances& tol) {
  if (q < 1 || p < q) fail(ErrorCode::InvalidValue, "pq_order requires p >= q >= 1");
  if (grid.q != q) fail(ErrorCode::InvalidValue, "grid was built for a different q");
  std::vector<double> values;
  bool absorbed = false;
  for (std::size_t i = grid.tail_begin; i < grid.size(); ++i)
    values.push_back(quotient_impl(f, grid.r[i], p, q, &absorbed));
  return summarize_pair(values, resolve_conv_tol(tol, f.oscillating()), tol, absorbed);
}

OrderEstimate pq_order(const GrowthObject& f, int p, int q, const GridSpec& spec,
                       const Tolerances& tol) {
  if (q < 1 || p < q) fail(ErrorCode::InvalidValue, "pq_order requires p >= q >= 1");
  return pq_order_on(f, p, q, grid_for(f, q, spec), tol);
}

IndexPairResult detect_index_pair(const GrowthObject& f, int p_max, const GridSpec& spec,
                                  const Tolerances& tol) {
  if (p_max < 1) fail(ErrorCode::InvalidValue, "p_max must be >= 1");
  const double ctol = resolve_conv_tol(tol, f.oscillating());
  std::map<int, RGrid> grids;
  std::map<std::pair<int, int>, OrderEstimate> cache;
  auto cell = [&](int p, int q) -> const OrderEstimate& {
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto git = grids.find(q);
    if (git == grids.end()) git = grids.emplace(q, grid_for(f, q, spec)).first;
    return cache.emplace(key, pq_order_on(f, p, q, git->second, tol)).first->second;
  };
  auto nonzero_finite = [&](const GrowthEstimate& e) {
    return e.finite() && std::fabs(e.value) > tol.tiny;
  };

  for (int p = 1; p <= p_max; ++p) {
    for (int q = 1; q <= p; ++q) {
      const GrowthEstimate& rho = cell(p, q).rho;
      const double b = p == q ? 1.0 : 0.0;
      if (!rho.finite() || !(rho.value > b + ctol)) continue;
      if (p - 1 >= 1 && q - 1 >= 1 && nonzero_finite(cell(p - 1, q - 1).rho)) continue;

      IndexPairResult res;
      res.p = p;
      res.q = q;
      res.rho = rho;
      res.lambda = cell(p, q).lambda;
      res.regular = res.lambda.finite() && std::fabs(res.lambda.value - rho.value) <= ctol;
      auto check = [&](int cp, int cq, GrowthClass expected) {
        ConsistencyCell c{cp, cq, expected, cell(cp, cq).rho, false};
        c.ok = c.measured.cls == expected;
        res.consistent = res.consistent && c.ok;
        res.cells.push_back(c);
      };
      for (int n = 1; n < p && p - n >= q; ++n) check(p - n, q, GrowthClass::Infinity);
      for (int n = 1; n < q; ++n) check(p, q - n, GrowthClass::Zero);
      for (int n = 1; n <= 2; ++n) check(p + n, q + n, GrowthClass::Unit);
      return res;
    }
  }
  fail(ErrorCode::NotFound, "no admissible index pair for '" + f.describe() + "' with p <= " +
                                std::to_string(p_max));
}

namespace {

// -1: M(r) < s, +1: M(r) >= s. Radii at or below the domain floor count as below.
int side(const GrowthObject& f, Mantissa psi_r, const TowerReal& s) {
  TowerReal r = from_psi(psi_r);
  if (!(r > f.domain_floor())) return -1;
  try {
    return f.max_modulus(r) < s ? -1 : 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) return -1;
    throw;
  }
}

}  // namespace

TowerReal inverse_max_modulus(const GrowthObject& f, const TowerReal& s, double rel_tol) {
  if (!(s > f.anchor()))
    fail(ErrorCode::DomainError, "target " + to_string(s) + " is not above |f(0)| = " +
                                     to_string(f.anchor()));
  const Mantissa floor_psi = psi(f.domain_floor());
  Mantissa lo = floor_psi + 1;
  int shrink = 0;
  while (side(f, lo, s) > 0) {
    if (++shrink > 400)
      fail(ErrorCode::DomainError, "target " + to_string(s) + " is not attained above the floor");
    lo = floor_psi + (lo - floor_psi) / 2;
  }
  Mantissa hi = lo + 1;
  for (int steps = 0; side(f, hi, s) < 0; ++steps) {
    if (steps > 100000) fail(ErrorCode::DomainError, "could not bracket target " + to_string(s));
    lo = hi;
    hi += 1;
  }
  for (int it = 0; it < 200; ++it) {
    const Mantissa mid = lo + (hi - lo) / 2;
    if (!(mid > lo) || !(mid < hi)) break;
    if (side(f, mid, s) < 0) lo = mid;
    else hi = mid;
  }
  const TowerReal r_hi = from_psi(hi);
  const Mantissa err_hi = comparison_metric(f.max_modulus(r_hi), s);
  if (err_hi <= rel_tol) return r_hi;
  const TowerReal r_lo = from_psi(lo);
  if (r_lo > f.domain_floor()) {
    const Mantissa err_lo = comparison_metric(f.max_modulus(r_lo), s);
    if (err_lo < err_hi) return r_lo;
  }
  return r_hi;
}

double relative_quotient(const GrowthObject& f, const GrowthObject& g, const TowerReal& r, int p,
                         int q) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidValue, "relative order needs p, q >= 1");
  const TowerReal s = f.max_modulus(r);
  if (!(s > g.anchor()))
    fail(ErrorCode::DomainError, "M_f(r) does not exceed |g(0)| at r = " + to_string(r));
  const TowerReal u = inverse_max_modulus(g, s);
  const auto den = to_extended(log_k(r, static_cast<std::uint32_t>(q)));
  if (!den || !(*den > 0)) fail(ErrorCode::IndeterminateError, "log^[q] r is not a positive real");
  const auto num = to_extended(log_k(u, static_cast<std::uint32_t>(p)));
  if (!num) return std::numeric_limits<double>::infinity();
  return static_cast<double>(*num / *den);
}

std::vector<TowerReal> pulled_back_boundaries(const GrowthObject& f, const GrowthObject& g,
                                              const TowerReal& lo, const TowerReal& hi) {
  std::vector<TowerReal> out;
  if (!g.oscillating()) return out;
  const TowerReal s_lo = f.max_modulus(lo);
  const TowerReal s_hi = f.max_modulus(hi);
  if (!(s_hi > g.anchor())) return out;
  const TowerReal u_lo = s_lo > g.anchor() ? inverse_max_modulus(g, s_lo) : g.domain_floor();
  const TowerReal u_hi = inverse_max_modulus(g, s_hi);
  for (const auto& u : g.boundary_radii(u_lo, u_hi)) {
    const TowerReal target = g.max_modulus(u);
    if (target > f.anchor()) out.push_back(inverse_max_modulus(f, target));
  }
  return out;
}

OrderEstimate relative_pq_order(const GrowthObject& f, const GrowthObject& g, int p, int q,
                                const GridSpec& spec, const Tolerances& tol) {
  if (p < 1 || q < 1) fail(ErrorCode::InvalidValue, "relative order needs p, q >= 1");
  auto [lo, hi] = grid_span(q, spec);
  std::vector<TowerReal> snap = f.boundary_radii(lo, hi);
  for (auto& r : pulled_back_boundaries(f, g, lo, hi)) snap.push_back(r);
  const RGrid grid = make_grid(q, spec, snap);
  std::vector<double> values;
  for (std::size_t i = grid.tail_begin; i < grid.size(); ++i)
    values.push_back(relative_quotient(f, g, grid.r[i], p, q));
  return summarize_pair(values, resolve_conv_tol(tol, f.oscillating() || g.oscillating()), tol,
                        false);
}

OrderEstimate relative_order(const GrowthObject& f, const GrowthObject& g, const GridSpec& spec,
                             const Tolerances& tol) {
  return relative_pq_order(f, g, 1, 1, spec, tol);
}

OrderEstimate generalized_relative_order(const GrowthObject& f, const GrowthObject& g, int k,
                                         const GridSpec& spec, const Tolerances& tol) {
  return relative_pq_order(f, g, k, 1, spec, tol);
}

}  // namespace gk
