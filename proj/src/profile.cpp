// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/profile.hpp"

#include <cmath>
#include <cstdio>

#include "growthkit/error.hpp"

namespace gk {

namespace {

constexpr long long kMaxBoundaries = 100000;

struct Block {
  Mantissa log_start;  // ln t_j
  Mantissa a;          // E(t_j)/t_j
  Mantissa b;          // E(t_{j+1})/t_{j+1}
};

}  // namespace

Oscillation default_oscillation(double rho, double lambda) {
  return Oscillation{10.0, 2.0 * rho / lambda};
}

GrowthProfile make_profile(int p, int q, double rho, double lambda,
                           std::optional<Oscillation> osc) {
  auto reject = [](const std::string& why) { fail(ErrorCode::AdmissibilityError, why); };
  if (q < 1 || p < q) reject("profile requires p >= q >= 1");
  if (!std::isfinite(rho) || !std::isfinite(lambda)) reject("rho and lambda must be finite");
  if (!(lambda > 0) || lambda > rho) reject("profile requires 0 < lambda <= rho");
  if (p == q && !(lambda > 1)) reject("p = q requires rho > 1 and lambda > 1");
  if (!osc && lambda < rho) osc = default_oscillation(rho, lambda);
  if (osc) {
    if (!(osc->t0 > std::exp(1.0)) || !std::isfinite(osc->t0)) reject("block start t0 must exceed e");
    if (!(osc->gamma > 1) || !std::isfinite(osc->gamma)) reject("block growth factor must exceed 1");
    if (lambda < rho && !(lambda * osc->gamma > rho))
      reject("oscillating profile requires lambda * gamma > rho");
  }
  GrowthProfile g;
  g.p_ = p;
  g.q_ = q;
  g.rho_ = rho;
  g.lambda_ = lambda;
  g.osc_ = osc;
  return g;
}

Mantissa GrowthProfile::boundary_ratio(long long j) const {
  if (j <= 0) return lambda_;
  if (j % 2 == 1) return rho_;
  return std::max<Mantissa>(lambda_, static_cast<Mantissa>(rho_) / osc_->gamma);
}

namespace {

Block locate(const GrowthProfile& g, Mantissa log_t) {
  const Mantissa lt0 = std::log(static_cast<Mantissa>(g.oscillation()->t0));
  const Mantissa lg = std::log(static_cast<Mantissa>(g.oscillation()->gamma));
  auto j = static_cast<long long>(std::floor((log_t - lt0) / lg));
  if (j < 0) j = 0;
  while (j > 0 && log_t < lt0 + j * lg) --j;
  while (log_t >= lt0 + (j + 1) * lg) ++j;
  return Block{lt0 + j * lg, g.boundary_ratio(j), g.boundary_ratio(j + 1)};
}

// E(t)/t_j for u = t/t_j in [1, gamma).
Mantissa block_shape(const Block& blk, Mantissa u, Mantissa gamma) {
  const Mantissa s = (blk.b * gamma - blk.a) / (gamma - 1);
  const Mantissa c = gamma * (blk.a - blk.b) / (gamma - 1);
  return s * u + c;
}

}  // namespace

Mantissa GrowthProfile::quotient_at(Mantissa t) const {
  if (!osc_) return rho_;
  if (t <= osc_->t0) return lambda_;
  Block blk = locate(*this, std::log(t));
  Mantissa u = std::exp(std::log(t) - blk.log_start);
  return block_shape(blk, u, osc_->gamma) / u;
}

TowerReal GrowthProfile::exponent(const TowerReal& t) const {
  if (!osc_) return mul(TowerReal::from_real(rho_), t);
  if (!(t > TowerReal::from_real(osc_->t0))) return mul(TowerReal::from_real(lambda_), t);
  auto lt = to_extended(log_k(t, 1));
  if (!lt) return mul(TowerReal::from_real(rho_), t).with_absorbed(true);
  Block blk = locate(*this, *lt);
  Mantissa u = std::exp(*lt - blk.log_start);
  Mantissa log_e = blk.log_start + std::log(block_shape(blk, u, osc_->gamma));
  return exp_k(TowerReal::from_real(log_e), 1).with_absorbed(t.absorbed());
}

TowerReal GrowthProfile::max_modulus(const TowerReal& r) const {
  if (!(r > domain_floor())) fail(ErrorCode::DomainError, "radius below the profile's domain");
  return exp_k(exponent(log_k(r, q_)), p_);
}

TowerReal GrowthProfile::anchor() const { return exp_k(TowerReal::zero(), p_ - 1); }

TowerReal GrowthProfile::domain_floor() const {
  if (q_ == 1) return TowerReal::zero();
  return exp_k(TowerReal::from_real(1), q_ - 2);
}

std::vector<Mantissa> GrowthProfile::boundaries(Mantissa lo, Mantissa hi) const {
  std::vector<Mantissa> out;
  if (!osc_ || !(hi >= lo)) return out;
  const Mantissa lt0 = std::log(static_cast<Mantissa>(osc_->t0));
  const Mantissa lg = std::log(static_cast<Mantissa>(osc_->gamma));
  long long j0 = 0;
  if (lo > osc_->t0) j0 = static_cast<long long>(std::ceil((std::log(lo) - lt0) / lg)) - 1;
  if (j0 < 0) j0 = 0;
  for (long long j = j0; j < j0 + kMaxBoundaries; ++j) {
    Mantissa t = std::exp(lt0 + j * lg);
    if (t > hi) break;
    if (t >= lo) out.push_back(t);
  }
  return out;
}

std::string GrowthProfile::describe() const {
  char buf[160];
  if (osc_) {
    std::snprintf(buf, sizeof buf, "profile(%d,%d,%.12g,%.12g,%.12g,%.12g)", p_, q_, rho_, lambda_,
                  osc_->t0, osc_->gamma);
  } else {
    std::snprintf(buf, sizeof buf, "profile(%d,%d,%.12g,%.12g)", p_, q_, rho_, lambda_);
  }
  return buf;
}

}  // namespace gk
