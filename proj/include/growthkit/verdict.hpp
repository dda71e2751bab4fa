// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace gk {

enum class Verdict { Pass, Fail, Inconclusive, HypothesisViolated };

constexpr std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::HypothesisViolated: return "HypothesisViolated";
  }
  return "?";
}

}  // namespace gk
