// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthkit/verify.hpp"

namespace gk {

// One theorem check on one (f, g) pair. Ratio theorems use h and k (or l)
// when given and the default exp-tower comparators otherwise.
struct SuiteInstance {
  std::string id;
  int theorem = 1;
  GrowthObject f;
  GrowthObject g;
  std::optional<Comparator> h;
  std::optional<Comparator> k;
};

struct SuiteConfig {
  // "default" (fixture family) or "regular" (generated regular instances).
  std::string suite = "default";
  // Theorem ids to keep; empty keeps all.
  std::vector<int> theorems;
  std::uint64_t seed = 1;
  GridSpec grid;
  Tolerances tol;
  int regular_count = 50;
  // Harness self-test: replaces the first asserted interval by one with hi < lo.
  bool corrupt_bound = false;
  // When set, replaces the named suite.
  std::optional<std::vector<SuiteInstance>> instances;
  // Worker threads; 0 selects the hardware concurrency.
  unsigned threads = 0;
};

struct SuiteSummary {
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int hypothesis_violated = 0;
  int reports = 0;
  int rows = 0;
};

struct SuiteResult {
  // Sorted by (theorem, instance id).
  std::vector<VerificationReport> reports;
  // Counts report verdicts.
  SuiteSummary summary;
  // Largest chain spread over ratio-theorem reports.
  double max_chain_spread = 0;
};

std::vector<SuiteInstance> default_suite();
// Regular instances cycling through the three composition cases and the
// ratio theorems 3 and 5, drawn from a seeded generator.
std::vector<SuiteInstance> regular_suite(int count, std::uint64_t seed);

VerificationReport run_instance(const SuiteInstance& inst, const GridSpec& spec = {},
                                const Tolerances& tol = {});
SuiteResult run_suite(const SuiteConfig& config);

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace gk
