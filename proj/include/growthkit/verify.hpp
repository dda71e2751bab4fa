// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthkit/curves.hpp"
#include "growthkit/growth.hpp"
#include "growthkit/verdict.hpp"

namespace gk {

struct IndexPair {
  int p = 1;
  int q = 1;
};

// Index pair plus order and lower order of one function.
struct Measured {
  IndexPair pair;
  GrowthEstimate rho;
  GrowthEstimate lambda;
};

Measured measure(const GrowthObject& f, int p_max = 6, const GridSpec& spec = {},
                 const Tolerances& tol = {});

enum class CaseTag { QEqualsM, QGreaterM, QLessM };
enum class HypothesisTag { LambdaFPositive, LambdaGPositive, Both, Neither };

std::string_view case_tag_name(CaseTag c) noexcept;  // "i", "ii", "iii"
std::string_view hypothesis_tag_name(HypothesisTag h) noexcept;

CaseTag case_of(int q, int m) noexcept;

struct CompositionCase {
  std::string id;
  GrowthObject f;
  GrowthObject g;
  Measured mf;
  Measured mg;
  CaseTag tag = CaseTag::QEqualsM;
  HypothesisTag hypothesis = HypothesisTag::Neither;
};

CompositionCase make_case(std::string id, const GrowthObject& f, const GrowthObject& g,
                          const GridSpec& spec = {}, const Tolerances& tol = {});

// Index pair the composition is predicted to have.
IndexPair predicted_pair(const Measured& f, const Measured& g);

struct ReportRow {
  int theorem = 0;
  std::string case_tag;
  std::string instance;
  double predicted_lo = 0;
  double predicted_hi = 0;
  double measured = 0;
  // Signed distance from the measured value to the nearer end of the interval;
  // negative outside.
  double margin = 0;
  double tolerance = 0;
  Verdict verdict = Verdict::Inconclusive;
  // exact, upper, lower, or ratio for chain rows.
  std::string subject;
  std::string relation;
};

struct VerificationReport {
  int theorem = 0;
  std::string instance;
  std::string description;
  std::string case_tag;
  IndexPair predicted;
  std::string hypothesis;
  std::vector<ReportRow> rows;
  // Every chain member measured or predicted by a ratio theorem, for spread checks.
  std::vector<double> chain_values;

  // Worst verdict across rows: Fail, then Inconclusive, then HypothesisViolated, then Pass.
  Verdict verdict() const;
};

// Builds a row asserting lo - tol <= measured <= hi + tol.
ReportRow interval_row(double lo, double hi, const GrowthEstimate& measured, double tol);

VerificationReport check_theorem1(const CompositionCase& c, const GridSpec& spec = {},
                                  const Tolerances& tol = {});
VerificationReport check_theorem2(const CompositionCase& c, const GridSpec& spec = {},
                                  const Tolerances& tol = {});

// A comparator function with its index pair; exp-tower comparators exp^[j](z)
// carry (j+1, 1), and z carries (1, 1).
struct Comparator {
  GrowthObject fn;
  IndexPair pair;
};

Comparator comparator(unsigned height);
// Measures the index pair of an arbitrary growth object.
Comparator comparator(const GrowthObject& fn, const GridSpec& spec = {}, const Tolerances& tol = {});

struct RatioInstance {
  CompositionCase base;
  Comparator h;
  // k for theorems 3, 5, 7 and l for theorems 4, 6, 8.
  Comparator k;
};

// Theorems 3 to 8: limits of log^[b] M_h^-1 M_{f o g} against either
// log^[d] M_k^-1 M_f (odd ids) or log^[y] M_l^-1 M_g (even ids).
VerificationReport check_ratio_theorem(int id, const RatioInstance& inst, const GridSpec& spec = {},
                                       const Tolerances& tol = {});

// Comparators that make every side condition of a ratio theorem hold for the
// measured index pairs, when such heights exist.
std::optional<RatioInstance> default_ratio_instance(int id, const CompositionCase& c);

// max - min of chain_values; 0 when there are none.
double chain_spread(const VerificationReport& report);

}  // namespace gk
