// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/error.hpp"

namespace gk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::AdmissibilityError: return "AdmissibilityError";
    case ErrorCode::GuardRadiusExceeded: return "GuardRadiusExceeded";
    case ErrorCode::NonpositiveArgument: return "NonpositiveArgument";
    case ErrorCode::IndeterminateError: return "IndeterminateError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace gk
