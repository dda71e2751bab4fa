// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gk {

enum class ErrorCode {
  InvalidValue,
  DomainError,
  Overflow,
  SyntaxError,
  NegativeCoefficient,
  ConstantFunction,
  AdmissibilityError,
  GuardRadiusExceeded,
  NonpositiveArgument,
  IndeterminateError,
  NotFound,
  HypothesisViolated,
  ConfigError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& msg, int line, int column)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gk
