// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "growthkit/tower.hpp"

namespace gk {

enum class NodeKind { Variable, Const, Monomial, Sum, Product, Scale, ExpIter, Compose };

// Immutable expression tree for entire functions with nonnegative Taylor
// coefficients. Subtrees may be constant; top-level objects handed to the
// estimators must not be (see require_nonconstant).
class EntireExpr {
 public:
  EntireExpr();  // the variable z

  static EntireExpr variable();
  static EntireExpr constant(double c);
  static EntireExpr monomial(unsigned n);
  // A single term/factor is returned unchanged.
  static EntireExpr sum(std::vector<EntireExpr> terms);
  static EntireExpr product(std::vector<EntireExpr> factors);
  static EntireExpr scale(double c, EntireExpr child);
  static EntireExpr exp_iter(unsigned k, EntireExpr child);
  static EntireExpr compose_node(EntireExpr outer, EntireExpr inner);

  NodeKind kind() const noexcept;
  // Const value or Scale factor.
  double coefficient() const noexcept;
  // Monomial exponent or ExpIter height.
  unsigned order() const noexcept;
  // Sum terms, Product factors, {child} for Scale/ExpIter, {outer, inner} for Compose.
  const std::vector<EntireExpr>& children() const noexcept;

  bool is_constant() const;
  bool is_zero() const;
  std::size_t node_count() const;

  friend bool operator==(const EntireExpr& a, const EntireExpr& b);

 private:
  struct Node;
  explicit EntireExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// f o g; the identity outer function collapses to g.
EntireExpr compose(const EntireExpr& f, const EntireExpr& g);

void require_nonconstant(const EntireExpr& f);

// f(r) for r >= 0 in tower arithmetic; equals M_f(r) on this family.
TowerReal evaluate(const EntireExpr& f, const TowerReal& r);

// Canonical text in the CLI grammar.
std::string print(const EntireExpr& f);

// Throws SyntaxError (code SyntaxError or NegativeCoefficient) with the
// offending line/column, or Error(ConstantFunction) for constant input.
EntireExpr parse_expr(std::string_view text);

}  // namespace gk
