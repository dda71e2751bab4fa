// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/expr.hpp"

#include <charconv>
#include <cmath>

#include "growthkit/error.hpp"

namespace gk {

struct EntireExpr::Node {
  NodeKind kind = NodeKind::Variable;
  double coefficient = 0;
  unsigned order = 0;
  std::vector<EntireExpr> children;
};

namespace {

void check_coefficient(double c) {
  if (!std::isfinite(c)) fail(ErrorCode::InvalidValue, "coefficient must be finite");
  if (c < 0) fail(ErrorCode::NegativeCoefficient, "coefficient must be nonnegative");
}

}  // namespace

EntireExpr::EntireExpr() : EntireExpr(variable()) {}

EntireExpr EntireExpr::variable() {
  static const auto z = std::make_shared<const Node>();
  return EntireExpr(z);
}

EntireExpr EntireExpr::constant(double c) {
  check_coefficient(c);
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Const;
  n->coefficient = c == 0 ? 0.0 : c;
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::monomial(unsigned order) {
  if (order == 0) fail(ErrorCode::InvalidValue, "monomial exponent must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Monomial;
  n->order = order;
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::sum(std::vector<EntireExpr> terms) {
  if (terms.empty()) fail(ErrorCode::InvalidValue, "empty sum");
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Sum;
  n->children = std::move(terms);
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::product(std::vector<EntireExpr> factors) {
  if (factors.empty()) fail(ErrorCode::InvalidValue, "empty product");
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Product;
  n->children = std::move(factors);
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::scale(double c, EntireExpr child) {
  check_coefficient(c);
  if (c == 0) fail(ErrorCode::InvalidValue, "scale factor must be positive");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Scale;
  n->coefficient = c;
  n->children = {std::move(child)};
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::exp_iter(unsigned k, EntireExpr child) {
  if (k == 0) fail(ErrorCode::InvalidValue, "exp height must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::ExpIter;
  n->order = k;
  n->children = {std::move(child)};
  return EntireExpr(std::move(n));
}

EntireExpr EntireExpr::compose_node(EntireExpr outer, EntireExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Compose;
  n->children = {std::move(outer), std::move(inner)};
  return EntireExpr(std::move(n));
}

NodeKind EntireExpr::kind() const noexcept { return node_->kind; }
double EntireExpr::coefficient() const noexcept { return node_->coefficient; }
unsigned EntireExpr::order() const noexcept { return node_->order; }
const std::vector<EntireExpr>& EntireExpr::children() const noexcept { return node_->children; }

bool EntireExpr::is_constant() const {
  switch (kind()) {
    case NodeKind::Variable:
    case NodeKind::Monomial:
      return false;
    case NodeKind::Const:
      return true;
    case NodeKind::Sum:
      for (const auto& c : children())
        if (!c.is_constant()) return false;
      return true;
    case NodeKind::Product:
      for (const auto& c : children())
        if (c.is_zero()) return true;
      for (const auto& c : children())
        if (!c.is_constant()) return false;
      return true;
    case NodeKind::Scale:
    case NodeKind::ExpIter:
      return children()[0].is_constant();
    case NodeKind::Compose:
      return children()[0].is_constant() || children()[1].is_constant();
  }
  return false;
}

bool EntireExpr::is_zero() const {
  return is_constant() && evaluate(*this, TowerReal::zero()).is_zero();
}

std::size_t EntireExpr::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

bool operator==(const EntireExpr& a, const EntireExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.coefficient() != b.coefficient() || a.order() != b.order())
    return false;
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!(ca[i] == cb[i])) return false;
  return true;
}

EntireExpr compose(const EntireExpr& f, const EntireExpr& g) {
  if (f.kind() == NodeKind::Variable) return g;
  return EntireExpr::compose_node(f, g);
}

void require_nonconstant(const EntireExpr& f) {
  if (f.is_constant())
    fail(ErrorCode::ConstantFunction, "expression '" + print(f) + "' is constant");
}

TowerReal evaluate(const EntireExpr& f, const TowerReal& r) {
  switch (f.kind()) {
    case NodeKind::Variable:
      return r;
    case NodeKind::Const:
      return TowerReal::from_real(f.coefficient());
    case NodeKind::Monomial:
      if (r.is_negative()) fail(ErrorCode::DomainError, "negative radius");
      return pow_scalar(r, f.order());
    case NodeKind::Sum: {
      TowerReal acc = evaluate(f.children()[0], r);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        acc = add(acc, evaluate(f.children()[i], r));
      return acc;
    }
    case NodeKind::Product: {
      TowerReal acc = evaluate(f.children()[0], r);
      for (std::size_t i = 1; i < f.children().size(); ++i)
        acc = mul(acc, evaluate(f.children()[i], r));
      return acc;
    }
    case NodeKind::Scale:
      return mul(TowerReal::from_real(f.coefficient()), evaluate(f.children()[0], r));
    case NodeKind::ExpIter:
      return exp_k(evaluate(f.children()[0], r), f.order());
    case NodeKind::Compose:
      return evaluate(f.children()[0], evaluate(f.children()[1], r));
  }
  return r;
}

namespace {

std::string number_text(double c) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, c);
  return std::string(buf, res.ptr);
}

bool is_compound(NodeKind k) {
  return k == NodeKind::Sum || k == NodeKind::Product || k == NodeKind::Scale;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string print(const EntireExpr& f) {
  switch (f.kind()) {
    case NodeKind::Variable:
      return "z";
    case NodeKind::Const:
      return number_text(f.coefficient());
    case NodeKind::Monomial:
      return "z^" + std::to_string(f.order());
    case NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        const auto& c = f.children()[i];
        if (i) out += " + ";
        out += c.kind() == NodeKind::Sum ? wrap(print(c)) : print(c);
      }
      return out;
    }
    case NodeKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        const auto& c = f.children()[i];
        if (i) out += " * ";
        // A leading bare number would read back as a Scale.
        bool paren = is_compound(c.kind()) || (i == 0 && c.kind() == NodeKind::Const);
        out += paren ? wrap(print(c)) : print(c);
      }
      return out;
    }
    case NodeKind::Scale: {
      const auto& c = f.children()[0];
      bool paren = c.kind() == NodeKind::Sum || c.kind() == NodeKind::Scale;
      return number_text(f.coefficient()) + " * " + (paren ? wrap(print(c)) : print(c));
    }
    case NodeKind::ExpIter: {
      std::string head = f.order() == 1 ? "exp" : "exp[" + std::to_string(f.order()) + "]";
      return head + wrap(print(f.children()[0]));
    }
    case NodeKind::Compose: {
      const auto& o = f.children()[0];
      const auto& i = f.children()[1];
      std::string lhs = is_compound(o.kind()) ? wrap(print(o)) : print(o);
      bool paren = is_compound(i.kind()) || i.kind() == NodeKind::Compose;
      return lhs + " o " + (paren ? wrap(print(i)) : print(i));
    }
  }
  return {};
}

}  // namespace gk
