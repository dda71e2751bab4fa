// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "growthkit/error.hpp"
#include "growthkit/expr.hpp"

namespace gk {

namespace {

enum class Tok { Number, Z, Exp, Compose, Caret, LBracket, RBracket, LParen, RParen, Plus, Star, End };

struct Token {
  Tok kind = Tok::End;
  double number = 0;
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  EntireExpr parse() {
    EntireExpr e = expr();
    if (tok_.kind != Tok::End) error(tok_.pos, "unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(std::size_t pos, const std::string& msg,
                          ErrorCode code = ErrorCode::SyntaxError) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(code, msg, line, col);
  }

  void skip_space() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  static bool starts_number(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.pos = at_;
    if (at_ >= text_.size()) return;
    char c = text_[at_];
    if (starts_number(c)) {
      double v = 0;
      auto res = std::from_chars(text_.data() + at_, text_.data() + text_.size(), v);
      if (res.ec != std::errc() || !std::isfinite(v)) error(at_, "malformed number");
      at_ = static_cast<std::size_t>(res.ptr - text_.data());
      tok_.kind = Tok::Number;
      tok_.number = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = at_;
      while (at_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[at_]))) ++at_;
      std::string_view word = text_.substr(b, at_ - b);
      if (word == "z") tok_.kind = Tok::Z;
      else if (word == "exp") tok_.kind = Tok::Exp;
      else if (word == "o") tok_.kind = Tok::Compose;
      else error(b, "unknown identifier '" + std::string(word) + "'");
      return;
    }
    ++at_;
    switch (c) {
      case '^': tok_.kind = Tok::Caret; return;
      case '[': tok_.kind = Tok::LBracket; return;
      case ']': tok_.kind = Tok::RBracket; return;
      case '(': tok_.kind = Tok::LParen; return;
      case ')': tok_.kind = Tok::RParen; return;
      case '+': tok_.kind = Tok::Plus; return;
      case '*': tok_.kind = Tok::Star; return;
      case '-': {
        skip_space();
        if (at_ < text_.size() && starts_number(text_[at_]))
          error(tok_.pos, "negative coefficients are outside the family",
                ErrorCode::NegativeCoefficient);
        error(tok_.pos, "subtraction is not part of the grammar");
      }
      default:
        error(tok_.pos, std::string("unexpected character '") + c + "'");
    }
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) error(tok_.pos, std::string("expected ") + what);
    advance();
  }

  unsigned unsigned_integer(const char* what) {
    if (tok_.kind != Tok::Number) error(tok_.pos, std::string("expected ") + what);
    std::size_t b = tok_.pos;
    unsigned v = 0;
    auto res = std::from_chars(text_.data() + b, text_.data() + text_.size(), v);
    if (res.ec != std::errc() || static_cast<std::size_t>(res.ptr - text_.data()) != at_)
      error(b, std::string("expected ") + what);
    if (v == 0) error(b, std::string(what) + " must be >= 1");
    advance();
    return v;
  }

  EntireExpr expr() {
    std::vector<EntireExpr> terms{term()};
    while (tok_.kind == Tok::Plus) {
      advance();
      terms.push_back(term());
    }
    return EntireExpr::sum(std::move(terms));
  }

  EntireExpr term() {
    bool bare = false;
    std::vector<EntireExpr> factors{factor(&bare)};
    const bool leading_number = bare;
    while (tok_.kind == Tok::Star) {
      advance();
      factors.push_back(factor(&bare));
    }
    if (factors.size() > 1 && leading_number && factors[0].coefficient() > 0) {
      double c = factors[0].coefficient();
      factors.erase(factors.begin());
      return EntireExpr::scale(c, EntireExpr::product(std::move(factors)));
    }
    return EntireExpr::product(std::move(factors));
  }

  EntireExpr factor(bool* bare_number) {
    bool bare = false;
    EntireExpr lhs = base(&bare);
    while (tok_.kind == Tok::Compose) {
      bare = false;
      advance();
      bool unused = false;
      lhs = EntireExpr::compose_node(lhs, base(&unused));
    }
    *bare_number = bare;
    return lhs;
  }

  EntireExpr base(bool* bare_number) {
    *bare_number = false;
    switch (tok_.kind) {
      case Tok::Z: {
        advance();
        if (tok_.kind != Tok::Caret) return EntireExpr::variable();
        advance();
        return EntireExpr::monomial(unsigned_integer("exponent"));
      }
      case Tok::Number: {
        double v = tok_.number;
        advance();
        *bare_number = true;
        return EntireExpr::constant(v);
      }
      case Tok::Exp: {
        advance();
        unsigned k = 1;
        if (tok_.kind == Tok::LBracket) {
          advance();
          k = unsigned_integer("exp height");
          expect(Tok::RBracket, "']'");
        }
        expect(Tok::LParen, "'('");
        EntireExpr inner = expr();
        expect(Tok::RParen, "')'");
        return EntireExpr::exp_iter(k, std::move(inner));
      }
      case Tok::LParen: {
        advance();
        EntireExpr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End:
        error(tok_.pos, "unexpected end of input");
      default:
        error(tok_.pos, "expected an operand");
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  Token tok_;
};

}  // namespace

EntireExpr parse_expr(std::string_view text) {
  EntireExpr e = Parser(text).parse();
  require_nonconstant(e);
  return e;
}

}  // namespace gk
