#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crlevi/errors.hpp"
#include "crlevi/poly.hpp"

namespace crlevi {

// Grammar (whitespace between tokens is ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | base ('^' nat)?
//   base     := rational | 'i' | var | '(' expr ')'
//   var      := ('z' | 'zbar' | 'x') nat
//   rational := nat ('/' nat)?
//
// Unary minus binds looser than '^', so "-z1^2" is -(z1^2).

enum class ExprMode { Complex, Real };

struct ExprNode {
  enum class Kind { Rational, ImaginaryUnit, Variable, Negate, Sum, Difference, Product, Power, Group };
  enum class VarKind { Z, Zbar, X };

  Kind kind;
  Rational value;           // Rational
  VarKind var = VarKind::X;  // Variable
  std::size_t index = 0;    // Variable, 1-based
  unsigned power = 0;       // Power
  std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprAST = std::unique_ptr<ExprNode>;

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, ExprMode mode, std::size_t dim)
      : text_(text), mode_(mode), dim_(dim) {}

  ExprAST parse() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) {
      std::set<std::string> expected{"+", "-", "*", "end of input"};
      if (!after_power_) expected.insert("^");
      fail(expected);
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw SyntaxError(pos_, std::move(expected), std::string(text_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  static ExprAST node(ExprNode::Kind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
  }
  static ExprAST binary(ExprNode::Kind k, ExprAST a, ExprAST b) {
    auto n = node(k);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  std::set<std::string> base_tokens() const {
    std::set<std::string> s{"(", "-", "i", "nat"};
    if (mode_ == ExprMode::Complex) {
      s.insert("z<k>");
      s.insert("zbar<k>");
    } else {
      s.insert("x<k>");
    }
    return s;
  }

  ExprAST parse_expr() {
    auto lhs = parse_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        lhs = binary(ExprNode::Kind::Sum, std::move(lhs), parse_term());
      } else if (peek('-')) {
        ++pos_;
        lhs = binary(ExprNode::Kind::Difference, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprAST parse_term() {
    auto lhs = parse_factor();
    while (peek('*')) {
      ++pos_;
      lhs = binary(ExprNode::Kind::Product, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  ExprAST parse_factor() {
    if (peek('-')) {
      ++pos_;
      auto n = node(ExprNode::Kind::Negate);
      n->children.push_back(parse_factor());
      return n;
    }
    auto b = parse_base();
    after_power_ = false;
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (!peek_digit()) fail({"nat"});
      auto n = node(ExprNode::Kind::Power);
      n->power = static_cast<unsigned>(parse_nat().get_ui());
      n->children.push_back(std::move(b));
      after_power_ = true;
      return n;
    }
    return b;
  }

  Integer parse_nat() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  ExprAST parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail(base_tokens());
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      if (!peek(')')) fail({")", "+", "-", "*"});
      ++pos_;
      auto n = node(ExprNode::Kind::Group);
      n->children.push_back(std::move(inner));
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_nat();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"nat"});
        std::size_t den_pos = pos_;
        den = parse_nat();
        if (den == 0) {
          pos_ = den_pos;
          fail({"nonzero nat"});
        }
      }
      auto n = node(ExprNode::Kind::Rational);
      n->value = Rational(num, den);
      n->value.canonicalize();
      return n;
    }
    std::size_t start = pos_;
    if (mode_ == ExprMode::Complex && c == 'z') {
      ExprNode::VarKind kind = match_word("zbar") ? ExprNode::VarKind::Zbar : (++pos_, ExprNode::VarKind::Z);
      return parse_var(kind, start);
    }
    if (mode_ == ExprMode::Real && c == 'x') {
      ++pos_;
      return parse_var(ExprNode::VarKind::X, start);
    }
    if (c == 'i') {
      ++pos_;
      return node(ExprNode::Kind::ImaginaryUnit);
    }
    fail(base_tokens());
  }

  ExprAST parse_var(ExprNode::VarKind kind, std::size_t start) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"nat"});
    Integer idx = parse_nat();
    if (idx == 0 || idx > dim_)
      throw IndexError("variable \"" + std::string(text_.substr(start, pos_ - start)) + "\" at offset " +
                       std::to_string(start) + " outside 1.." + std::to_string(dim_));
    auto n = node(ExprNode::Kind::Variable);
    n->var = kind;
    n->index = idx.get_ui();
    return n;
  }

  std::string_view text_;
  ExprMode mode_;
  std::size_t dim_;
  std::size_t pos_ = 0;
  bool after_power_ = false;
};

}  // namespace detail

/// Parses `text` into an expression tree. `dim` is the ambient complex
/// dimension (complex mode) or the number of real variables (real mode).
inline ExprAST parse_ast(std::string_view text, ExprMode mode, std::size_t dim) {
  return detail::ExprParser(text, mode, dim).parse();
}

/// Expands an expression tree into a polynomial in 2*dim (complex) or dim
/// (real) variables.
inline Poly to_poly(const ExprNode& n, ExprMode mode, std::size_t dim) {
  const std::size_t nvars = mode == ExprMode::Complex ? 2 * dim : dim;
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Rational:
      return Poly::constant(nvars, GaussianRational(n.value));
    case K::ImaginaryUnit:
      return Poly::constant(nvars, GaussianRational::i());
    case K::Variable: {
      std::size_t k = n.index - 1;
      if (n.var == ExprNode::VarKind::Zbar) k += dim;
      return Poly::variable(nvars, k);
    }
    case K::Negate:
      return -to_poly(*n.children[0], mode, dim);
    case K::Sum:
      return to_poly(*n.children[0], mode, dim) + to_poly(*n.children[1], mode, dim);
    case K::Difference:
      return to_poly(*n.children[0], mode, dim) - to_poly(*n.children[1], mode, dim);
    case K::Product:
      return to_poly(*n.children[0], mode, dim) * to_poly(*n.children[1], mode, dim);
    case K::Power:
      return to_poly(*n.children[0], mode, dim).pow(n.power);
    case K::Group:
      return to_poly(*n.children[0], mode, dim);
  }
  return Poly(nvars);
}

/// Complex-mode parse: a polynomial in z_1..z_m, zbar_1..zbar_m.
inline WPoly parse_wpoly(std::string_view text, std::size_t m) {
  auto ast = parse_ast(text, ExprMode::Complex, m);
  return {m, to_poly(*ast, ExprMode::Complex, m)};
}

/// Real-mode parse: a polynomial in x_1..x_d.
inline Poly parse_real_poly(std::string_view text, std::size_t d) {
  auto ast = parse_ast(text, ExprMode::Real, d);
  return to_poly(*ast, ExprMode::Real, d);
}

inline std::string to_real_string(const Poly& p) { return format_poly(p, real_variable_names()); }

}  // namespace crlevi
