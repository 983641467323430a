// Copyright 2026 The triwit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// A small expression language for defining operators as text:
//
//   expr      := term (("+"|"-") term)*
//   term      := factor ("*" factor)*
//   factor    := scalar | primitive | "(" expr ")" | func | "-" factor
//   primitive := name "[" index "]"        index is 1-based
//   func      := "dag"(e) | "pt"(e; m,..) | "comm"(a,b) | "acomm"(a,b)
//   scalar    := decimal | int "/" int | "i"   (scalar products fold)
//
// Mode primitives: a, ad, n, x, p (boson), jp, jm, jz (spin),
// kp, km, kz (su11). pt() lowers its child to a matrix first and applies
// the matrix-level partial transpose; monomials are never transposed
// symbolically.

#pragma once

#include <cctype>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "triwit/ops.hpp"
#include "triwit/ptrans.hpp"
#include "triwit/space.hpp"

namespace triwit::dsl {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Scalar, Primitive, Sum, Product, Dag, Pt, Comm, AComm };

  Kind kind = Kind::Scalar;
  Complex scalar{};               // Scalar
  std::string prim_name;          // Primitive
  int prim_mode = 0;              // Primitive, 1-based
  std::vector<ExprPtr> children;  // Sum/Product (n), Dag/Pt (1), Comm/AComm (2)
  std::vector<int> pt_modes;      // Pt, 1-based, nonempty

  static ExprPtr make_scalar(Complex v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Scalar;
    n->scalar = v;
    return n;
  }
  static ExprPtr make_primitive(std::string name, int mode) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Primitive;
    n->prim_name = std::move(name);
    n->prim_mode = mode;
    return n;
  }
  static ExprPtr make_nary(Kind k, std::vector<ExprPtr> children) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->children = std::move(children);
    return n;
  }
  static ExprPtr make_pt(ExprPtr child, std::vector<int> modes) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Pt;
    n->children = {std::move(child)};
    n->pt_modes = std::move(modes);
    return n;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

inline bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::Scalar:
      return a.scalar == b.scalar;
    case ExprNode::Kind::Primitive:
      return a.prim_name == b.prim_name && a.prim_mode == b.prim_mode;
    case ExprNode::Kind::Pt:
      if (a.pt_modes != b.pt_modes) return false;
      [[fallthrough]];
    default:
      if (a.children.size() != b.children.size()) return false;
      for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
      return true;
  }
}

namespace detail {

inline const std::vector<std::string>& primitive_names() {
  static const std::vector<std::string> names = {"a",  "ad", "n",  "x",  "p", "jp",
                                                 "jm", "jz", "kp", "km", "kz"};
  return names;
}

inline bool is_primitive_name(const std::string& s) {
  for (const auto& n : primitive_names())
    if (n == s) return true;
  return false;
}

// A negated node is a scalar with negative leading part, or a product whose
// first factor is one. Parsing "x - y" negates y; printing recognizes the
// negated form and emits " - " with the positive counterpart, so the two
// stay inverse to each other.
inline bool scalar_is_negative(Complex v) {
  return v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0);
}

inline bool is_negated(const ExprNode& n) {
  if (n.kind == ExprNode::Kind::Scalar) return scalar_is_negative(n.scalar);
  if (n.kind == ExprNode::Kind::Product && !n.children.empty() &&
      n.children.front()->kind == ExprNode::Kind::Scalar)
    return scalar_is_negative(n.children.front()->scalar);
  return false;
}

inline ExprPtr negate(const ExprPtr& n) {
  if (n->kind == ExprNode::Kind::Scalar) return ExprNode::make_scalar(-n->scalar);
  if (n->kind == ExprNode::Kind::Product && !n->children.empty() &&
      n->children.front()->kind == ExprNode::Kind::Scalar) {
    auto children = n->children;
    children.front() = ExprNode::make_scalar(-children.front()->scalar);
    return ExprNode::make_nary(ExprNode::Kind::Product, std::move(children));
  }
  if (n->kind == ExprNode::Kind::Product) {
    std::vector<ExprPtr> children;
    children.push_back(ExprNode::make_scalar(Complex(-1.0, 0.0)));
    children.insert(children.end(), n->children.begin(), n->children.end());
    return ExprNode::make_nary(ExprNode::Kind::Product, std::move(children));
  }
  return ExprNode::make_nary(ExprNode::Kind::Product,
                             {ExprNode::make_scalar(Complex(-1.0, 0.0)), n});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    skip_ws();
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eof() const { return pos_ >= text_.size(); }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> terms;
    terms.push_back(parse_term());
    while (true) {
      skip_ws();
      if (peek() == '+') {
        advance();
        terms.push_back(parse_term());
      } else if (peek() == '-') {
        advance();
        terms.push_back(negate(parse_term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    return ExprNode::make_nary(ExprNode::Kind::Sum, std::move(terms));
  }

  ExprPtr parse_term() {
    std::vector<ExprPtr> factors;
    push_factor(factors, parse_factor());
    while (true) {
      skip_ws();
      if (peek() == '*') {
        advance();
        push_factor(factors, parse_factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return factors.front();
    return ExprNode::make_nary(ExprNode::Kind::Product, std::move(factors));
  }

  // Adjacent scalar factors fold into a single scalar, so "1/2*i" is one
  // Scalar node and pure scalar products never build Product trees.
  static void push_factor(std::vector<ExprPtr>& factors, ExprPtr f) {
    if (!factors.empty() && factors.back()->kind == ExprNode::Kind::Scalar &&
        f->kind == ExprNode::Kind::Scalar) {
      factors.back() = ExprNode::make_scalar(factors.back()->scalar * f->scalar);
    } else {
      factors.push_back(std::move(f));
    }
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    const char c = peek();
    if (c == '-') {
      advance();
      return negate(parse_factor());
    }
    if (c == '(') {
      advance();
      ExprPtr e = parse_expr();
      expect(')', "to close the parenthesized expression");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr parse_number() {
    const std::size_t start = pos_;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'))
      advance();
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    const std::string token(text_.substr(start, pos_ - start));
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(token, &used);
      if (used != token.size()) fail("malformed number '" + token + "'");
    } catch (const std::exception&) {
      fail("malformed number '" + token + "'");
    }
    // Optional rational tail: integer "/" integer.
    skip_ws();
    if (peek() == '/') {
      advance();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational");
      const std::size_t dstart = pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      const std::string den(text_.substr(dstart, pos_ - dstart));
      const double d = std::stod(den);
      if (d == 0.0) fail("rational with zero denominator");
      value /= d;
    }
    return ExprNode::make_scalar(Complex(value, 0.0));
  }

  ExprPtr parse_name() {
    const std::size_t start = pos_;
    while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) advance();
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "i") return ExprNode::make_scalar(Complex(0.0, 1.0));
    if (name == "dag" || name == "comm" || name == "acomm") {
      expect('(', ("after '" + name + "'").c_str());
      ExprPtr first = parse_expr();
      if (name == "dag") {
        expect(')', "to close dag(...)");
        return ExprNode::make_nary(ExprNode::Kind::Dag, {std::move(first)});
      }
      expect(',', ("between the arguments of " + name).c_str());
      ExprPtr second = parse_expr();
      expect(')', ("to close " + name + "(...)").c_str());
      const auto kind =
          (name == "comm") ? ExprNode::Kind::Comm : ExprNode::Kind::AComm;
      return ExprNode::make_nary(kind, {std::move(first), std::move(second)});
    }
    if (name == "pt") {
      expect('(', "after 'pt'");
      ExprPtr child = parse_expr();
      expect(';', "before the pt mode list");
      std::vector<int> modes;
      do {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a mode index");
        const std::size_t mstart = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        const int mode = std::stoi(std::string(text_.substr(mstart, pos_ - mstart)));
        if (mode < 1) fail("mode indices are 1-based");
        modes.push_back(mode);
      } while (consume(','));
      expect(')', "to close pt(...)");
      return ExprNode::make_pt(std::move(child), std::move(modes));
    }
    if (is_primitive_name(name)) {
      expect('[', ("after primitive '" + name + "'").c_str());
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a mode index");
      const std::size_t mstart = pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      const int mode = std::stoi(std::string(text_.substr(mstart, pos_ - mstart)));
      if (mode < 1) fail("mode indices are 1-based");
      expect(']', "to close the mode index");
      return ExprNode::make_primitive(name, mode);
    }
    fail("unknown primitive or function '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

inline std::string format_number(double v) {
  char buf[40];
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  }
  return buf;
}

inline std::string print_scalar(Complex v) {
  if (v.imag() == 0.0) return format_number(v.real());
  if (v.real() == 0.0) {
    if (v.imag() == 1.0) return "i";
    if (v.imag() == -1.0) return "-i";
    return format_number(v.imag()) + "*i";
  }
  // Mixed complex scalars cannot come out of the parser; emit a
  // reparseable sum (structurally a Sum after a round trip).
  const std::string im = (v.imag() == 1.0) ? "i" : format_number(std::abs(v.imag())) + "*i";
  return "(" + format_number(v.real()) + (v.imag() > 0.0 ? " + " : " - ") + im + ")";
}

inline std::string print_node(const ExprNode& n);

inline std::string print_child_of_product(const ExprNode& n) {
  if (n.kind == ExprNode::Kind::Sum || n.kind == ExprNode::Kind::Product)
    return "(" + print_node(n) + ")";
  return print_node(n);
}

inline std::string print_node(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Scalar:
      return print_scalar(n.scalar);
    case ExprNode::Kind::Primitive:
      return n.prim_name + "[" + std::to_string(n.prim_mode) + "]";
    case ExprNode::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const ExprNode& c = *n.children[i];
        if (i == 0) {
          out += (c.kind == ExprNode::Kind::Sum) ? "(" + print_node(c) + ")" : print_node(c);
          continue;
        }
        if (is_negated(c)) {
          out += " - " + print_node(*negate(n.children[i]));
        } else {
          out += " + " +
                 ((c.kind == ExprNode::Kind::Sum) ? "(" + print_node(c) + ")" : print_node(c));
        }
      }
      return out;
    }
    case ExprNode::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += "*";
        out += print_child_of_product(*n.children[i]);
      }
      return out;
    }
    case ExprNode::Kind::Dag:
      return "dag(" + print_node(*n.children[0]) + ")";
    case ExprNode::Kind::Pt: {
      std::string out = "pt(" + print_node(*n.children[0]) + "; ";
      for (std::size_t i = 0; i < n.pt_modes.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(n.pt_modes[i]);
      }
      return out + ")";
    }
    case ExprNode::Kind::Comm:
      return "comm(" + print_node(*n.children[0]) + ", " + print_node(*n.children[1]) + ")";
    case ExprNode::Kind::AComm:
      return "acomm(" + print_node(*n.children[0]) + ", " + print_node(*n.children[1]) + ")";
  }
  return {};
}

inline Matrix lower_primitive(const std::string& name, int mode_1based,
                              const CompositeSpace& space) {
  const int idx = mode_1based - 1;
  if (idx < 0 || idx >= space.mode_count())
    throw std::invalid_argument("primitive '" + name + "': mode index " +
                                std::to_string(mode_1based) + " out of range");
  const ModeSpec& mode = space.mode(idx);
  const ModeKind need = (name[0] == 'j')   ? ModeKind::Spin
                        : (name[0] == 'k') ? ModeKind::SU11
                                           : ModeKind::Boson;
  if (mode.kind != need)
    throw std::invalid_argument("primitive '" + name + "' needs a " +
                                std::string(to_string(need)) + " mode, but mode " +
                                std::to_string(mode_1based) + " is " + to_string(mode.kind));
  Matrix m;
  if (name == "a" || name == "jm" || name == "km")
    m = mode_lower(mode);
  else if (name == "ad" || name == "jp" || name == "kp")
    m = mode_raise(mode);
  else if (name == "n")
    m = mode_number(mode);
  else if (name == "jz" || name == "kz")
    m = mode_weight(mode);
  else if (name == "x")
    m = quadratures(mode).first;
  else if (name == "p")
    m = quadratures(mode).second;
  else
    throw std::invalid_argument("unknown primitive '" + name + "'");
  return embed(m, idx, space).mat;
}

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).run(); }

inline std::string print(const ExprNode& expr) { return detail::print_node(expr); }
inline std::string print(const ExprPtr& expr) { return detail::print_node(*expr); }

/// Lower an expression to a matrix on the given space. Scalars lift to
/// scaled identities, Product multiplies in written order, and pt() applies
/// the matrix-level partial transpose to its lowered child.
inline Operator lower(const ExprNode& expr, const CompositeSpace& space) {
  using Kind = ExprNode::Kind;
  switch (expr.kind) {
    case Kind::Scalar:
      return {space, expr.scalar * Matrix::Identity(space.dim(), space.dim())};
    case Kind::Primitive:
      return {space, detail::lower_primitive(expr.prim_name, expr.prim_mode, space)};
    case Kind::Sum: {
      Matrix acc = Matrix::Zero(space.dim(), space.dim());
      for (const auto& c : expr.children) acc += lower(*c, space).mat;
      return {space, std::move(acc)};
    }
    case Kind::Product: {
      Complex coeff(1.0, 0.0);
      Matrix acc;
      bool have_matrix = false;
      for (const auto& c : expr.children) {
        if (c->kind == Kind::Scalar) {
          coeff *= c->scalar;
          continue;
        }
        Matrix m = lower(*c, space).mat;
        if (!have_matrix) {
          acc = std::move(m);
          have_matrix = true;
        } else {
          acc = acc * m;
        }
      }
      if (!have_matrix) return {space, coeff * Matrix::Identity(space.dim(), space.dim())};
      if (coeff != Complex(1.0, 0.0)) acc = coeff * acc;
      return {space, std::move(acc)};
    }
    case Kind::Dag:
      return {space, lower(*expr.children[0], space).mat.adjoint()};
    case Kind::Pt: {
      std::vector<int> subset;
      for (int m : expr.pt_modes) {
        if (m < 1 || m > space.mode_count())
          throw std::invalid_argument("pt(): mode index " + std::to_string(m) +
                                      " out of range");
        subset.push_back(m - 1);
      }
      return {space, partial_transpose(space, lower(*expr.children[0], space).mat, subset)};
    }
    case Kind::Comm: {
      const Matrix a = lower(*expr.children[0], space).mat;
      const Matrix b = lower(*expr.children[1], space).mat;
      return {space, a * b - b * a};
    }
    case Kind::AComm: {
      const Matrix a = lower(*expr.children[0], space).mat;
      const Matrix b = lower(*expr.children[1], space).mat;
      return {space, a * b + b * a};
    }
  }
  throw std::logic_error("unreachable expression kind");
}

inline Operator lower(const ExprPtr& expr, const CompositeSpace& space) {
  return lower(*expr, space);
}
inline Operator lower_text(std::string_view text, const CompositeSpace& space) {
  return lower(parse(text), space);
}

}  // namespace triwit::dsl
