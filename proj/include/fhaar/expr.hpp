#pragma once

// Arithmetic expressions in x, y, z for user-supplied right-hand sides.
//
// Grammar (whitespace-insensitive):
//
//   expr    := term { ('+' | '-') term }
//   term    := unary { ('*' | '/') unary }
//   unary   := ('-' | '+') unary | power
//   power   := primary [ '^' unary ]          right-associative
//   primary := number | 'x' | 'y' | 'z' | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sin | cos | sqrt | abs
//
// '^' binds tighter than unary minus, so -2^2 == -4 and 2^3^2 == 512.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "fhaar/error.hpp"

namespace fhaar {

enum class Function { Exp, Log, Sin, Cos, Sqrt, Abs };

inline std::string_view function_name(Function f) {
  switch (f) {
    case Function::Exp: return "exp";
    case Function::Log: return "log";
    case Function::Sin: return "sin";
    case Function::Cos: return "cos";
    case Function::Sqrt: return "sqrt";
    case Function::Abs: return "abs";
  }
  return "?";
}

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

namespace ast {
struct Constant { double value; };
struct Variable { char name; };
struct Negate { ExprNodePtr operand; };
struct Binary { char op; ExprNodePtr lhs; ExprNodePtr rhs; };
struct Call { Function fn; ExprNodePtr arg; };
}  // namespace ast

struct ExprNode {
  std::variant<ast::Constant, ast::Variable, ast::Negate, ast::Binary, ast::Call> value;
};

namespace detail {

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Fully parenthesized so the printed form re-parses to the same tree.
inline std::string print_node(const ExprNode& n) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ast::Constant>) {
          return format_number(v.value);
        } else if constexpr (std::is_same_v<T, ast::Variable>) {
          return std::string(1, v.name);
        } else if constexpr (std::is_same_v<T, ast::Negate>) {
          return "(-" + print_node(*v.operand) + ")";
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          return "(" + print_node(*v.lhs) + " " + v.op + " " + print_node(*v.rhs) + ")";
        } else {
          return std::string(function_name(v.fn)) + "(" + print_node(*v.arg) + ")";
        }
      },
      n.value);
}

inline bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&b](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, ast::Constant>) {
          return va.value == vb.value;
        } else if constexpr (std::is_same_v<T, ast::Variable>) {
          return va.name == vb.name;
        } else if constexpr (std::is_same_v<T, ast::Negate>) {
          return same_tree(*va.operand, *vb.operand);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          return va.op == vb.op && same_tree(*va.lhs, *vb.lhs) && same_tree(*va.rhs, *vb.rhs);
        } else {
          return va.fn == vb.fn && same_tree(*va.arg, *vb.arg);
        }
      },
      a.value);
}

inline double checked(double v, const ExprNode& n, const char* what) {
  if (!std::isfinite(v)) throw EvalError(std::string(what) + " in " + print_node(n));
  return v;
}

inline double eval_node(const ExprNode& n, double x, double y, double z) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ast::Constant>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, ast::Variable>) {
          return v.name == 'x' ? x : (v.name == 'y' ? y : z);
        } else if constexpr (std::is_same_v<T, ast::Negate>) {
          return -eval_node(*v.operand, x, y, z);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          const double a = eval_node(*v.lhs, x, y, z);
          const double b = eval_node(*v.rhs, x, y, z);
          switch (v.op) {
            case '+': return checked(a + b, n, "overflow");
            case '-': return checked(a - b, n, "overflow");
            case '*': return checked(a * b, n, "overflow");
            case '/':
              if (b == 0.0) throw EvalError("division by zero in " + print_node(n));
              return checked(a / b, n, "overflow");
            default: return checked(std::pow(a, b), n, "invalid power");
          }
        } else {
          const double a = eval_node(*v.arg, x, y, z);
          switch (v.fn) {
            case Function::Exp: return checked(std::exp(a), n, "overflow");
            case Function::Log:
              if (!(a > 0.0)) throw EvalError("log of non-positive value in " + print_node(n));
              return std::log(a);
            case Function::Sin: return checked(std::sin(a), n, "invalid argument");
            case Function::Cos: return checked(std::cos(a), n, "invalid argument");
            case Function::Sqrt:
              if (a < 0.0) throw EvalError("sqrt of negative value in " + print_node(n));
              return std::sqrt(a);
            case Function::Abs: return std::abs(a);
          }
          return 0.0;
        }
      },
      n.value);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprNodePtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  static ExprNodePtr make(auto v) { return std::make_shared<const ExprNode>(ExprNode{std::move(v)}); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < src_.size() ? "expected '" + std::string(1, c) + "'"
                              : "expected '" + std::string(1, c) + "' before end of input");
    }
  }

  ExprNodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(ast::Binary{'+', lhs, term()});
      else if (accept('-')) lhs = make(ast::Binary{'-', lhs, term()});
      else return lhs;
    }
  }

  ExprNodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(ast::Binary{'*', lhs, unary()});
      else if (accept('/')) lhs = make(ast::Binary{'/', lhs, unary()});
      else return lhs;
    }
  }

  ExprNodePtr unary() {
    if (accept('-')) return make(ast::Negate{unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprNodePtr power() {
    auto base = primary();
    if (accept('^')) return make(ast::Binary{'^', base, unary()});
    return base;
  }

  ExprNodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprNodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") {
      pos_ = start;
      fail("malformed number");
    }
    const double v = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(v)) {
      pos_ = start;
      fail("number out of range");
    }
    return make(ast::Constant{v});
  }

  ExprNodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x" || name == "y" || name == "z") return make(ast::Variable{name[0]});

    static constexpr Function kFunctions[] = {Function::Exp, Function::Log, Function::Sin,
                                              Function::Cos, Function::Sqrt, Function::Abs};
    for (Function f : kFunctions) {
      if (name != function_name(f)) continue;
      if (!accept('(')) fail("function '" + std::string(name) + "' must be called with parentheses");
      auto arg = expr();
      if (accept(',')) fail("function '" + std::string(name) + "' takes exactly one argument");
      expect(')');
      return make(ast::Call{f, arg});
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Immutable parsed expression; cheap to copy and safe to share across threads.
class Expr {
 public:
  static Expr parse(std::string_view src) {
    Expr e;
    e.root_ = detail::Parser(src).parse();
    e.source_ = std::string(src);
    return e;
  }

  /// Throws EvalError on division by zero, log/sqrt domain faults, or any
  /// non-finite intermediate result.
  double eval(double x, double y, double z) const { return detail::eval_node(*root_, x, y, z); }

  std::string to_string() const { return detail::print_node(*root_); }
  const std::string& source() const noexcept { return source_; }
  const ExprNode& root() const noexcept { return *root_; }

  friend bool operator==(const Expr& a, const Expr& b) { return detail::same_tree(*a.root_, *b.root_); }

 private:
  Expr() = default;
  ExprNodePtr root_;
  std::string source_;
};

inline Expr parse(std::string_view src) { return Expr::parse(src); }
inline double eval(const Expr& e, double x, double y, double z) { return e.eval(x, y, z); }

}  // namespace fhaar
