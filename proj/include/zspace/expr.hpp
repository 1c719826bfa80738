#pragma once

// Expression language for tame-function bodies.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := NUMBER | COORD | FUNC '(' expr ')' | '(' expr ')' | '-' factor
//   COORD  := 'x' digits          (1-based; x0 is rejected)
//   FUNC   := abs | log | exp | sin | cos | sqrt | step
//
// step(u) is 1 for u >= 0 and 0 otherwise.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zspace {

enum class Op : std::uint8_t {
  Number,
  Coord,
  Neg,
  Abs,
  Log,
  Exp,
  Sin,
  Cos,
  Sqrt,
  Step,
  Add,
  Sub,
  Mul,
  Div,
};

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;

/// Immutable expression tree with value semantics (nodes are shared).
class Expr {
 public:
  struct Node;

  static Expr number(double value);
  static Expr coord(int index);
  static Expr unary(Op op, Expr operand);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  Op op() const noexcept;
  double value() const noexcept;  // Number only
  int index() const noexcept;     // Coord only
  const Expr& lhs() const;        // operand of a unary node
  const Expr& rhs() const;

  /// Largest coordinate index referenced, 0 for closed expressions.
  int max_index() const noexcept;

  /// Rebuilds the tree, replacing each coordinate leaf by `fn(index)`.
  Expr map_coords(const std::function<Expr(int)>& fn) const;

  /// Canonical text; parse(to_string()) reproduces a parsed tree exactly.
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  double value = 0.0;
  int index = 0;
  int max_index = 0;
  std::vector<Expr> children;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr parse_expression(std::string_view text);

/// Postfix form of an Expr for fast repeated evaluation.
class Program {
 public:
  explicit Program(const Expr& expr);

  /// `x[i]` holds coordinate i+1; missing coordinates read as 0.
  double operator()(std::span<const double> x) const;

 private:
  struct Instr {
    Op op;
    int index;
    double value;
  };
  std::vector<Instr> code_;
  std::size_t depth_ = 0;

  void emit(const Expr& e, std::size_t height);
};

}  // namespace zspace
