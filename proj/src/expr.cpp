#include "zspace/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "zspace/errors.hpp"

namespace zspace {

namespace {

constexpr int kMaxCoordIndex = 1 << 20;

struct FuncName {
  std::string_view name;
  Op op;
};

constexpr std::array<FuncName, 7> kFunctions{{
    {"abs", Op::Abs},
    {"log", Op::Log},
    {"exp", Op::Exp},
    {"sin", Op::Sin},
    {"cos", Op::Cos},
    {"sqrt", Op::Sqrt},
    {"step", Op::Step},
}};

std::string_view func_name(Op op) {
  for (const auto& f : kFunctions) {
    if (f.op == op) return f.name;
  }
  return "?";
}

int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    default:
      return 3;
  }
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v));
  std::string digits(buf.data(), end);
  if (std::signbit(v)) return "(-" + digits + ")";
  return digits;
}

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Number:
      out += format_number(e.value());
      return;
    case Op::Coord:
      out += 'x';
      out += std::to_string(e.index());
      return;
    case Op::Neg:
      out += '-';
      if (precedence(e.lhs()) < 3) {
        out += '(';
        print(e.lhs(), out);
        out += ')';
      } else {
        print(e.lhs(), out);
      }
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const int p = precedence(e);
      const bool wrap_left = precedence(e.lhs()) < p;
      const bool wrap_right = precedence(e.rhs()) <= p;
      if (wrap_left) out += '(';
      print(e.lhs(), out);
      if (wrap_left) out += ')';
      switch (e.op()) {
        case Op::Add: out += " + "; break;
        case Op::Sub: out += " - "; break;
        case Op::Mul: out += "*"; break;
        default: out += "/"; break;
      }
      if (wrap_right) out += '(';
      print(e.rhs(), out);
      if (wrap_right) out += ')';
      return;
    }
    default:
      out += func_name(e.op());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) +
                            "', expected one of: + - * / end-of-input",
                        pos_);
    }
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Op::Mul, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::binary(Op::Div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw SyntaxError("unexpected end of input, expected one of: NUMBER COORD FUNC ( -", pos_);
    }
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return Expr::unary(Op::Neg, factor());
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError("unexpected '" + std::string(1, c) +
                          "', expected one of: NUMBER COORD FUNC ( -",
                      pos_);
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw SyntaxError("malformed exponent", pos_);
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      throw SyntaxError("number out of range", start);
    }
    return Expr::number(value);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);

    if (word.size() > 1 && word[0] == 'x' &&
        word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      long index = 0;
      auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), index);
      if (ec != std::errc{} || index < 1 || index > kMaxCoordIndex) {
        throw BadCoordinateIndex("bad coordinate index '" + std::string(word) + "'", start);
      }
      return Expr::coord(static_cast<int>(index));
    }
    for (const auto& f : kFunctions) {
      if (f.name == word) {
        expect('(');
        Expr arg = expr();
        expect(')');
        return Expr::unary(f.op, arg);
      }
    }
    throw UnknownFunction("unknown function '" + std::string(word) + "'", start);
  }
};

double apply_unary(Op op, double a) {
  switch (op) {
    case Op::Neg: return -a;
    case Op::Abs: return std::fabs(a);
    case Op::Log: return std::log(a);
    case Op::Exp: return std::exp(a);
    case Op::Sin: return std::sin(a);
    case Op::Cos: return std::cos(a);
    case Op::Sqrt: return std::sqrt(a);
    case Op::Step:
      if (std::isnan(a)) return a;
      return a >= 0.0 ? 1.0 : 0.0;
    default: return a;
  }
}

}  // namespace

bool is_unary(Op op) noexcept {
  return op >= Op::Neg && op <= Op::Step;
}

bool is_binary(Op op) noexcept {
  return op >= Op::Add;
}

Expr Expr::number(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite literal in expression");
  return Expr(std::make_shared<const Node>(Node{Op::Number, value, 0, 0, {}}));
}

Expr Expr::coord(int index) {
  if (index < 1) throw DomainError("coordinate index must be >= 1");
  return Expr(std::make_shared<const Node>(Node{Op::Coord, 0.0, index, index, {}}));
}

Expr Expr::unary(Op op, Expr operand) {
  if (!is_unary(op)) throw DomainError("not a unary operator");
  const int mi = operand.max_index();
  return Expr(std::make_shared<const Node>(Node{op, 0.0, 0, mi, {std::move(operand)}}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw DomainError("not a binary operator");
  const int mi = std::max(lhs.max_index(), rhs.max_index());
  return Expr(
      std::make_shared<const Node>(Node{op, 0.0, 0, mi, {std::move(lhs), std::move(rhs)}}));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
int Expr::index() const noexcept { return node_->index; }
int Expr::max_index() const noexcept { return node_->max_index; }

const Expr& Expr::lhs() const {
  if (node_->children.empty()) throw DomainError("leaf expression has no operand");
  return node_->children[0];
}

const Expr& Expr::rhs() const {
  if (node_->children.size() < 2) throw DomainError("expression has no right operand");
  return node_->children[1];
}

Expr Expr::map_coords(const std::function<Expr(int)>& fn) const {
  switch (op()) {
    case Op::Number: return *this;
    case Op::Coord: return fn(index());
    default: break;
  }
  if (is_unary(op())) return unary(op(), lhs().map_coords(fn));
  return binary(op(), lhs().map_coords(fn), rhs().map_coords(fn));
}

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Number:
      // Bitwise, so that -0 and 0 differ.
      return std::signbit(a.value()) == std::signbit(b.value()) && a.value() == b.value();
    case Op::Coord: return a.index() == b.index();
    default: break;
  }
  if (!(a.lhs() == b.lhs())) return false;
  return is_unary(a.op()) || a.rhs() == b.rhs();
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Op::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Op::Neg, a); }

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

Program::Program(const Expr& expr) { emit(expr, 0); }

void Program::emit(const Expr& e, std::size_t height) {
  switch (e.op()) {
    case Op::Number:
    case Op::Coord:
      code_.push_back({e.op(), e.index(), e.value()});
      depth_ = std::max(depth_, height + 1);
      return;
    default: break;
  }
  emit(e.lhs(), height);
  if (is_binary(e.op())) emit(e.rhs(), height + 1);
  code_.push_back({e.op(), 0, 0.0});
}

double Program::operator()(std::span<const double> x) const {
  constexpr std::size_t kInline = 64;
  std::array<double, kInline> small{};
  std::vector<double> large;
  double* stack = small.data();
  if (depth_ > kInline) {
    large.resize(depth_);
    stack = large.data();
  }
  std::size_t top = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::Number:
        stack[top++] = in.value;
        break;
      case Op::Coord: {
        const auto i = static_cast<std::size_t>(in.index - 1);
        stack[top++] = i < x.size() ? x[i] : 0.0;
        break;
      }
      case Op::Add:
        --top;
        stack[top - 1] += stack[top];
        break;
      case Op::Sub:
        --top;
        stack[top - 1] -= stack[top];
        break;
      case Op::Mul:
        --top;
        stack[top - 1] *= stack[top];
        break;
      case Op::Div:
        --top;
        stack[top - 1] /= stack[top];
        break;
      default:
        stack[top - 1] = apply_unary(in.op, stack[top - 1]);
        break;
    }
  }
  return stack[0];
}

}  // namespace zspace
