#include "wg/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace wg::dsl {

namespace {

using Op = Expr::Op;

ExprPtr node(Op op, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr raw_num(double v) {
  auto e = std::make_shared<Expr>();
  e->value = v;
  return e;
}

ExprPtr raw_pow(ExprPtr base, int n) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Pow;
  e->lhs = std::move(base);
  e->exponent = n;
  return e;
}

// ---- parser ----

enum class Tok { Num, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double value = 0.0;
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  CurveExpr curve() {
    CurveExpr c;
    c.x = assignment("x");
    expect(";");
    c.y = assignment("y");
    if (is_sym(";")) advance();
    if (tok_.kind != Tok::End) error("unexpected '" + tok_.text + "' after curve");
    return c;
  }

  ExprPtr whole_expr() {
    ExprPtr e = expr();
    if (tok_.kind != Tok::End) error("unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  static constexpr int kMaxDepth = 200;

  ExprPtr assignment(const char* name) {
    if (tok_.kind != Tok::Ident || tok_.text != name)
      error(std::string("expected '") + name + " ='");
    advance();
    expect("=");
    return expr();
  }

  ExprPtr expr() {
    Guard g(*this);
    ExprPtr e = term();
    while (is_sym("+") || is_sym("-")) {
      const Op op = tok_.text == "+" ? Op::Add : Op::Sub;
      advance();
      e = node(op, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = power();
    while (is_sym("*") || is_sym("/")) {
      const Op op = tok_.text == "*" ? Op::Mul : Op::Div;
      advance();
      e = node(op, e, power());
    }
    return e;
  }

  ExprPtr power() {
    ExprPtr e = unary();
    while (is_sym("^")) {
      advance();
      e = raw_pow(e, integer_exponent());
    }
    return e;
  }

  ExprPtr unary() {
    Guard g(*this);
    if (is_sym("-")) {
      advance();
      return node(Op::Neg, unary());
    }
    return primary();
  }

  ExprPtr primary() {
    if (tok_.kind == Tok::Num) {
      ExprPtr e = raw_num(tok_.value);
      advance();
      return e;
    }
    if (is_sym("(")) {
      advance();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (tok_.kind == Tok::Ident) {
      const std::string name = tok_.text;
      const std::size_t at = tok_.offset;
      advance();
      if (name == "t") return node(Op::Var);
      if (name == "pi") return node(Op::Pi);
      if (name == "sin" || name == "cos") {
        expect("(");
        ExprPtr arg = expr();
        expect(")");
        return node(name == "sin" ? Op::Sin : Op::Cos, arg);
      }
      if (name == "pow") {
        expect("(");
        ExprPtr base = expr();
        expect(",");
        const int n = integer_exponent();
        expect(")");
        return raw_pow(base, n);
      }
      error_at(at, ErrorKind::UnknownIdentifier, "unknown identifier '" + name + "'");
    }
    if (tok_.kind == Tok::End) error("unexpected end of input");
    error("unexpected '" + tok_.text + "'");
  }

  int integer_exponent() {
    bool negative = false;
    if (is_sym("-")) {
      negative = true;
      advance();
    }
    if (tok_.kind != Tok::Num || tok_.value != std::floor(tok_.value) || tok_.value > 1e6)
      error("exponent must be an integer literal");
    const int n = static_cast<int>(tok_.value);
    advance();
    return negative ? -n : n;
  }

  bool is_sym(const char* s) const { return tok_.kind == Tok::Sym && tok_.text == s; }

  void expect(const char* s) {
    if (!is_sym(s)) error(std::string("expected '") + s + "'");
    advance();
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
        ++end;
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
        std::size_t e = end + 1;
        if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
        if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
          while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
          end = e;
        }
      }
      const std::string text(src_.substr(pos_, end - pos_));
      char* stop = nullptr;
      const double v = std::strtod(text.c_str(), &stop);
      if (stop != text.c_str() + text.size() || !std::isfinite(v))
        error_at(pos_, ErrorKind::Syntax, "malformed number '" + text + "'");
      tok_ = {Tok::Num, text, v, pos_};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      tok_ = {Tok::Ident, std::string(src_.substr(pos_, end - pos_)), 0.0, pos_};
      pos_ = end;
      return;
    }
    static constexpr std::string_view kSymbols = "+-*/^(),;=";
    if (kSymbols.find(c) != std::string_view::npos) {
      tok_ = {Tok::Sym, std::string(1, c), 0.0, pos_};
      ++pos_;
      return;
    }
    error_at(pos_, ErrorKind::Syntax, "unexpected character");
  }

  [[noreturn]] void error(const std::string& msg) { error_at(tok_.offset, ErrorKind::Syntax, msg); }

  [[noreturn]] void error_at(std::size_t offset, ErrorKind kind, const std::string& msg) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw CurveError(kind, std::to_string(line) + ":" + std::to_string(col) + ": " + msg, offset);
  }

  struct Guard {
    explicit Guard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) p_.error("expression nested too deeply");
    }
    ~Guard() { --p_.depth_; }
    Parser& p_;
  };

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
  int depth_ = 0;
};

// ---- printing ----

int precedence(const ExprPtr& e) {
  switch (e->op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Pow: return 3;
    case Op::Neg: return 4;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[64];
  if (v == std::floor(v) && std::abs(v) < 1e15)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else
    std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string wrap(const ExprPtr& e, bool parens) {
  return parens ? "(" + print(e) + ")" : print(e);
}

// ---- simplifying constructors ----

bool is_num(const ExprPtr& e, double v) { return e->op == Op::Num && e->value == v; }

ExprPtr num(double v) { return v < 0 ? node(Op::Neg, raw_num(-v)) : raw_num(v); }

std::optional<double> constant(const ExprPtr& e) {
  if (e->op == Op::Num) return e->value;
  if (e->op == Op::Neg && e->lhs->op == Op::Num) return -e->lhs->value;
  return std::nullopt;
}

ExprPtr neg(const ExprPtr& a) {
  if (auto c = constant(a)) return num(-*c);
  if (a->op == Op::Neg) return a->lhs;
  return node(Op::Neg, a);
}

ExprPtr add(const ExprPtr& a, const ExprPtr& b) {
  if (is_num(a, 0)) return b;
  if (is_num(b, 0)) return a;
  if (auto ca = constant(a), cb = constant(b); ca && cb) return num(*ca + *cb);
  return node(Op::Add, a, b);
}

ExprPtr sub(const ExprPtr& a, const ExprPtr& b) {
  if (is_num(b, 0)) return a;
  if (is_num(a, 0)) return neg(b);
  if (auto ca = constant(a), cb = constant(b); ca && cb) return num(*ca - *cb);
  return node(Op::Sub, a, b);
}

ExprPtr mul(const ExprPtr& a, const ExprPtr& b) {
  if (is_num(a, 0) || is_num(b, 0)) return num(0);
  if (is_num(a, 1)) return b;
  if (is_num(b, 1)) return a;
  const auto ca = constant(a), cb = constant(b);
  if (ca && cb) return num(*ca * *cb);
  if (cb) return mul(b, a);
  if (ca && b->op == Op::Mul) {
    if (auto inner = constant(b->lhs)) return mul(num(*ca * *inner), b->rhs);
  }
  if (ca && *ca < 0) return neg(mul(num(-*ca), b));
  return node(Op::Mul, a, b);
}

ExprPtr div(const ExprPtr& a, const ExprPtr& b) {
  if (is_num(b, 1)) return a;
  if (is_num(a, 0)) return num(0);
  if (auto ca = constant(a), cb = constant(b); ca && cb && *cb != 0) return num(*ca / *cb);
  return node(Op::Div, a, b);
}

ExprPtr pow_of(const ExprPtr& a, int n) {
  if (n == 0) return num(1);
  if (n == 1) return a;
  if (auto c = constant(a)) return num(std::pow(*c, n));
  return raw_pow(a, n);
}

}  // namespace

CurveExpr parse_curve(std::string_view src) { return Parser(src).curve(); }
ExprPtr parse_expr(std::string_view src) { return Parser(src).whole_expr(); }

std::string print(const ExprPtr& e) {
  switch (e->op) {
    case Op::Num: return format_number(e->value);
    case Op::Var: return "t";
    case Op::Pi: return "pi";
    case Op::Sin: return "sin(" + print(e->lhs) + ")";
    case Op::Cos: return "cos(" + print(e->lhs) + ")";
    case Op::Add:
    case Op::Sub:
      return wrap(e->lhs, precedence(e->lhs) < 1) + (e->op == Op::Add ? " + " : " - ") +
             wrap(e->rhs, precedence(e->rhs) <= 1);
    case Op::Mul:
    case Op::Div:
      return wrap(e->lhs, precedence(e->lhs) < 2) + (e->op == Op::Mul ? "*" : "/") +
             wrap(e->rhs, precedence(e->rhs) <= 2);
    case Op::Pow:
      return wrap(e->lhs, precedence(e->lhs) < 3) + "^" + std::to_string(e->exponent);
    case Op::Neg: return "-" + wrap(e->lhs, precedence(e->lhs) < 4);
  }
  return {};
}

std::string print(const CurveExpr& c) { return "x = " + print(c.x) + "; y = " + print(c.y); }

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->op != b->op) return false;
  switch (a->op) {
    case Op::Num: return a->value == b->value;
    case Op::Pow: return a->exponent == b->exponent && equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

double evaluate(const ExprPtr& e, double t) {
  switch (e->op) {
    case Op::Num: return e->value;
    case Op::Var: return t;
    case Op::Pi: return kPi;
    case Op::Add: return evaluate(e->lhs, t) + evaluate(e->rhs, t);
    case Op::Sub: return evaluate(e->lhs, t) - evaluate(e->rhs, t);
    case Op::Mul: return evaluate(e->lhs, t) * evaluate(e->rhs, t);
    case Op::Div: return evaluate(e->lhs, t) / evaluate(e->rhs, t);
    case Op::Neg: return -evaluate(e->lhs, t);
    case Op::Sin: return std::sin(evaluate(e->lhs, t));
    case Op::Cos: return std::cos(evaluate(e->lhs, t));
    case Op::Pow: return std::pow(evaluate(e->lhs, t), e->exponent);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ExprPtr differentiate(const ExprPtr& e) {
  switch (e->op) {
    case Op::Num:
    case Op::Pi: return num(0);
    case Op::Var: return num(1);
    case Op::Add: return add(differentiate(e->lhs), differentiate(e->rhs));
    case Op::Sub: return sub(differentiate(e->lhs), differentiate(e->rhs));
    case Op::Mul:
      return add(mul(differentiate(e->lhs), e->rhs), mul(e->lhs, differentiate(e->rhs)));
    case Op::Div:
      return div(sub(mul(differentiate(e->lhs), e->rhs), mul(e->lhs, differentiate(e->rhs))),
                 pow_of(e->rhs, 2));
    case Op::Neg: return neg(differentiate(e->lhs));
    case Op::Sin: return mul(node(Op::Cos, e->lhs), differentiate(e->lhs));
    case Op::Cos: return neg(mul(node(Op::Sin, e->lhs), differentiate(e->lhs)));
    case Op::Pow:
      return mul(mul(num(e->exponent), pow_of(e->lhs, e->exponent - 1)), differentiate(e->lhs));
  }
  return num(0);
}

CurveExpr differentiate(const CurveExpr& c) { return {differentiate(c.x), differentiate(c.y)}; }

SampledCurve sample_expr(const CurveExpr& c, std::size_t n) {
  if (n < SampledCurve::kMinSamples)
    throw CurveError(ErrorKind::InvalidArgument,
                     "sample count " + std::to_string(n) + " is below 16");
  const CurveExpr d = differentiate(c);
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<Point2> pts(n), vel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = h * static_cast<double>(i);
    pts[i] = {evaluate(c.x, t), evaluate(c.y, t)};
    vel[i] = {evaluate(d.x, t), evaluate(d.y, t)};
    if (!is_finite(pts[i]) || !is_finite(vel[i]))
      throw CurveError(ErrorKind::InvalidArgument,
                       "expression is not finite at t = " + std::to_string(t), i);
  }
  const Point2 end{evaluate(c.x, kTwoPi), evaluate(c.y, kTwoPi)};
  const double scale = diameter(pts);
  const double gap = norm(end - pts[0]);
  if (!(gap < kClosureTol * scale))
    throw CurveError(ErrorKind::NotClosed,
                     "curve does not close: |alpha(2pi) - alpha(0)| = " + std::to_string(gap));
  auto curve = SampledCurve::unchecked(std::move(pts), std::move(vel));
  if (auto err = check_curve(curve)) {
    std::string msg = err->what();
    if (err->index()) msg += " (t = " + std::to_string(h * static_cast<double>(*err->index())) + ")";
    throw CurveError(err->kind(), msg, err->index());
  }
  return curve;
}

}  // namespace wg::dsl
