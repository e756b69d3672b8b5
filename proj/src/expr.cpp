#include "dwedge/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <utility>

namespace dwedge {

namespace {

struct Literal : Expr {
  double value;
  explicit Literal(double v) : value(v) {}
  double eval(const Vector&, double) const override { return value; }
};

struct Coordinate : Expr {
  int index;  // 0-based
  explicit Coordinate(int i) : index(i) {}
  double eval(const Vector& x, double) const override { return x[index]; }
};

struct Time : Expr {
  double eval(const Vector&, double t) const override { return t; }
};

double fn_sin(double v) { return std::sin(v); }
double fn_cos(double v) { return std::cos(v); }
double fn_exp(double v) { return std::exp(v); }

struct Unary : Expr {
  double (*fn)(double);
  ExprPtr arg;
  Unary(double (*f)(double), ExprPtr a) : fn(f), arg(std::move(a)) {}
  double eval(const Vector& x, double t) const override {
    return fn(arg->eval(x, t));
  }
};

struct Binary : Expr {
  char op;
  ExprPtr lhs, rhs;
  Binary(char o, ExprPtr l, ExprPtr r)
      : op(o), lhs(std::move(l)), rhs(std::move(r)) {}
  double eval(const Vector& x, double t) const override {
    double a = lhs->eval(x, t);
    double b = rhs->eval(x, t);
    switch (op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      case '/': return a / b;
      default: return std::pow(a, b);
    }
  }
};

class Parser {
 public:
  Parser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (accept('+')) e = std::make_shared<Binary>('+', e, product());
      else if (accept('-')) e = std::make_shared<Binary>('-', e, product());
      else return e;
    }
  }

  ExprPtr product() {
    ExprPtr e = unary();
    for (;;) {
      if (accept('*')) e = std::make_shared<Binary>('*', e, unary());
      else if (accept('/')) e = std::make_shared<Binary>('/', e, unary());
      else return e;
    }
  }

  ExprPtr unary() {
    if (accept('-')) {
      return std::make_shared<Binary>('-', std::make_shared<Literal>(0.0),
                                      unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (accept('^')) return std::make_shared<Binary>('^', base, unary());
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return std::make_shared<Literal>(v);
  }

  ExprPtr name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string id = text_.substr(start, pos_ - start);
    if (id == "t") return std::make_shared<Time>();
    if (id == "sin") return std::make_shared<Unary>(fn_sin, call_arg());
    if (id == "cos") return std::make_shared<Unary>(fn_cos, call_arg());
    if (id == "exp") return std::make_shared<Unary>(fn_exp, call_arg());
    if (id.size() >= 2 && id[0] == 'x') {
      char* end = nullptr;
      long k = std::strtol(id.c_str() + 1, &end, 10);
      if (*end == '\0' && k >= 1 && k <= dim_)
        return std::make_shared<Coordinate>(static_cast<int>(k - 1));
      if (*end == '\0') {
        pos_ = start;
        fail("coordinate " + id + " out of range for dimension " +
             std::to_string(dim_));
      }
    }
    pos_ = start;
    fail("unknown token '" + id + "'");
  }

  ExprPtr call_arg() {
    if (!accept('(')) fail("expected '(' after function name");
    ExprPtr e = sum();
    if (!accept(')')) fail("expected ')'");
    return e;
  }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text, int dim) {
  return Parser(text, dim).parse();
}

}  // namespace dwedge
