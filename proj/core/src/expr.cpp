#include "lieforge/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "lieforge/errors.hpp"

namespace lieforge {

struct Expr::Node {
  Kind kind;
  std::vector<Expr> children;
  Rational payload;
  std::size_t var = 0;
  std::size_t arity = 0;
};

Expr Expr::make(Kind kind, std::vector<Expr> children, Rational payload, std::size_t var) {
  std::size_t arity = kind == Kind::Var ? var + 1 : 0;
  for (const auto& c : children) arity = std::max(arity, c.arity());
  return Expr(std::make_shared<const Node>(Node{kind, std::move(children), std::move(payload), var, arity}));
}

Expr Expr::variable(std::size_t index) { return make(Kind::Var, {}, Rational(0), index); }
Expr Expr::constant(Rational value) { return make(Kind::Const, {}, std::move(value)); }

Expr::Kind Expr::kind() const { return node_->kind; }

std::size_t Expr::var_index() const {
  if (node_->kind != Kind::Var) throw InvalidArgument("var_index on a non-variable node");
  return node_->var;
}

const Rational& Expr::value() const {
  if (node_->kind != Kind::Const) throw InvalidArgument("value on a non-constant node");
  return node_->payload;
}

const Rational& Expr::exponent() const {
  if (node_->kind != Kind::Pow) throw InvalidArgument("exponent on a non-power node");
  return node_->payload;
}

const Expr& Expr::lhs() const {
  if (node_->children.empty()) throw InvalidArgument("leaf node has no operands");
  return node_->children[0];
}

const Expr& Expr::rhs() const {
  if (node_->children.size() < 2) throw InvalidArgument("node has no right operand");
  return node_->children[1];
}

std::size_t Expr::arity() const { return node_->arity; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Add, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Sub, {a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Mul, {a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Kind::Div, {a, b}); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Kind::Neg, {a}); }
Expr pow(const Expr& base, const Rational& exponent) { return Expr::make(Expr::Kind::Pow, {base}, exponent); }
Expr exp(const Expr& a) { return Expr::make(Expr::Kind::Exp, {a}); }
Expr arctan(const Expr& a) { return Expr::make(Expr::Kind::Arctan, {a}); }

// ---------------------------------------------------------------- printing

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Expr& e, std::string& out);

void print_at_least(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      out += 'x';
      out += std::to_string(e.var_index() + 1);
      return;
    case Expr::Kind::Const:
      if (e.value().is_integer() && e.value().sign() >= 0) {
        out += e.value().to_string();
      } else {
        out += '(' + e.value().to_string() + ')';
      }
      return;
    case Expr::Kind::Neg:
      out += '-';
      print_at_least(e.lhs(), 3, out);
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_at_least(e.lhs(), 1, out);
      out += e.kind() == Expr::Kind::Add ? '+' : '-';
      print_at_least(e.rhs(), 2, out);
      return;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_at_least(e.lhs(), 2, out);
      out += e.kind() == Expr::Kind::Mul ? '*' : '/';
      print_at_least(e.rhs(), 3, out);
      return;
    case Expr::Kind::Pow:
      print_at_least(e.lhs(), 5, out);
      out += '^';
      if (e.exponent().is_integer() && e.exponent().sign() >= 0) {
        out += e.exponent().to_string();
      } else {
        out += '(' + e.exponent().to_string() + ')';
      }
      return;
    case Expr::Kind::Exp:
    case Expr::Kind::Arctan:
      out += e.kind() == Expr::Kind::Exp ? "exp(" : "arctg(";
      print(e.lhs(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Expr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + peek() + "'", pos_);
    }
    ++pos_;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return e;
      ++pos_;
      Expr rhs = term();
      e = c == '+' ? e + rhs : e - rhs;
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return e;
      ++pos_;
      Expr rhs = factor();
      e = c == '*' ? e * rhs : e / rhs;
    }
  }

  Expr factor() {
    Expr b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    return pow(b, exponent_chain());
  }

  Rational exponent_chain() {
    const std::size_t start = pos_;
    Rational r = exponent();
    skip_ws();
    if (peek() != '^') return r;
    ++pos_;
    const Rational outer = exponent_chain();
    if (!outer.is_integer()) {
      throw ParseError("a fractional power of an exponent is not rational", start);
    }
    if (r.is_zero() && outer.sign() < 0) throw ParseError("zero raised to a negative power", start);
    return lieforge::pow(r, outer.to_int64());
  }

  Rational exponent() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    Rational r;
    if (peek() == '(') {
      const std::size_t start = pos_;
      ++pos_;
      Expr inner = expr();
      expect(')');
      auto folded = fold_constant(inner);
      if (!folded) throw ParseError("exponent must be a constant rational", start);
      r = *folded;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      r = number_literal();
    } else {
      throw ParseError("expected an exponent", pos_);
    }
    return negative ? -r : r;
  }

  Rational number_literal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected digits after decimal point", pos_);
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  Expr base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::constant(number_literal());
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "exp" || name == "arctg") {
      expect('(');
      Expr arg = expr();
      expect(')');
      return name == "exp" ? exp(arg) : arctan(arg);
    }
    if (name.size() > 1 && name[0] == 'x') {
      bool digits = true;
      for (char d : name.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(d));
      if (digits) {
        std::size_t index = 0;
        for (char d : name.substr(1)) {
          index = index * 10 + static_cast<std::size_t>(d - '0');
          if (index > dim_) break;
        }
        if (index == 0 || index > dim_) {
          throw ParseError("variable " + std::string(name) + " outside x1..x" + std::to_string(dim_), start);
        }
        return Expr::variable(index - 1);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dim) { return Parser(text, dim).parse(); }

std::optional<Rational> fold_constant(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Const:
      return e.value();
    case K::Neg: {
      auto a = fold_constant(e.lhs());
      if (!a) return std::nullopt;
      return -*a;
    }
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      auto a = fold_constant(e.lhs());
      auto b = fold_constant(e.rhs());
      if (!a || !b) return std::nullopt;
      if (e.kind() == K::Add) return *a + *b;
      if (e.kind() == K::Sub) return *a - *b;
      if (e.kind() == K::Mul) return *a * *b;
      if (b->is_zero()) return std::nullopt;
      return *a / *b;
    }
    case K::Pow: {
      auto a = fold_constant(e.lhs());
      if (!a || !e.exponent().is_integer()) return std::nullopt;
      if (a->is_zero() && e.exponent().sign() < 0) return std::nullopt;
      return pow(*a, e.exponent().to_int64());
    }
    default:
      return std::nullopt;
  }
}

// -------------------------------------------------------------- evaluation

Point::Point(std::vector<double> coordinates) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw InvalidArgument("a point needs at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InvalidArgument("point coordinates must be finite");
  }
}

namespace {

template <class T>
std::string format_point(std::span<const T> x) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << value_of(x[i]);
  os << ')';
  return os.str();
}

template <class T>
[[noreturn]] void domain_error(const Expr& node, std::span<const T> x, const std::string& what) {
  throw DomainError(what + " in '" + node.to_string() + "' at x = " + format_point(x));
}

template <class T>
T int_power(T base, std::int64_t k) {
  T result(1.0);
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  while (n) {
    if (n & 1U) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return k < 0 ? T(1.0) / result : result;
}

bool finite(double v) { return std::isfinite(v); }
bool finite(Dual v) { return std::isfinite(v.value) && std::isfinite(v.derivative); }

template <class T>
T eval_node(const Expr& e, std::span<const T> x) {
  using std::atan;
  using std::exp;
  using std::log;
  using K = Expr::Kind;
  T r{};
  switch (e.kind()) {
    case K::Var:
      return x[e.var_index()];
    case K::Const:
      return T(e.value().to_double());
    case K::Neg:
      r = -eval_node(e.lhs(), x);
      break;
    case K::Add:
      r = eval_node(e.lhs(), x) + eval_node(e.rhs(), x);
      break;
    case K::Sub:
      r = eval_node(e.lhs(), x) - eval_node(e.rhs(), x);
      break;
    case K::Mul:
      r = eval_node(e.lhs(), x) * eval_node(e.rhs(), x);
      break;
    case K::Div: {
      const T num = eval_node(e.lhs(), x);
      const T den = eval_node(e.rhs(), x);
      if (value_of(den) == 0.0) domain_error(e, x, "division by zero");
      r = num / den;
      break;
    }
    case K::Pow: {
      const T b = eval_node(e.lhs(), x);
      const Rational& q = e.exponent();
      if (q.is_integer()) {
        if (value_of(b) == 0.0 && q.sign() < 0) domain_error(e, x, "zero raised to a negative power");
        r = int_power(b, q.to_int64());
      } else {
        if (value_of(b) <= 0.0) domain_error(e, x, "fractional power of a non-positive base");
        r = exp(T(q.to_double()) * log(b));
      }
      break;
    }
    case K::Exp:
      r = exp(eval_node(e.lhs(), x));
      break;
    case K::Arctan:
      r = atan(eval_node(e.lhs(), x));
      break;
  }
  if (!finite(r)) domain_error(e, x, "non-finite value");
  return r;
}

void require_arity(const Expr& e, std::size_t dim) {
  if (e.arity() > dim) {
    throw DimensionError("expression uses x" + std::to_string(e.arity()) + " but the point has " +
                         std::to_string(dim) + " coordinates");
  }
}

}  // namespace

template <class T>
T evaluate(const Expr& e, std::span<const T> x) {
  require_arity(e, x.size());
  return eval_node(e, x);
}

template double evaluate<double>(const Expr&, std::span<const double>);
template Dual evaluate<Dual>(const Expr&, std::span<const Dual>);

std::string Point::to_string() const { return format_point(coordinates()); }

double eval(const Expr& e, const Point& p) { return evaluate(e, p.coordinates()); }

std::vector<double> grad(const Expr& e, const Point& p) {
  require_arity(e, p.dim());
  std::vector<Dual> x(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) x[i] = Dual(p[i]);
  std::vector<double> g(p.dim(), 0.0);
  for (std::size_t i = 0; i < e.arity(); ++i) {
    x[i].derivative = 1.0;
    g[i] = eval_node<Dual>(e, x).derivative;
    x[i].derivative = 0.0;
  }
  return g;
}

// ------------------------------------------------------------- derivative

namespace {

bool is_const(const Expr& e, int v) { return e.kind() == Expr::Kind::Const && e.value() == Rational(v); }

Expr s_neg(const Expr& a) {
  if (a.kind() == Expr::Kind::Const) return Expr::constant(-a.value());
  if (a.kind() == Expr::Kind::Neg) return a.lhs();
  return -a;
}

Expr s_add(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  if (a.kind() == Expr::Kind::Const && b.kind() == Expr::Kind::Const) return Expr::constant(a.value() + b.value());
  return a + b;
}

Expr s_sub(const Expr& a, const Expr& b) {
  if (is_const(b, 0)) return a;
  if (is_const(a, 0)) return s_neg(b);
  if (a.kind() == Expr::Kind::Const && b.kind() == Expr::Kind::Const) return Expr::constant(a.value() - b.value());
  return a - b;
}

Expr s_mul(const Expr& a, const Expr& b) {
  if (is_const(a, 0) || is_const(b, 0)) return Expr::constant(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  if (a.kind() == Expr::Kind::Const && b.kind() == Expr::Kind::Const) return Expr::constant(a.value() * b.value());
  return a * b;
}

Expr s_div(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return Expr::constant(0);
  if (is_const(b, 1)) return a;
  return a / b;
}

Expr s_pow(const Expr& a, const Rational& q) {
  if (q.is_zero()) return Expr::constant(1);
  if (q == Rational(1)) return a;
  return pow(a, q);
}

}  // namespace

Expr derivative(const Expr& e, std::size_t index) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Var:
      return Expr::constant(e.var_index() == index ? 1 : 0);
    case K::Const:
      return Expr::constant(0);
    case K::Neg:
      return s_neg(derivative(e.lhs(), index));
    case K::Add:
      return s_add(derivative(e.lhs(), index), derivative(e.rhs(), index));
    case K::Sub:
      return s_sub(derivative(e.lhs(), index), derivative(e.rhs(), index));
    case K::Mul:
      return s_add(s_mul(derivative(e.lhs(), index), e.rhs()), s_mul(e.lhs(), derivative(e.rhs(), index)));
    case K::Div: {
      const Expr& u = e.lhs();
      const Expr& v = e.rhs();
      return s_sub(s_div(derivative(u, index), v), s_div(s_mul(u, derivative(v, index)), s_pow(v, Rational(2))));
    }
    case K::Pow: {
      const Rational& q = e.exponent();
      if (q.is_zero()) return Expr::constant(0);
      return s_mul(s_mul(Expr::constant(q), s_pow(e.lhs(), q - Rational(1))), derivative(e.lhs(), index));
    }
    case K::Exp:
      return s_mul(e, derivative(e.lhs(), index));
    case K::Arctan:
      return s_div(derivative(e.lhs(), index), s_add(Expr::constant(1), s_pow(e.lhs(), Rational(2))));
  }
  return Expr::constant(0);
}

}  // namespace lieforge
