#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/dual.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

/// Immutable differentiable scalar expression in the coordinates
/// x_1, ..., x_n. Variables are stored 0-based; text uses x1, x2, ...
/// Subtrees are shared, so copies are cheap.
class Expr {
 public:
  enum class Kind { Var, Const, Neg, Add, Sub, Mul, Div, Pow, Exp, Arctan };

  static Expr variable(std::size_t index);
  static Expr constant(Rational value);

  Kind kind() const;
  /// Var only.
  std::size_t var_index() const;
  /// Const only.
  const Rational& value() const;
  /// Pow only.
  const Rational& exponent() const;
  /// Operand of Neg/Pow/Exp/Arctan, left operand of binary nodes.
  const Expr& lhs() const;
  /// Right operand of binary nodes.
  const Expr& rhs() const;

  /// One past the highest variable index used (0 for constants).
  std::size_t arity() const;

  /// Parseable text, parenthesised only where precedence requires it.
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, const Rational& exponent);
  friend Expr exp(const Expr& a);
  friend Expr arctan(const Expr& a);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind kind, std::vector<Expr> children, Rational payload = Rational(0),
                   std::size_t var = 0);

  std::shared_ptr<const Node> node_;
};

/// Parses the grammar
///   expr     := term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := base ('^' exponent)?
///   base     := number | var | '(' expr ')' | '-' factor | func '(' expr ')'
///   func     := 'exp' | 'arctg'
///   var      := 'x' digits            (1 <= index <= dim)
///   exponent := signed rational literal | '(' constant rational expression ')'
/// '^' binds tighter than unary minus and chains to the right. Throws
/// ParseError with the byte offset of the problem.
Expr parse_expr(std::string_view text, std::size_t dim);

/// The exact value of a variable-free expression built from rationals with
/// + - * / and integer powers, nullopt otherwise.
std::optional<Rational> fold_constant(const Expr& e);

/// Evaluation point with finite binary64 coordinates.
class Point {
 public:
  /// Throws InvalidArgument for an empty or non-finite coordinate list.
  explicit Point(std::vector<double> coordinates);
  Point(std::initializer_list<double> coordinates) : Point(std::vector<double>(coordinates)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coordinates() const { return coords_; }

  std::string to_string() const;

 private:
  std::vector<double> coords_;
};

/// Evaluates over double or Dual. Throws DomainError on division by zero,
/// a fractional power of a non-positive base, or a non-finite result, naming
/// the offending subexpression and the point.
template <class T>
T evaluate(const Expr& e, std::span<const T> x);

extern template double evaluate<double>(const Expr&, std::span<const double>);
extern template Dual evaluate<Dual>(const Expr&, std::span<const Dual>);

/// Value at p. Throws DimensionError when p has fewer coordinates than the
/// expression uses.
double eval(const Expr& e, const Point& p);

/// Gradient at p by forward-mode dual numbers, one pass per coordinate.
std::vector<double> grad(const Expr& e, const Point& p);

/// Symbolic partial derivative with respect to x_{index+1}, lightly
/// simplified (zero and unit factors folded).
Expr derivative(const Expr& e, std::size_t index);

}  // namespace lieforge
