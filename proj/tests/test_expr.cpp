#include <gtest/gtest.h>

#include <cmath>

#include "lieforge/catalog.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/expr.hpp"
#include "support/expressions.hpp"

namespace lieforge {
namespace {

using Kind = Expr::Kind;

std::size_t parse_error_position(std::string_view text, std::size_t dim) {
  try {
    parse_expr(text, dim);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return 0;
}

TEST(ParseExpr, TableShapes) {
  const Expr q = parse_expr("x2/x1", 3);
  ASSERT_EQ(q.kind(), Kind::Div);
  EXPECT_EQ(q.lhs().kind(), Kind::Var);
  EXPECT_EQ(q.lhs().var_index(), 1u);
  EXPECT_EQ(q.rhs().var_index(), 0u);

  const Expr g32 = parse_expr("x1*exp(-x2/x1)", 3);
  ASSERT_EQ(g32.kind(), Kind::Mul);
  EXPECT_EQ(g32.rhs().kind(), Kind::Exp);
  // Unary minus takes a factor, so -x2/x1 is (-x2)/x1.
  ASSERT_EQ(g32.rhs().lhs().kind(), Kind::Div);
  EXPECT_EQ(g32.rhs().lhs().lhs().kind(), Kind::Neg);

  const Expr s = parse_expr("x1^2+x2^2+x3^2", 3);
  ASSERT_EQ(s.kind(), Kind::Add);
  EXPECT_EQ(s.lhs().kind(), Kind::Add);
  EXPECT_EQ(s.rhs().kind(), Kind::Pow);
  EXPECT_EQ(s.rhs().exponent(), Rational(2));
  EXPECT_EQ(s.arity(), 3u);
}

TEST(ParseExpr, PrecedenceAndAssociativity) {
  const Point p{2.0, 3.0};
  EXPECT_DOUBLE_EQ(eval(parse_expr("-x1^2", 2), p), -4.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("(-x1)^2", 2), p), 4.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1^3^2", 2), p), 512.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1-x2-1", 2), p), -2.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x2/x1/2", 2), p), 0.75);
  EXPECT_DOUBLE_EQ(eval(parse_expr("1+x1*x2", 2), p), 7.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1^-1", 2), p), 0.5);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1^(1/2+1/2)", 2), p), 2.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1^0.5", 2), Point{4.0, 0.0}), 2.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("3/4", 2), p), 0.75);
  EXPECT_DOUBLE_EQ(eval(parse_expr("arctg(x2/x2)", 2), p), std::atan(1.0));
}

TEST(ParseExpr, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_position("x1 + * x2", 3), 5u);
  EXPECT_EQ(parse_error_position("x4", 3), 0u);
  EXPECT_EQ(parse_error_position("x0", 3), 0u);
  EXPECT_EQ(parse_error_position("sin(x1)", 3), 0u);
  EXPECT_EQ(parse_error_position("(x1", 3), 3u);
  EXPECT_EQ(parse_error_position("x1 x2", 3), 3u);
  EXPECT_EQ(parse_error_position("", 3), 0u);
  EXPECT_EQ(parse_error_position("x1^x2", 3), 3u);
  EXPECT_THROW(parse_expr("1/0.", 3), ParseError);
}

TEST(FoldConstant, ExactValues) {
  EXPECT_EQ(fold_constant(parse_expr("(1/2)^-2 + 3", 1)), Rational(7));
  EXPECT_EQ(fold_constant(parse_expr("-(2)", 1)), Rational(-2));
  EXPECT_FALSE(fold_constant(parse_expr("x1+1", 1)));
  EXPECT_FALSE(fold_constant(parse_expr("exp(0)", 1)));
}

TEST(EvalGrad, Examples) {
  const Expr q = parse_expr("x2/x1", 3);
  EXPECT_DOUBLE_EQ(eval(q, Point{2, 1, 5}), 0.5);
  EXPECT_EQ(grad(q, Point{2, 1, 5}), (std::vector<double>{-0.25, 0.5, 0.0}));

  const Expr s = parse_expr("x1^2+x2^2+x3^2", 3);
  EXPECT_DOUBLE_EQ(eval(s, Point{1, 2, 3}), 14.0);
  EXPECT_EQ(grad(s, Point{1, 2, 3}), (std::vector<double>{2.0, 4.0, 6.0}));

  const Expr g32 = parse_expr("x1*exp(-x2/x1)", 3);
  EXPECT_DOUBLE_EQ(eval(g32, Point{1, 0, 0}), 1.0);
  const auto g = grad(g32, Point{1, 0, 0});
  EXPECT_DOUBLE_EQ(g[0], 1.0);
  EXPECT_DOUBLE_EQ(g[1], -1.0);
  EXPECT_DOUBLE_EQ(g[2], 0.0);
}

TEST(EvalGrad, DomainErrors) {
  EXPECT_THROW(eval(parse_expr("x2/x1", 2), Point{0, 1}), DomainError);
  EXPECT_THROW(eval(parse_expr("x1^(1/2)", 1), Point{-1}), DomainError);
  EXPECT_THROW(eval(parse_expr("exp(x1)", 1), Point{1000}), DomainError);
  EXPECT_DOUBLE_EQ(eval(parse_expr("x1^3", 1), Point{-2}), -8.0);
  EXPECT_THROW(eval(parse_expr("x3", 3), Point{1, 2}), DimensionError);
  try {
    eval(parse_expr("x2/x1", 2), Point{0, 1});
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x2/x1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Point({1.0, std::nan("")}), InvalidArgument);
}

using testing::catalog_expressions;
using testing::central_difference;

TEST(EvalGrad, MatchesCentralDifferencesOnCatalogExpressions) {
  testing::Rng rng(61);
  std::uniform_real_distribution<double> box(0.5, 2.0);
  for (const Expr& e : catalog_expressions()) {
    const std::size_t n = std::max<std::size_t>(e.arity(), 1);
    for (int s = 0; s < 50; ++s) {
      std::vector<double> x(n);
      for (auto& xi : x) xi = box(rng);
      const auto ad = grad(e, Point(x));
      for (std::size_t i = 0; i < n; ++i) {
        const double fd = central_difference(e, x, i, 1e-6);
        EXPECT_LE(std::abs(ad[i] - fd), 1e-5 * std::max(1.0, std::abs(ad[i]))) << e.to_string() << " d/dx" << i + 1;
      }
    }
  }
}

TEST(Derivative, AgreesWithForwardMode) {
  testing::Rng rng(63);
  std::uniform_real_distribution<double> box(0.5, 2.0);
  for (const Expr& e : catalog_expressions()) {
    const std::size_t n = std::max<std::size_t>(e.arity(), 1);
    std::vector<double> x(n);
    for (auto& xi : x) xi = box(rng);
    const auto ad = grad(e, Point(x));
    for (std::size_t i = 0; i < n; ++i) {
      const double sym = eval(derivative(e, i), Point(x));
      EXPECT_NEAR(sym, ad[i], 1e-12 * std::max(1.0, std::abs(ad[i]))) << e.to_string();
    }
  }
  EXPECT_EQ(derivative(parse_expr("x1*x2", 2), 0).to_string(), "x2");
  EXPECT_EQ(fold_constant(derivative(parse_expr("x1", 2), 1)), Rational(0));
}

TEST(ToString, ReparsesToTheSameFunction) {
  testing::Rng rng(65);
  std::uniform_real_distribution<double> box(0.5, 2.0);
  std::vector<Expr> exprs = catalog_expressions();
  for (const char* text : {"-x1^2", "(-x1)^2", "x1-(x2-x3)", "x1/(x2*x3)", "-(x1+x2)*x3", "x1^(-1/2)", "2^(1/2)*x1"}) {
    exprs.push_back(parse_expr(text, 3));
  }
  for (const Expr& e : exprs) {
    const Expr again = parse_expr(e.to_string(), 4);
    EXPECT_EQ(again.to_string(), e.to_string());
    std::vector<double> x(4);
    for (auto& xi : x) xi = box(rng);
    EXPECT_DOUBLE_EQ(eval(again, Point(x)), eval(e, Point(x))) << e.to_string();
  }
}

}  // namespace
}  // namespace lieforge
