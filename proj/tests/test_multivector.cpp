#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "lieforge/errors.hpp"
#include "lieforge/exact.hpp"
#include "lieforge/multivector.hpp"

namespace lieforge {
namespace {

KVector e(std::size_t n, KVector::Index idx) { return KVector::blade(n, std::move(idx)); }

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(e(3, {0}), e(3, {0})).is_zero());
  EXPECT_EQ(wedge(e(3, {1}), e(3, {0})), Rational(-1) * e(3, {0, 1}));
  EXPECT_EQ(wedge(e(3, {0}) + e(3, {1}), e(3, {2})), e(3, {0, 2}) + e(3, {1, 2}));
  EXPECT_THROW(wedge(e(3, {0}), e(4, {0})), DimensionError);
  EXPECT_THROW(wedge(e(3, {0, 1}), e(3, {1, 2})), InvalidArgument);
}

TEST(HodgeStar2, Examples) {
  EXPECT_EQ(hodge_star_2(e(3, {0, 1})), e(3, {2}));
  EXPECT_EQ(hodge_star_2(e(3, {1, 2})), e(3, {0}));
  EXPECT_EQ(hodge_star_2(e(3, {0, 2})), Rational(-1) * e(3, {1}));
  EXPECT_EQ(hodge_star_2(e(4, {0, 2})), Rational(-1) * e(4, {1, 3}));
  EXPECT_THROW(hodge_star_2(e(3, {0})), InvalidArgument);
}

TEST(TopCoefficient, Examples) {
  EXPECT_EQ(top_coefficient(e(3, {0, 1, 2})), Rational(1));
  EXPECT_EQ(top_coefficient(e(3, {1, 0, 2})), Rational(-1));
  EXPECT_EQ(top_coefficient(Rational(5) * e(4, {0, 1, 2, 3})), Rational(5));
  EXPECT_THROW(top_coefficient(e(3, {0, 1})), InvalidArgument);
}

TEST(PermutationSign, Basics) {
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
  EXPECT_EQ(permutation_sign({0, 2, 3, 1}), 1);
  EXPECT_EQ(permutation_sign({0, 0, 1}), 0);
}

// Every strictly increasing k-subset of {0..n-1}.
std::vector<KVector::Index> subsets(std::size_t n, std::size_t k) {
  std::vector<KVector::Index> out;
  KVector::Index cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

TEST(Wedge, GradedAnticommutativeAndAssociative) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t p = 0; p <= std::min<std::size_t>(n, 4); ++p) {
      for (std::size_t q = 0; p + q <= n && q <= 4; ++q) {
        for (const auto& a : subsets(n, p)) {
          for (const auto& b : subsets(n, q)) {
            const KVector ka = e(n, a);
            const KVector kb = e(n, b);
            const Rational sign = (p * q) % 2 == 0 ? Rational(1) : Rational(-1);
            EXPECT_EQ(wedge(ka, kb), sign * wedge(kb, ka));
          }
        }
      }
    }
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& a : subsets(n, 1)) {
      for (const auto& b : subsets(n, 1)) {
        for (const auto& c : subsets(n, 2)) {
          if (n < 4) continue;
          EXPECT_EQ(wedge(wedge(e(n, a), e(n, b)), e(n, c)), wedge(e(n, a), wedge(e(n, b), e(n, c))));
        }
      }
    }
  }
}

// Gram determinant <w|t> = det(<w_i|t_j>) for w = e_a ^ e_b, t = e_c ^ e_d.
Rational gram(const KVector::Index& w, const KVector::Index& t) {
  auto dot = [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); };
  return dot(w[0], t[0]) * dot(w[1], t[1]) - dot(w[0], t[1]) * dot(w[1], t[0]);
}

TEST(HodgeStar2, GramDeterminantOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& w : subsets(n, 2)) {
      for (const auto& t : subsets(n, 2)) {
        EXPECT_EQ(gram(w, t), top_coefficient(wedge(e(n, w), hodge_star_2(e(n, t)))))
            << "n=" << n << " w=" << w[0] << w[1] << " t=" << t[0] << t[1];
      }
    }
  }
}

TEST(HodgeStar2, Linear) {
  const KVector a = e(4, {0, 1}) + Rational(3) * e(4, {1, 3});
  const KVector b = Rational(-2) * e(4, {0, 3}) + e(4, {2, 3});
  const Rational alpha(2, 3);
  const Rational beta(-5);
  EXPECT_EQ(hodge_star_2(alpha * a + beta * b), alpha * hodge_star_2(a) + beta * hodge_star_2(b));
}

TEST(KVector, ThreeDimensionalCrossProduct) {
  const RationalVector u{1, 2, 3};
  const RationalVector v{-1, 0, 4};
  const KVector star = hodge_star_2(wedge(KVector::from_vector(u.entries()), KVector::from_vector(v.entries())));
  // u x v = (2*4 - 3*0, 3*(-1) - 1*4, 1*0 - 2*(-1))
  EXPECT_EQ(star.coefficient({0}), Rational(8));
  EXPECT_EQ(star.coefficient({1}), Rational(-7));
  EXPECT_EQ(star.coefficient({2}), Rational(2));
}

}  // namespace
}  // namespace lieforge
