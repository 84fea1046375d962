#pragma once

// Random exact inputs for property tests, the acceptance run and benchmarks.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lieforge/algebra.hpp"
#include "lieforge/bracket.hpp"
#include "lieforge/catalog.hpp"

namespace lieforge::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Small integers, with an occasional half or third.
inline Rational random_rational(Rng& rng, int range = 3) {
  const auto num = std::uniform_int_distribution<int>(-range, range)(rng);
  const int den = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 2 + uniform_index(rng, 0, 1) : 1;
  return Rational(num, den);
}

inline Rational random_nonzero(Rng& rng) {
  static const Rational choices[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                     Rational(-1, 3)};
  return choices[uniform_index(rng, 0, 5)];
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t n) {
  RationalMatrix M(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) M(r, c) = random_rational(rng);
  }
  return M;
}

inline RationalVector random_vector(Rng& rng, std::size_t n) {
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(rng);
  return v;
}

inline Covector random_covector(Rng& rng, std::size_t n) {
  Covector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(rng);
  return v;
}

/// L * U with unit lower L and upper U on a nonzero diagonal, so never singular.
inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  RationalMatrix L = RationalMatrix::identity(n);
  RationalMatrix U(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c < r) L(r, c) = random_rational(rng, 2);
      if (c > r) U(r, c) = random_rational(rng, 2);
    }
    U(r, r) = random_nonzero(rng);
  }
  return L * U;
}

/// P F P^-1 with v -> P v.
inline std::pair<RationalMatrix, RationalVector> conjugate(const RationalMatrix& F, const RationalVector& v,
                                                           const RationalMatrix& P) {
  return {P * F * *P.inverse(), mat_apply(P, v)};
}

/// F0 has e_n as eigenvector (its last column is lambda e_n); the pair is then
/// moved to a random basis.
inline AnchoredPair random_pair(Rng& rng, std::size_t n) {
  RationalMatrix F0 = random_matrix(rng, n);
  const Rational lambda = random_rational(rng);
  for (std::size_t r = 0; r + 1 < n; ++r) F0(r, n - 1) = Rational(0);
  F0(n - 1, n - 1) = lambda;
  auto [F, v] = conjugate(F0, RationalVector::basis(n, n - 1), random_invertible(rng, n));
  return AnchoredPair(std::move(F), std::move(v), lambda);
}

/// Strictly lower-triangular F0 kills e_n; conjugated by a random basis change.
inline AnchoredPair random_nilpotent_pair(Rng& rng, std::size_t n) {
  RationalMatrix F0(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) F0(r, c) = random_rational(rng);
  }
  auto [F, v] = conjugate(F0, RationalVector::basis(n, n - 1), random_invertible(rng, n));
  return AnchoredPair(std::move(F), std::move(v), Rational(0));
}

/// Two pairs satisfying the commuting conditions [F,G] = 0, Fv = lambda v,
/// Gw = gamma w, Fw = 0, Gv = 0: F lives on the block e_1..e_a anchored at
/// e_a, G on e_{a+1}..e_n anchored at e_n, and both are moved by one random
/// basis change. With `nilpotent` both blocks are strictly lower triangular.
inline std::pair<AnchoredPair, AnchoredPair> random_commuting_couple(Rng& rng, std::size_t n, bool nilpotent) {
  const std::size_t a = uniform_index(rng, 1, n - 1);
  RationalMatrix F0(n);
  RationalMatrix G0(n);
  auto fill_block = [&](RationalMatrix& M, std::size_t begin, std::size_t end) -> Rational {
    const std::size_t anchor = end - 1;
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = begin; c < end; ++c) {
        if (nilpotent ? c < r : c != anchor) M(r, c) = random_rational(rng);
      }
    }
    if (nilpotent) return Rational(0);
    const Rational lambda = random_rational(rng);
    M(anchor, anchor) = lambda;
    return lambda;
  };
  const Rational lambda = fill_block(F0, 0, a);
  const Rational gamma = fill_block(G0, a, n);
  const RationalMatrix P = random_invertible(rng, n);
  auto [F, v] = conjugate(F0, RationalVector::basis(n, a - 1), P);
  auto [G, w] = conjugate(G0, RationalVector::basis(n, n - 1), P);
  return {AnchoredPair(std::move(F), std::move(v), lambda), AnchoredPair(std::move(G), std::move(w), gamma)};
}

/// Every assignment of the catalog's sample values {-2, -1, 1/2, 1, 2} to the
/// entry's parameters.
inline std::vector<Parameters> parameter_grid(const CatalogName& name) {
  static const Rational values[] = {Rational(-2), Rational(-1), Rational(1, 2), Rational(1), Rational(2)};
  std::vector<Parameters> grid{{}};
  for (const auto& p : name.parameters) {
    std::vector<Parameters> next;
    for (const auto& partial : grid) {
      for (const auto& v : values) {
        Parameters extended = partial;
        extended[p] = v;
        next.push_back(std::move(extended));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

/// Every catalog entry at every grid point.
inline std::vector<CatalogEntry> all_catalog_instances() {
  std::vector<CatalogEntry> out;
  for (const auto& name : list_catalog()) {
    for (const auto& params : parameter_grid(name)) out.push_back(lookup(name.name, params));
  }
  return out;
}

/// A Jacobi tensor of dimension n drawn from one of: a single random pair, a
/// commuting couple, or a catalog tensor of matching dimension in a random basis.
inline StructureConstants random_jacobi_tensor(Rng& rng, std::size_t n) {
  const std::size_t kind = uniform_index(rng, 0, n >= 3 && n <= 4 ? 2 : 1);
  if (kind == 0) {
    const AnchoredPair p = random_pair(rng, n);
    return structure_constants_of_pairs(std::span<const AnchoredPair>(&p, 1));
  }
  if (kind == 1) {
    auto [p, q] = random_commuting_couple(rng, n, false);
    const std::vector<AnchoredPair> pairs{p, q};
    return structure_constants_of_pairs(pairs);
  }
  std::vector<CatalogName> names;
  for (const auto& c : list_catalog()) {
    if (c.dim == n) names.push_back(c);
  }
  const CatalogName& pick = names[uniform_index(rng, 0, names.size() - 1)];
  const auto grid = parameter_grid(pick);
  const CatalogEntry e = lookup(pick.name, grid[uniform_index(rng, 0, grid.size() - 1)]);
  return e.commutators.change_basis(random_invertible(rng, n));
}

}  // namespace lieforge::testing
