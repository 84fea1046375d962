#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "lieforge/exact.hpp"

namespace lieforge {

/// Structure constants c_ij^k of a bracket on the basis e_1*, ..., e_n*:
/// [e_i*, e_j*] = sum_k c_ij^k e_k*. Indices are 0-based. Antisymmetry in
/// (i, j) holds for every value of this type.
class StructureConstants {
 public:
  /// The abelian (all-zero) tensor.
  explicit StructureConstants(std::size_t dim);

  /// From a dense n*n*n array indexed [(i*n + j)*n + k]; throws
  /// InvalidArgument unless c_ij^k = -c_ji^k everywhere.
  static StructureConstants from_dense(std::size_t dim, std::vector<Rational> dense);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets c_ij^k = value and c_ji^k = -value. Setting c_ii^k requires value 0.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// [e_i*, e_j*].
  Covector basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary elements.
  Covector bracket(const Covector& a, const Covector& b) const;

  bool is_zero() const;

  StructureConstants& operator+=(const StructureConstants& rhs);
  friend StructureConstants operator+(StructureConstants a, const StructureConstants& b) { return a += b; }
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

  /// Change of basis: the constants of the same bracket expressed in the basis
  /// whose m-th element is sum_i P(i, m) e_i*. Throws InvalidArgument when P is
  /// singular.
  StructureConstants change_basis(const RationalMatrix& P) const;

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const StructureConstants& sc);

/// Subspace of the algebra held as a reduced-row-echelon basis, so two
/// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  /// The zero subspace of an n-dimensional space.
  explicit Subspace(std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent or zero) generators.
  Subspace(std::size_t ambient_dim, std::vector<Covector> generators);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Covector>& basis() const { return basis_; }

  bool contains(const Covector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Covector> basis_;
};

struct JacobiViolation {
  std::array<std::size_t, 3> triple;  // i < j < k, 0-based
  Covector residual;                  // [[e_i,e_j],e_k] + [[e_k,e_i],e_j] + [[e_j,e_k],e_i]
};

/// Every sorted basis triple on which the Jacobi identity fails; empty iff
/// `sc` defines a Lie algebra.
std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc);

/// Throws NotLieAlgebra naming the first violated triple.
void require_lie(const StructureConstants& sc);

/// span{[a, b] : a in A, b in B}.
Subspace bracket_product(const StructureConstants& sc, const Subspace& A, const Subspace& B);

/// g, [g,g], [[g,g],[g,g]], ... up to and including the first zero subspace or
/// the first subspace equal to its successor (which is not repeated).
std::vector<Subspace> derived_series(const StructureConstants& sc);

/// g, [g,g], [[g,g],g], ... with the same termination rule as derived_series.
std::vector<Subspace> lower_central_series(const StructureConstants& sc);

bool is_solvable(const StructureConstants& sc);
bool is_nilpotent(const StructureConstants& sc);

}  // namespace lieforge
