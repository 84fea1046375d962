#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

struct PrimalTag {};
struct DualTag {};

/// Fixed-dimension vector of exact rationals. The tag separates vectors of V
/// from covectors of V* so a pairing or a dual map cannot be applied to the
/// wrong side by accident.
template <class Tag>
class BasicVector {
 public:
  /// Zero vector; throws InvalidArgument when `dim == 0`.
  explicit BasicVector(std::size_t dim);
  explicit BasicVector(std::vector<Rational> entries);
  BasicVector(std::initializer_list<Rational> entries);

  /// The `index`-th standard basis vector (0-based).
  static BasicVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  BasicVector& operator+=(const BasicVector& rhs);
  BasicVector& operator-=(const BasicVector& rhs);
  BasicVector& operator*=(const Rational& s);
  BasicVector operator-() const;

  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator*(const Rational& s, BasicVector a) { return a *= s; }
  friend bool operator==(const BasicVector&, const BasicVector&) = default;

 private:
  std::vector<Rational> entries_;
};

using RationalVector = BasicVector<PrimalTag>;
/// Coefficients against the dual basis e_1*, ..., e_n*.
using Covector = BasicVector<DualTag>;

extern template class BasicVector<PrimalTag>;
extern template class BasicVector<DualTag>;

/// psi(v).
Rational pair(const Covector& psi, const RationalVector& v);

/// Square matrix acting on column vectors. Entry (r, c) is row r, column c.
class RationalMatrix {
 public:
  /// Zero matrix; throws InvalidArgument when `dim == 0`.
  explicit RationalMatrix(std::size_t dim);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  /// Throws InvalidArgument unless `rows` is a non-empty square grid.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t dim);
  static RationalMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  RationalVector column(std::size_t c) const;
  Covector row(std::size_t r) const;

  RationalMatrix transpose() const;
  bool is_zero() const;

  /// Exact determinant by fraction Gaussian elimination.
  Rational determinant() const;
  /// Exact inverse, or nullopt when singular.
  std::optional<RationalMatrix> inverse() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// F v. Throws DimensionError.
RationalVector mat_apply(const RationalMatrix& F, const RationalVector& v);

/// The dual map F*: psi -> psi o F, i.e. the transpose acting on the
/// coefficient column of psi.
Covector dual_apply(const RationalMatrix& F, const Covector& psi);

/// FG - GF. Throws DimensionError.
RationalMatrix matrix_commutator(const RationalMatrix& F, const RationalMatrix& G);

/// The eigenvalue of `v` under `F` when F v = lambda v holds exactly for a
/// rational lambda, nullopt otherwise. Throws InvalidArgument for v = 0 and
/// DimensionError on mismatch.
std::optional<Rational> verify_eigenpair(const RationalMatrix& F, const RationalVector& v);

/// Reduced row echelon form of the span of `rows`; zero rows are dropped so
/// the result is a canonical basis of the span.
template <class Tag>
std::vector<BasicVector<Tag>> reduced_row_echelon(std::vector<BasicVector<Tag>> rows);

extern template std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector>);
extern template std::vector<Covector> reduced_row_echelon(std::vector<Covector>);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const Covector& v);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace lieforge
