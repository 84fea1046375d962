#include "lieforge/exact.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "lieforge/errors.hpp"

namespace lieforge {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

template <class Vec>
std::ostream& print_vector(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace

template <class Tag>
BasicVector<Tag>::BasicVector(std::size_t dim) : entries_(dim) {
  if (dim == 0) throw InvalidArgument("vector dimension must be positive");
}

template <class Tag>
BasicVector<Tag>::BasicVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("vector dimension must be positive");
}

template <class Tag>
BasicVector<Tag>::BasicVector(std::initializer_list<Rational> entries)
    : BasicVector(std::vector<Rational>(entries)) {}

template <class Tag>
BasicVector<Tag> BasicVector<Tag>::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis index out of range");
  BasicVector v(dim);
  v[index] = 1;
  return v;
}

template <class Tag>
bool BasicVector<Tag>::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

template <class Tag>
BasicVector<Tag>& BasicVector<Tag>::operator+=(const BasicVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

template <class Tag>
BasicVector<Tag>& BasicVector<Tag>::operator-=(const BasicVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

template <class Tag>
BasicVector<Tag>& BasicVector<Tag>::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

template <class Tag>
BasicVector<Tag> BasicVector<Tag>::operator-() const {
  BasicVector out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

template class BasicVector<PrimalTag>;
template class BasicVector<DualTag>;

Rational pair(const Covector& psi, const RationalVector& v) {
  require_same_dim(psi.dim(), v.dim(), "pairing");
  Rational sum;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!psi[i].is_zero() && !v[i].is_zero()) sum += psi[i] * v[i];
  }
  return sum;
}

RationalMatrix::RationalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw InvalidArgument("matrix dimension must be positive");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix dimension must be positive");
  RationalMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw InvalidArgument("matrix row " + std::to_string(r + 1) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& diag) {
  RationalMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

Covector RationalMatrix::row(std::size_t r) const {
  Covector v(dim_);
  for (std::size_t c = 0; c < dim_; ++c) v[c] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a(*this);
  Rational det = 1;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < dim_; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < dim_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < dim_; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  RationalMatrix a(*this);
  RationalMatrix inv = identity(dim_);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < dim_; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < dim_; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < dim_; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  RationalMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += ark * b(k, c);
      }
    }
  }
  return out;
}

RationalVector mat_apply(const RationalMatrix& F, const RationalVector& v) {
  require_same_dim(F.dim(), v.dim(), "mat_apply");
  RationalVector out(v.dim());
  for (std::size_t r = 0; r < F.dim(); ++r) {
    for (std::size_t c = 0; c < F.dim(); ++c) {
      if (!F(r, c).is_zero() && !v[c].is_zero()) out[r] += F(r, c) * v[c];
    }
  }
  return out;
}

Covector dual_apply(const RationalMatrix& F, const Covector& psi) {
  require_same_dim(F.dim(), psi.dim(), "dual_apply");
  Covector out(psi.dim());
  for (std::size_t r = 0; r < F.dim(); ++r) {
    if (psi[r].is_zero()) continue;
    for (std::size_t c = 0; c < F.dim(); ++c) {
      if (!F(r, c).is_zero()) out[c] += psi[r] * F(r, c);
    }
  }
  return out;
}

RationalMatrix matrix_commutator(const RationalMatrix& F, const RationalMatrix& G) {
  require_same_dim(F.dim(), G.dim(), "matrix_commutator");
  return F * G - G * F;
}

std::optional<Rational> verify_eigenpair(const RationalMatrix& F, const RationalVector& v) {
  require_same_dim(F.dim(), v.dim(), "verify_eigenpair");
  if (v.is_zero()) throw InvalidArgument("an eigenvector must be nonzero");
  const RationalVector image = mat_apply(F, v);
  std::size_t first = 0;
  while (v[first].is_zero()) ++first;
  const Rational lambda = image[first] / v[first];
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (image[i] != lambda * v[i]) return std::nullopt;
  }
  return lambda;
}

template <class Tag>
std::vector<BasicVector<Tag>> reduced_row_echelon(std::vector<BasicVector<Tag>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().dim();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    rows[rank] *= Rational(1) / rows[rank][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < n; ++c) {
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
  return rows;
}

template std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector>);
template std::vector<Covector> reduced_row_echelon(std::vector<Covector>);

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return print_vector(os, v); }
std::ostream& operator<<(std::ostream& os, const Covector& v) { return print_vector(os, v); }

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace lieforge
