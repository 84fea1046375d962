#include "lieforge/algebra.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>

#include "lieforge/errors.hpp"

namespace lieforge {

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

// Iterates g_(0) = g, g_(i) = step(g_(i-1)) until zero or stable. The chain
// length can shrink at most `dim` times, so dim + 1 iterations suffice.
std::vector<Subspace> iterate_series(const StructureConstants& sc,
                                     const std::function<Subspace(const Subspace&)>& step) {
  std::vector<Subspace> series{Subspace::full(sc.dim())};
  for (std::size_t iter = 0; iter <= sc.dim() && !series.back().is_zero(); ++iter) {
    Subspace next = step(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {
  if (dim == 0) throw InvalidArgument("algebra dimension must be positive");
}

StructureConstants StructureConstants::from_dense(std::size_t dim, std::vector<Rational> dense) {
  if (dense.size() != dim * dim * dim) {
    throw InvalidArgument("dense structure constants need n^3 entries");
  }
  StructureConstants sc(dim);
  sc.c_ = std::move(dense);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (sc(i, j, k) != -sc(j, i, k)) {
          throw InvalidArgument("structure constants not antisymmetric at " + triple_name(i, j, k));
        }
      }
    }
  }
  return sc;
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InvalidArgument("structure constant index out of range");
  if (i == j && !value.is_zero()) {
    throw InvalidArgument("c_ii^k must vanish by antisymmetry " + triple_name(i, j, k));
  }
  c_[(i * dim_ + j) * dim_ + k] = value;
  c_[(j * dim_ + i) * dim_ + k] = -value;
}

Covector StructureConstants::basis_bracket(std::size_t i, std::size_t j) const {
  Covector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

Covector StructureConstants::bracket(const Covector& a, const Covector& b) const {
  if (a.dim() != dim_ || b.dim() != dim_) throw DimensionError("bracket: dimension mismatch");
  Covector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || b[j].is_zero()) continue;
      const Rational w = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

bool StructureConstants::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

StructureConstants& StructureConstants::operator+=(const StructureConstants& rhs) {
  if (dim_ != rhs.dim_) throw DimensionError("structure constants dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

StructureConstants StructureConstants::change_basis(const RationalMatrix& P) const {
  if (P.dim() != dim_) throw DimensionError("change_basis: dimension mismatch");
  const auto inv = P.inverse();
  if (!inv) throw InvalidArgument("change_basis: singular basis matrix");
  // New basis f_m = sum_i P(i,m) e_i. [f_a, f_b] expressed in e, then mapped
  // back through P^{-1}.
  const RationalMatrix columns = P.transpose();
  StructureConstants out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = a + 1; b < dim_; ++b) {
      const Covector br = bracket(columns.row(a), columns.row(b));
      for (std::size_t m = 0; m < dim_; ++m) {
        Rational coeff;
        for (std::size_t i = 0; i < dim_; ++i) {
          if (!br[i].is_zero()) coeff += (*inv)(m, i) * br[i];
        }
        out.set(a, b, m, coeff);
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const StructureConstants& sc) {
  bool first = true;
  os << '{';
  for (std::size_t i = 0; i < sc.dim(); ++i) {
    for (std::size_t j = i + 1; j < sc.dim(); ++j) {
      for (std::size_t k = 0; k < sc.dim(); ++k) {
        if (sc(i, j, k).is_zero()) continue;
        if (!first) os << ", ";
        first = false;
        os << "c" << i + 1 << j + 1 << "^" << k + 1 << "=" << sc(i, j, k);
      }
    }
  }
  return os << '}';
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim == 0) throw InvalidArgument("ambient dimension must be positive");
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Covector> generators)
    : Subspace(ambient_dim) {
  for (const auto& g : generators) {
    if (g.dim() != ambient_dim) throw DimensionError("subspace generator dimension mismatch");
  }
  basis_ = reduced_row_echelon(std::move(generators));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Covector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(Covector::basis(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Covector& v) const {
  std::vector<Covector> extended = basis_;
  extended.push_back(v);
  return reduced_row_echelon(std::move(extended)).size() == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("subspace dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Covector& v) { return contains(v); });
}

std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<JacobiViolation> out;
  // Residual component l: sum_m c_ij^m c_mk^l + c_ki^m c_mj^l + c_jk^m c_mi^l.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Covector residual(n);
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& a = sc(i, j, m);
          const Rational& b = sc(k, i, m);
          const Rational& c = sc(j, k, m);
          if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
          for (std::size_t l = 0; l < n; ++l) {
            if (!a.is_zero()) residual[l] += a * sc(m, k, l);
            if (!b.is_zero()) residual[l] += b * sc(m, j, l);
            if (!c.is_zero()) residual[l] += c * sc(m, i, l);
          }
        }
        if (!residual.is_zero()) out.push_back({{i, j, k}, std::move(residual)});
      }
    }
  }
  return out;
}

void require_lie(const StructureConstants& sc) {
  const auto violations = jacobi_check(sc);
  if (!violations.empty()) {
    const auto& t = violations.front().triple;
    throw NotLieAlgebra("Jacobi identity fails on basis triple " + triple_name(t[0], t[1], t[2]) +
                        " (" + std::to_string(violations.size()) + " violated triples)");
  }
}

Subspace bracket_product(const StructureConstants& sc, const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != sc.dim() || B.ambient_dim() != sc.dim()) {
    throw DimensionError("bracket_product: dimension mismatch");
  }
  std::vector<Covector> generators;
  for (const auto& a : A.basis()) {
    for (const auto& b : B.basis()) {
      Covector br = sc.bracket(a, b);
      if (!br.is_zero()) generators.push_back(std::move(br));
    }
  }
  return Subspace(sc.dim(), std::move(generators));
}

std::vector<Subspace> derived_series(const StructureConstants& sc) {
  require_lie(sc);
  return iterate_series(sc, [&sc](const Subspace& s) { return bracket_product(sc, s, s); });
}

std::vector<Subspace> lower_central_series(const StructureConstants& sc) {
  require_lie(sc);
  const Subspace whole = Subspace::full(sc.dim());
  return iterate_series(sc, [&](const Subspace& s) { return bracket_product(sc, s, whole); });
}

bool is_solvable(const StructureConstants& sc) { return derived_series(sc).back().is_zero(); }

bool is_nilpotent(const StructureConstants& sc) { return lower_central_series(sc).back().is_zero(); }

}  // namespace lieforge
