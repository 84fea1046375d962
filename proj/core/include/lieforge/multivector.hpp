#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lieforge/errors.hpp"
#include "lieforge/rational.hpp"

namespace lieforge {

/// Sign of the permutation that sorts `indices`: +1 or -1, and 0 when an
/// index repeats.
inline int permutation_sign(std::vector<std::size_t> indices) {
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) return 0;
      if (indices[i] > indices[j]) sign = -sign;
    }
  }
  return sign;
}

/// Element of the k-th exterior power of R^n in the standard basis
/// e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik (indices 0-based). Zero coefficients
/// are never stored.
template <class Scalar>
class BasicKVector {
 public:
  using Index = std::vector<std::size_t>;
  using Terms = std::map<Index, Scalar>;

  BasicKVector(std::size_t dim, std::size_t grade) : dim_(dim), grade_(grade) {
    if (dim == 0) throw InvalidArgument("multivector dimension must be positive");
    if (grade > dim) throw InvalidArgument("grade exceeds dimension");
  }

  /// coeff * e_{i1} ^ ... ^ e_{ik}; the indices may come in any order and are
  /// sorted with the matching sign (a repeated index gives zero).
  static BasicKVector blade(std::size_t dim, Index indices, Scalar coeff = Scalar(1)) {
    BasicKVector out(dim, indices.size());
    for (std::size_t i : indices) {
      if (i >= dim) throw InvalidArgument("blade index out of range");
    }
    const int sign = permutation_sign(indices);
    if (sign == 0) return out;
    std::sort(indices.begin(), indices.end());
    out.add_term(indices, sign > 0 ? coeff : Scalar(-coeff));
    return out;
  }

  static BasicKVector from_vector(std::span<const Scalar> v) {
    BasicKVector out(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term({i}, v[i]);
    return out;
  }

  std::size_t dim() const { return dim_; }
  std::size_t grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Index& sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds `value` to the coefficient of a strictly increasing index tuple.
  void add_term(const Index& sorted, const Scalar& value) {
    if (sorted.size() != grade_) throw InvalidArgument("index tuple length differs from grade");
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] >= dim_ || (i && sorted[i - 1] >= sorted[i])) {
        throw InvalidArgument("index tuple must be strictly increasing and in range");
      }
    }
    if (value == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(sorted, value);
    if (!inserted) {
      it->second += value;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  BasicKVector& operator+=(const BasicKVector& rhs) {
    require_compatible(rhs);
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
    return *this;
  }

  BasicKVector& operator-=(const BasicKVector& rhs) {
    require_compatible(rhs);
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, Scalar(-c));
    return *this;
  }

  BasicKVector& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
  }

  friend BasicKVector operator+(BasicKVector a, const BasicKVector& b) { return a += b; }
  friend BasicKVector operator-(BasicKVector a, const BasicKVector& b) { return a -= b; }
  friend BasicKVector operator*(const Scalar& s, BasicKVector a) { return a *= s; }
  friend bool operator==(const BasicKVector&, const BasicKVector&) = default;

 private:
  void require_compatible(const BasicKVector& rhs) const {
    if (dim_ != rhs.dim_) throw DimensionError("multivector dimension mismatch");
    if (grade_ != rhs.grade_) throw InvalidArgument("multivector grade mismatch");
  }

  std::size_t dim_;
  std::size_t grade_;
  Terms terms_;
};

using KVector = BasicKVector<Rational>;
using KVectorF = BasicKVector<double>;

/// Exterior product. Throws DimensionError on dimension mismatch and
/// InvalidArgument when the grades sum past the dimension.
template <class Scalar>
BasicKVector<Scalar> wedge(const BasicKVector<Scalar>& a, const BasicKVector<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  if (a.grade() + b.grade() > a.dim()) throw InvalidArgument("wedge: grade overflow");
  BasicKVector<Scalar> out(a.dim(), a.grade() + b.grade());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<std::size_t> joined(ia);
      joined.insert(joined.end(), ib.begin(), ib.end());
      const int sign = permutation_sign(joined);
      if (sign == 0) continue;
      std::sort(joined.begin(), joined.end());
      Scalar term = ca * cb;
      out.add_term(joined, sign > 0 ? term : Scalar(-term));
    }
  }
  return out;
}

/// Hodge dual of a 2-vector under the Euclidean metric with e_1 ^ ... ^ e_n
/// positively oriented: *(e_i ^ e_j) = sign(i, j, k_1, ..., k_{n-2}) e_{k_1} ^ ... ^ e_{k_{n-2}}
/// with k ascending over the complement of {i, j}.
template <class Scalar>
BasicKVector<Scalar> hodge_star_2(const BasicKVector<Scalar>& b) {
  if (b.grade() != 2) {
    throw InvalidArgument("hodge_star_2 expects a 2-vector, got grade " + std::to_string(b.grade()));
  }
  const std::size_t n = b.dim();
  BasicKVector<Scalar> out(n, n - 2);
  for (const auto& [idx, c] : b.terms()) {
    std::vector<std::size_t> complement;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != idx[0] && k != idx[1]) complement.push_back(k);
    }
    std::vector<std::size_t> perm{idx[0], idx[1]};
    perm.insert(perm.end(), complement.begin(), complement.end());
    out.add_term(complement, permutation_sign(perm) > 0 ? c : Scalar(-c));
  }
  return out;
}

/// Coefficient of e_1 ^ ... ^ e_n in a top-grade multivector.
template <class Scalar>
Scalar top_coefficient(const BasicKVector<Scalar>& w) {
  if (w.grade() != w.dim()) {
    throw InvalidArgument("top_coefficient expects grade " + std::to_string(w.dim()) + ", got " +
                          std::to_string(w.grade()));
  }
  std::vector<std::size_t> all(w.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return w.coefficient(all);
}

}  // namespace lieforge
