#include "lieforge/bracket.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "lieforge/errors.hpp"
#include "lieforge/multivector.hpp"

namespace lieforge {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

Covector basis_covector(std::size_t n, std::size_t i) { return Covector::basis(n, i); }

// Evaluates a wedge of two scalar functionals iota_a, iota_b and one
// covector-valued map M* (occupying slot `map_slot`, the scalar functionals
// filling the remaining slots in order) on (x0, x1, x2):
//   sum over permutations s of sign(s) * slotvalues(x_s0, x_s1, x_s2).
Covector alternating3(const RationalVector& a, const RationalVector& b, const RationalMatrix& M,
                      int map_slot, const std::array<const Covector*, 3>& x) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  static constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
  Covector out(M.dim());
  for (int p = 0; p < 6; ++p) {
    Rational scalar = signs[p];
    int next_scalar = 0;
    const Covector* mapped = nullptr;
    for (int slot = 0; slot < 3; ++slot) {
      const Covector& arg = *x[perms[p][slot]];
      if (slot == map_slot) {
        mapped = &arg;
      } else {
        scalar *= pair(arg, next_scalar == 0 ? a : b);
        ++next_scalar;
      }
      if (scalar.is_zero()) break;
    }
    if (scalar.is_zero()) continue;
    out += scalar * dual_apply(M, *mapped);
  }
  return out;
}

template <class Eval>
TrilinearDefect evaluate_on_triples(std::size_t n, Eval&& eval) {
  TrilinearDefect defect(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Covector ei = basis_covector(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Covector ej = basis_covector(n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Covector ek = basis_covector(n, k);
        defect.set({i, j, k}, eval(std::array<const Covector*, 3>{&ei, &ej, &ek}));
      }
    }
  }
  return defect;
}

}  // namespace

AnchoredPair::AnchoredPair(RationalMatrix F, RationalVector v, Rational lambda)
    : map_(std::move(F)), vector_(std::move(v)), lambda_(std::move(lambda)) {
  require_dim(map_.dim(), vector_.dim(), "AnchoredPair");
  if (vector_.is_zero()) throw InvalidArgument("an eigenvector must be nonzero");
  if (mat_apply(map_, vector_) != lambda_ * vector_) {
    throw InvalidArgument("F v != lambda v for lambda = " + lambda_.to_string());
  }
}

AnchoredPair AnchoredPair::from_eigenvector(RationalMatrix F, RationalVector v) {
  auto lambda = verify_eigenpair(F, v);
  if (!lambda) throw InvalidArgument("vector is not an eigenvector of the map");
  return AnchoredPair(std::move(F), std::move(v), *lambda);
}

Covector map_bracket(const RationalMatrix& F, const RationalVector& v, const Covector& psi,
                     const Covector& phi) {
  require_dim(F.dim(), v.dim(), "pair_bracket");
  require_dim(F.dim(), psi.dim(), "pair_bracket");
  require_dim(F.dim(), phi.dim(), "pair_bracket");
  Covector out(F.dim());
  const Rational phi_v = pair(phi, v);
  const Rational psi_v = pair(psi, v);
  if (!phi_v.is_zero()) out += phi_v * dual_apply(F, psi);
  if (!psi_v.is_zero()) out -= psi_v * dual_apply(F, phi);
  return out;
}

Covector pair_bracket(const AnchoredPair& p, const Covector& psi, const Covector& phi) {
  return map_bracket(p.map(), p.eigenvector(), psi, phi);
}

StructureConstants structure_constants_of_map(const RationalMatrix& F, const RationalVector& v) {
  require_dim(F.dim(), v.dim(), "structure_constants_of_map");
  const std::size_t n = F.dim();
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Covector br = map_bracket(F, v, basis_covector(n, i), basis_covector(n, j));
      for (std::size_t k = 0; k < n; ++k) sc.set(i, j, k, br[k]);
    }
  }
  return sc;
}

StructureConstants structure_constants_of_pairs(std::span<const AnchoredPair> pairs) {
  if (pairs.empty()) throw InvalidArgument("structure_constants_of_pairs: no pairs");
  const std::size_t n = pairs.front().dim();
  StructureConstants sum(n);
  for (const auto& p : pairs) {
    require_dim(p.dim(), n, "structure_constants_of_pairs");
    sum += structure_constants_of_map(p.map(), p.eigenvector());
  }
  return sum;
}

Covector TrilinearDefect::at(std::size_t i, std::size_t j, std::size_t k) const {
  Covector zero(dim_);
  if (i >= dim_ || j >= dim_ || k >= dim_) throw InvalidArgument("defect index out of range");
  const int sign = permutation_sign({i, j, k});
  if (sign == 0) return zero;
  std::array<std::size_t, 3> sorted{i, j, k};
  std::sort(sorted.begin(), sorted.end());
  auto it = values_.find(sorted);
  if (it == values_.end()) return zero;
  return sign > 0 ? it->second : -it->second;
}

void TrilinearDefect::set(const Triple& sorted, Covector value) {
  if (!(sorted[0] < sorted[1] && sorted[1] < sorted[2]) || sorted[2] >= dim_) {
    throw InvalidArgument("defect triple must be strictly increasing and in range");
  }
  if (value.is_zero()) {
    values_.erase(sorted);
  } else {
    values_.insert_or_assign(sorted, std::move(value));
  }
}

TrilinearDefect jacobi_defect_single(const RationalMatrix& F, const RationalVector& v) {
  require_dim(F.dim(), v.dim(), "jacobi_defect_single");
  if (v.is_zero()) throw InvalidArgument("jacobi_defect_single: v must be nonzero");
  const RationalVector Fv = mat_apply(F, v);
  return evaluate_on_triples(F.dim(), [&](const std::array<const Covector*, 3>& x) {
    return alternating3(v, Fv, F, 2, x);
  });
}

AnchorClass classify_anchor(const RationalMatrix& F, const RationalVector& v) {
  if (auto lambda = verify_eigenpair(F, v)) {
    return {AnchorKind::Eigenvector, *lambda, std::nullopt, std::nullopt};
  }
  if (!jacobi_defect_single(F, v).is_zero()) {
    return {AnchorKind::NotLie, std::nullopt, std::nullopt, std::nullopt};
  }
  // v and u = Fv are independent here. Solve F = v rho^T + u eta^T column by
  // column on two rows where the 2x2 system [v u] is invertible.
  const std::size_t n = F.dim();
  const RationalVector u = mat_apply(F, v);
  std::size_t r1 = n;
  std::size_t r2 = n;
  Rational det;
  for (std::size_t a = 0; a < n && r1 == n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      det = v[a] * u[b] - v[b] * u[a];
      if (!det.is_zero()) {
        r1 = a;
        r2 = b;
        break;
      }
    }
  }
  if (r1 == n) throw std::logic_error("classify_anchor: v and Fv unexpectedly dependent");
  Covector rho(n);
  Covector eta(n);
  for (std::size_t c = 0; c < n; ++c) {
    rho[c] = (F(r1, c) * u[r2] - F(r2, c) * u[r1]) / det;
    eta[c] = (v[r1] * F(r2, c) - v[r2] * F(r1, c)) / det;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (F(r, c) != v[r] * rho[c] + u[r] * eta[c]) {
        throw std::logic_error("classify_anchor: zero defect without the degenerate normal form");
      }
    }
  }
  return {AnchorKind::Degenerate, std::nullopt, std::move(rho), std::move(eta)};
}

TrilinearDefect compatibility_defect(const AnchoredPair& p, const AnchoredPair& q) {
  require_dim(p.dim(), q.dim(), "compatibility_defect");
  const RationalMatrix& F = p.map();
  const RationalMatrix& G = q.map();
  const RationalVector& v = p.eigenvector();
  const RationalVector& w = q.eigenvector();
  const RationalMatrix FG = matrix_commutator(F, G);
  const RationalVector Gv = mat_apply(G, v);
  const RationalVector Fw = mat_apply(F, w);
  return evaluate_on_triples(p.dim(), [&](const std::array<const Covector*, 3>& x) {
    Covector total = alternating3(w, v, FG, 1, x);
    total += alternating3(w, Gv, F, 2, x);
    total += alternating3(v, Fw, G, 2, x);
    return total;
  });
}

CommutingConditions commuting_conditions(const AnchoredPair& p, const AnchoredPair& q) {
  require_dim(p.dim(), q.dim(), "commuting_conditions");
  return CommutingConditions{
      matrix_commutator(p.map(), q.map()).is_zero(),
      verify_eigenpair(p.map(), p.eigenvector()).has_value(),
      verify_eigenpair(q.map(), q.eigenvector()).has_value(),
      mat_apply(p.map(), q.eigenvector()).is_zero(),
      mat_apply(q.map(), p.eigenvector()).is_zero(),
  };
}

bool commuting_conditions_hold(const AnchoredPair& p, const AnchoredPair& q) {
  return commuting_conditions(p, q).all();
}

bool isomorphism_witness_check(const AnchoredPair& p, const AnchoredPair& q, const RationalMatrix& Phi) {
  require_dim(p.dim(), q.dim(), "isomorphism_witness_check");
  require_dim(p.dim(), Phi.dim(), "isomorphism_witness_check");
  if (Phi.determinant().is_zero()) throw InvalidArgument("isomorphism witness must be invertible");
  const std::size_t n = p.dim();
  const RationalVector Phi_v = mat_apply(Phi, p.eigenvector());
  const RationalMatrix PhiF = Phi * p.map();
  const RationalMatrix GPhi = q.map() * Phi;
  // (iota_a ^ M*)(x, y) = x(a) M*(y) - y(a) M*(x).
  auto wedge2 = [](const RationalVector& a, const RationalMatrix& M, const Covector& x, const Covector& y) {
    return pair(x, a) * dual_apply(M, y) - pair(y, a) * dual_apply(M, x);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Covector ei = basis_covector(n, i);
      const Covector ej = basis_covector(n, j);
      if (wedge2(Phi_v, PhiF, ei, ej) != wedge2(q.eigenvector(), GPhi, ei, ej)) return false;
    }
  }
  return true;
}

}  // namespace lieforge
