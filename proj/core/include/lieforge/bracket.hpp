#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>

#include "lieforge/algebra.hpp"
#include "lieforge/exact.hpp"

namespace lieforge {

/// A linear map F together with an eigenvector v, F v = lambda v. Every
/// instance satisfies the eigen-relation exactly and has v != 0.
class AnchoredPair {
 public:
  /// Throws InvalidArgument when v = 0 or F v != lambda v, DimensionError on
  /// mismatched sizes.
  AnchoredPair(RationalMatrix F, RationalVector v, Rational lambda);

  /// Computes lambda; throws InvalidArgument when v is not an eigenvector.
  static AnchoredPair from_eigenvector(RationalMatrix F, RationalVector v);

  std::size_t dim() const { return map_.dim(); }
  const RationalMatrix& map() const { return map_; }
  const RationalVector& eigenvector() const { return vector_; }
  const Rational& eigenvalue() const { return lambda_; }

  friend bool operator==(const AnchoredPair&, const AnchoredPair&) = default;

 private:
  RationalMatrix map_;
  RationalVector vector_;
  Rational lambda_;
};

/// [psi, phi]_{F,v} = phi(v) F*(psi) - psi(v) F*(phi).
Covector pair_bracket(const AnchoredPair& p, const Covector& psi, const Covector& phi);

/// The same formula for an arbitrary (F, v); it is a Lie bracket only in the
/// cases that `classify_anchor` recognises.
Covector map_bracket(const RationalMatrix& F, const RationalVector& v, const Covector& psi,
                     const Covector& phi);

/// Structure constants of the summed bracket sum_m [., .]_{F_m, v_m}. Jacobi
/// is not implied for more than one pair; callers validate.
StructureConstants structure_constants_of_pairs(std::span<const AnchoredPair> pairs);

/// Structure constants of `map_bracket` for an arbitrary (F, v).
StructureConstants structure_constants_of_map(const RationalMatrix& F, const RationalVector& v);

/// Covector-valued alternating 3-form, stored by its values on sorted basis
/// triples (e_i*, e_j*, e_k*), i < j < k. Only nonzero values are kept, so a
/// vanishing form is an empty one.
class TrilinearDefect {
 public:
  using Triple = std::array<std::size_t, 3>;

  explicit TrilinearDefect(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return values_.empty(); }
  const std::map<Triple, Covector>& values() const { return values_; }

  /// Value on (e_i*, e_j*, e_k*) for any index order.
  Covector at(std::size_t i, std::size_t j, std::size_t k) const;

  /// Records the value on a sorted triple; zero values are dropped.
  void set(const Triple& sorted, Covector value);

 private:
  std::size_t dim_;
  std::map<Triple, Covector> values_;
};

/// (iota_v ^ iota_{Fv} ^ F*) on every sorted basis triple: the Jacobiator of
/// `map_bracket(F, v, ...)`. Zero exactly when that bracket is a Lie bracket.
TrilinearDefect jacobi_defect_single(const RationalMatrix& F, const RationalVector& v);

enum class AnchorKind {
  Eigenvector,  // F v = lambda v
  Degenerate,   // v not an eigenvector, F* = iota_v (x) rho + iota_{Fv} (x) eta
  NotLie,       // the bracket violates Jacobi
};

struct AnchorClass {
  AnchorKind kind;
  std::optional<Rational> eigenvalue;  // set for Eigenvector
  std::optional<Covector> rho;         // set for Degenerate
  std::optional<Covector> eta;         // set for Degenerate
};

/// Decides which of the three cases an arbitrary (F, v) falls into; in the
/// degenerate case rho and eta are recovered exactly.
AnchorClass classify_anchor(const RationalMatrix& F, const RationalVector& v);

/// iota_w ^ [F,G]* ^ iota_v + iota_w ^ iota_{Gv} ^ F* + iota_v ^ iota_{Fw} ^ G*
/// on every sorted basis triple, for p = (F, v) and q = (G, w). Zero exactly
/// when [., .]_{F,v} + eps [., .]_{G,w} is a Lie bracket for every eps.
TrilinearDefect compatibility_defect(const AnchoredPair& p, const AnchoredPair& q);

/// The five sufficient conditions for compatibility of two anchored pairs.
struct CommutingConditions {
  bool maps_commute;          // [F, G] = 0
  bool p_anchored;            // F v = lambda v
  bool q_anchored;            // G w = gamma w
  bool p_map_kills_q_vector;  // F w = 0
  bool q_map_kills_p_vector;  // G v = 0

  bool all() const {
    return maps_commute && p_anchored && q_anchored && p_map_kills_q_vector && q_map_kills_p_vector;
  }
};

CommutingConditions commuting_conditions(const AnchoredPair& p, const AnchoredPair& q);

/// True iff all five commuting conditions hold.
bool commuting_conditions_hold(const AnchoredPair& p, const AnchoredPair& q);

/// True iff iota_{Phi v} ^ (Phi o F)* = iota_w ^ (G o Phi)* on every pair of
/// basis covectors, which makes Phi* an isomorphism from the (G, w) algebra
/// onto the (F, v) algebra. Throws InvalidArgument when Phi is singular.
bool isomorphism_witness_check(const AnchoredPair& p, const AnchoredPair& q, const RationalMatrix& Phi);

}  // namespace lieforge
