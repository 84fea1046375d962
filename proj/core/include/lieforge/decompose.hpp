#pragma once

#include <vector>

#include "lieforge/algebra.hpp"
#include "lieforge/bracket.hpp"

namespace lieforge {

/// n anchored pairs whose summed bracket reproduces `source`. Pair m (0-based)
/// is anchored at e_{n-1-m} with eigenvalue 0.
struct Decomposition {
  std::vector<AnchoredPair> pairs;
  StructureConstants source;
};

struct DecomposeOptions {
  /// Emit the templates for any antisymmetric tensor instead of rejecting
  /// tensors that fail Jacobi.
  bool allow_non_jacobi = false;
};

/// Assigns to each basis index j the map F_j anchored at e_j with
///   rows i < j:  F(i, k) = c_ij^k for every k != j (anchor column zero),
///   rows m > j:  F(m, m) = -c_jm^m,
/// and zero elsewhere. The pair anchored at e_j supplies [e_i*, e_j*] for
/// i < j except its e_j* component, which the pair anchored at e_i supplies
/// through its diagonal. Throws NotLieAlgebra for non-Jacobi input unless
/// `options.allow_non_jacobi`.
Decomposition decompose(const StructureConstants& sc, const DecomposeOptions& options = {});

/// Structure constants of the summed bracket of the decomposition's pairs.
StructureConstants reconstruct(const Decomposition& d);

}  // namespace lieforge
