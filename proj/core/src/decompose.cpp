#include "lieforge/decompose.hpp"

namespace lieforge {

Decomposition decompose(const StructureConstants& sc, const DecomposeOptions& options) {
  if (!options.allow_non_jacobi) require_lie(sc);
  const std::size_t n = sc.dim();
  std::vector<AnchoredPair> pairs;
  pairs.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t anchor = n - 1 - step;
    RationalMatrix F(n);
    for (std::size_t i = 0; i < anchor; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != anchor) F(i, k) = sc(i, anchor, k);
      }
    }
    for (std::size_t m = anchor + 1; m < n; ++m) F(m, m) = -sc(anchor, m, m);
    pairs.emplace_back(std::move(F), RationalVector::basis(n, anchor), Rational(0));
  }
  return Decomposition{std::move(pairs), sc};
}

StructureConstants reconstruct(const Decomposition& d) { return structure_constants_of_pairs(d.pairs); }

}  // namespace lieforge
