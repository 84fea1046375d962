#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/algebra.hpp"
#include "lieforge/bracket.hpp"
#include "lieforge/expr.hpp"

namespace lieforge {

using Parameters = std::map<std::string, Rational>;

/// Low-dimensional real Lie algebra realised by one or two anchored pairs.
struct CatalogEntry {
  std::string name;
  Parameters parameters;
  std::vector<AnchoredPair> pairs;
  /// Transcribed independently of `pairs`, so the two can be checked against
  /// each other.
  StructureConstants commutators;
  std::vector<Expr> casimirs;
  std::optional<Expr> integrating_factor;
  /// Provenance of corrected or relabelled data.
  std::vector<std::string> notes;
};

struct CatalogName {
  std::string name;
  std::vector<std::string> parameters;
  std::size_t dim;

  std::size_t arity() const { return parameters.size(); }
};

/// The 9 three-dimensional and 12 four-dimensional entries, in order.
std::vector<CatalogName> list_catalog();

/// Instantiates an entry. Throws InvalidArgument for an unknown name or a
/// missing or unexpected parameter.
CatalogEntry lookup(std::string_view name, const Parameters& params = {});

}  // namespace lieforge
