#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieforge/algebra.hpp"
#include "lieforge/bracket.hpp"
#include "lieforge/catalog.hpp"
#include "lieforge/decompose.hpp"

namespace lieforge::cli {

using Json = nlohmann::ordered_json;

/// Malformed input document; maps to exit code 2.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pair as written in a document. The eigen-relation is not enforced on
/// load so that `check` can report it.
struct RawPair {
  RationalMatrix matrix;
  RationalVector eigenvector;
  Rational eigenvalue;
};

/// {dim, structure_constants | pairs, casimirs?, integrating_factor?} plus
/// the optional descriptive fields name and notes.
struct AlgebraDocument {
  std::size_t dim = 0;
  std::optional<StructureConstants> structure_constants;
  std::vector<RawPair> pairs;
  std::vector<std::string> casimirs;
  std::optional<std::string> integrating_factor;
  std::optional<std::string> name;
  std::vector<std::string> notes;

  bool has_pairs() const { return !structure_constants.has_value(); }

  /// The stored tensor, or the summed pair brackets (defined for any F, v).
  StructureConstants constants() const;

  /// Validated pairs; throws InvalidArgument when an eigen-relation fails.
  std::vector<AnchoredPair> anchored_pairs() const;
};

/// Parses document text; throws DocumentError with the line/column or the
/// offending field path.
AlgebraDocument parse_document(const std::string& text);

Json to_json(const AlgebraDocument& doc);

AlgebraDocument document_from_pairs(const std::vector<AnchoredPair>& pairs);
AlgebraDocument document_from_entry(const CatalogEntry& entry);

Json rational_json(const Rational& r);
Json covector_json(const Covector& v);

}  // namespace lieforge::cli
