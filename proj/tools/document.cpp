#include "document.hpp"

#include <set>

#include "lieforge/errors.hpp"

namespace lieforge::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw DocumentError(path + ": " + message);
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  fail(path, "expected a rational string such as \"-1/2\"");
}

std::size_t parse_index(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer index");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) fail(path, "index outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

StructureConstants parse_constants(const Json& j, std::size_t dim) {
  StructureConstants sc(dim);
  std::set<std::array<std::size_t, 3>> seen;
  const Json& list = require_array(j, "structure_constants");
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string path = "structure_constants[" + std::to_string(n) + "]";
    const Json& item = list[n];
    if (!item.is_array() || item.size() != 4) fail(path, "expected [i, j, k, \"coefficient\"]");
    const std::size_t i = parse_index(item[0], dim, path + "[0]");
    const std::size_t jj = parse_index(item[1], dim, path + "[1]");
    const std::size_t k = parse_index(item[2], dim, path + "[2]");
    if (i >= jj) fail(path, "entries must have i < j; the mirror is generated");
    if (!seen.insert({i, jj, k}).second) fail(path, "duplicate entry");
    sc.set(i, jj, k, parse_rational(item[3], path + "[3]"));
  }
  return sc;
}

RawPair parse_pair(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "matrix" && key != "eigenvector" && key != "eigenvalue") fail(path + "." + key, "unknown field");
  }
  if (!j.contains("matrix")) fail(path, "missing field 'matrix'");
  if (!j.contains("eigenvector")) fail(path, "missing field 'eigenvector'");
  if (!j.contains("eigenvalue")) fail(path, "missing field 'eigenvalue'");
  const Json& rows = require_array(j["matrix"], path + ".matrix");
  if (rows.size() != dim) fail(path + ".matrix", "expected " + std::to_string(dim) + " rows");
  RationalMatrix F(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string rpath = path + ".matrix[" + std::to_string(r) + "]";
    const Json& row = require_array(rows[r], rpath);
    if (row.size() != dim) fail(rpath, "expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) F(r, c) = parse_rational(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  const Json& vec = require_array(j["eigenvector"], path + ".eigenvector");
  if (vec.size() != dim) fail(path + ".eigenvector", "expected " + std::to_string(dim) + " entries");
  RationalVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = parse_rational(vec[i], path + ".eigenvector[" + std::to_string(i) + "]");
  }
  if (v.is_zero()) fail(path + ".eigenvector", "must be nonzero");
  return RawPair{std::move(F), std::move(v), parse_rational(j["eigenvalue"], path + ".eigenvalue")};
}

Json matrix_json(const RationalMatrix& F) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < F.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < F.dim(); ++c) row.push_back(rational_json(F(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json rational_json(const Rational& r) { return r.to_string(); }

Json covector_json(const Covector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(rational_json(x));
  return out;
}

StructureConstants AlgebraDocument::constants() const {
  if (structure_constants) return *structure_constants;
  StructureConstants sum(dim);
  for (const auto& p : pairs) sum += structure_constants_of_map(p.matrix, p.eigenvector);
  return sum;
}

std::vector<AnchoredPair> AlgebraDocument::anchored_pairs() const {
  std::vector<AnchoredPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      out.emplace_back(pairs[i].matrix, pairs[i].eigenvector, pairs[i].eigenvalue);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("pair " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

AlgebraDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  static const std::set<std::string> known = {"dim",      "structure_constants", "pairs", "casimirs",
                                              "integrating_factor", "name", "notes"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }
  AlgebraDocument doc;
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
    fail("dim", "expected a positive integer");
  }
  doc.dim = j["dim"].get<std::size_t>();
  const bool has_sc = j.contains("structure_constants");
  const bool has_pairs = j.contains("pairs");
  if (has_sc == has_pairs) fail("document", "exactly one of 'structure_constants' and 'pairs' is required");
  if (has_sc) {
    doc.structure_constants = parse_constants(j["structure_constants"], doc.dim);
  } else {
    const Json& list = require_array(j["pairs"], "pairs");
    if (list.empty()) fail("pairs", "at least one pair is required");
    for (std::size_t i = 0; i < list.size(); ++i) {
      doc.pairs.push_back(parse_pair(list[i], doc.dim, "pairs[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("casimirs")) {
    const Json& list = require_array(j["casimirs"], "casimirs");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_string()) fail("casimirs[" + std::to_string(i) + "]", "expected an expression string");
      doc.casimirs.push_back(list[i].get<std::string>());
    }
  }
  if (j.contains("integrating_factor")) {
    if (!j["integrating_factor"].is_string()) fail("integrating_factor", "expected an expression string");
    doc.integrating_factor = j["integrating_factor"].get<std::string>();
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("notes")) {
    const Json& list = require_array(j["notes"], "notes");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_string()) fail("notes[" + std::to_string(i) + "]", "expected a string");
      doc.notes.push_back(list[i].get<std::string>());
    }
  }
  // Expressions are validated up front so a typo is an input error.
  for (std::size_t i = 0; i < doc.casimirs.size(); ++i) {
    try {
      (void)parse_expr(doc.casimirs[i], doc.dim);
    } catch (const ParseError& e) {
      fail("casimirs[" + std::to_string(i) + "]", e.what());
    }
  }
  if (doc.integrating_factor) {
    try {
      (void)parse_expr(*doc.integrating_factor, doc.dim);
    } catch (const ParseError& e) {
      fail("integrating_factor", e.what());
    }
  }
  return doc;
}

Json to_json(const AlgebraDocument& doc) {
  Json j;
  if (doc.name) j["name"] = *doc.name;
  j["dim"] = doc.dim;
  if (doc.structure_constants) {
    Json list = Json::array();
    const auto& sc = *doc.structure_constants;
    for (std::size_t i = 0; i < doc.dim; ++i) {
      for (std::size_t k = i + 1; k < doc.dim; ++k) {
        for (std::size_t m = 0; m < doc.dim; ++m) {
          if (!sc(i, k, m).is_zero()) list.push_back(Json::array({i + 1, k + 1, m + 1, rational_json(sc(i, k, m))}));
        }
      }
    }
    j["structure_constants"] = std::move(list);
  } else {
    Json list = Json::array();
    for (const auto& p : doc.pairs) {
      Json pj;
      pj["matrix"] = matrix_json(p.matrix);
      Json v = Json::array();
      for (const auto& x : p.eigenvector.entries()) v.push_back(rational_json(x));
      pj["eigenvector"] = std::move(v);
      pj["eigenvalue"] = rational_json(p.eigenvalue);
      list.push_back(std::move(pj));
    }
    j["pairs"] = std::move(list);
  }
  if (!doc.casimirs.empty()) j["casimirs"] = doc.casimirs;
  if (doc.integrating_factor) j["integrating_factor"] = *doc.integrating_factor;
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  return j;
}

AlgebraDocument document_from_pairs(const std::vector<AnchoredPair>& pairs) {
  AlgebraDocument doc;
  doc.dim = pairs.front().dim();
  for (const auto& p : pairs) doc.pairs.push_back(RawPair{p.map(), p.eigenvector(), p.eigenvalue()});
  return doc;
}

AlgebraDocument document_from_entry(const CatalogEntry& entry) {
  AlgebraDocument doc = document_from_pairs(entry.pairs);
  std::string name = entry.name;
  if (!entry.parameters.empty()) {
    name += " (";
    bool first = true;
    for (const auto& [key, value] : entry.parameters) {
      name += (first ? "" : ", ") + key + "=" + value.to_string();
      first = false;
    }
    name += ")";
  }
  doc.name = name;
  for (const auto& c : entry.casimirs) doc.casimirs.push_back(c.to_string());
  if (entry.integrating_factor) doc.integrating_factor = entry.integrating_factor->to_string();
  doc.notes = entry.notes;
  return doc;
}

}  // namespace lieforge::cli
