#include "lieforge/catalog.hpp"

#include <algorithm>

#include "lieforge/errors.hpp"

namespace lieforge {

namespace {

// Matrix entries, commutator coefficients and expressions are stored as
// expression text with {a}, {b} placeholders for the parameters.
struct PairTemplate {
  std::vector<std::vector<std::string>> matrix;
  std::size_t anchor;  // 1-based basis index of the eigenvector
};

struct CommutatorTemplate {
  std::size_t i, j, k;  // [e_i*, e_j*] has coefficient on e_k* (1-based)
  std::string coefficient;
};

struct EntryTemplate {
  std::string name;
  std::vector<std::string> parameters;
  std::size_t dim;
  std::vector<PairTemplate> pairs;
  std::vector<CommutatorTemplate> commutators;
  std::vector<std::string> casimirs;
  std::optional<std::string> integrating_factor;
  std::vector<std::string> notes;
};

using Rows = std::vector<std::vector<std::string>>;

const Rows kG4 = {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}};

const std::vector<EntryTemplate>& templates() {
  static const std::vector<EntryTemplate> all = {
      {"g3,1", {}, 3,
       {{{{"0", "0", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}, 3}},
       {{2, 3, 1, "1"}},
       {"x1"}, "1/x1", {}},
      {"g3,2", {}, 3,
       {{{{"1", "0", "0"}, {"1", "1", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 1, "1"}, {2, 3, 1, "1"}, {2, 3, 2, "1"}},
       {"x1*exp(-x2/x1)"}, "exp(-x2/x1)/x1", {}},
      {"g3,3", {}, 3,
       {{{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 1, "1"}, {2, 3, 2, "1"}},
       {"x2/x1"}, "-1/x1^2",
       {"the worked example accompanying the published table states l = 1/x1^2; the tabulated "
        "-1/x1^2 is the sign satisfying grad c = l (F(x) x v) and is stored"}},
      {"g3,4", {}, 3,
       {{{{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 1, "1"}, {2, 3, 2, "-1"}},
       {"x1*x2"}, "-1", {}},
      {"g3,5", {"a"}, 3,
       {{{{"1", "0", "0"}, {"0", "{a}", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 1, "1"}, {2, 3, 2, "{a}"}},
       {"x2/x1^{a}"}, "-1/x1^({a}+1)",
       {"the published table prints the Casimir as x1/x1^a; the commutators force x2/x1^a, "
        "which is stored"}},
      {"g3,6", {}, 3,
       {{{{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 2, "-1"}, {2, 3, 1, "1"}},
       {"x1^2+x2^2"}, "2", {}},
      {"g3,7", {"a"}, 3,
       {{{{"{a}", "-1", "0"}, {"1", "{a}", "0"}, {"0", "0", "0"}}, 3}},
       {{1, 3, 1, "{a}"}, {1, 3, 2, "-1"}, {2, 3, 1, "1"}, {2, 3, 2, "{a}"}},
       {"(x1^2+x2^2)*exp(2*{a}*arctg(x1/x2))"}, "2*exp(2*{a}*arctg(x1/x2))", {}},
      {"g3,8", {}, 3,
       {{{{"0", "-2", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}, 3},
        {{{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"}}, 2}},
       {{1, 2, 1, "1"}, {1, 3, 2, "-2"}, {2, 3, 3, "1"}},
       {"x1*x3+x2^2"}, "1", {}},
      {"g3,9", {}, 3,
       {{{{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}, 3},
        {{{"0", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}}, 2}},
       {{1, 2, 3, "1"}, {1, 3, 2, "-1"}, {2, 3, 1, "1"}},
       {"x1^2+x2^2+x3^2"}, "2", {}},

      {"g4,1", {}, 4,
       {{{{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{2, 4, 1, "1"}, {3, 4, 2, "1"}},
       {}, std::nullopt, {}},
      {"g4,2", {"a"}, 4,
       {{{{"{a}", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{1, 4, 1, "{a}"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
       {}, std::nullopt, {}},
      {"g4,3", {}, 4,
       {{{{"1", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{1, 4, 1, "1"}, {3, 4, 2, "1"}},
       {}, std::nullopt, {}},
      {"g4,4", {}, 4,
       {{{{"1", "0", "0", "0"}, {"1", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{1, 4, 1, "1"}, {2, 4, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
       {}, std::nullopt, {}},
      {"g4,5", {"a", "b"}, 4,
       {{{{"1", "0", "0", "0"}, {"0", "{a}", "0", "0"}, {"0", "0", "{b}", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{1, 4, 1, "1"}, {2, 4, 2, "{a}"}, {3, 4, 3, "{b}"}},
       {}, std::nullopt, {}},
      {"g4,6", {"a", "b"}, 4,
       {{{{"{a}", "0", "0", "0"}, {"0", "{b}", "-1", "0"}, {"0", "1", "{b}", "0"}, {"0", "0", "0", "0"}}, 4}},
       {{1, 4, 1, "{a}"}, {2, 4, 2, "{b}"}, {2, 4, 3, "-1"}, {3, 4, 2, "1"}, {3, 4, 3, "{b}"}},
       {}, std::nullopt, {}},
      {"g4,7", {}, 4,
       {{{{"2", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "0", "0", "0"}}, 4}, {kG4, 3}},
       {{2, 3, 1, "1"}, {1, 4, 1, "2"}, {2, 4, 2, "1"}, {3, 4, 2, "1"}, {3, 4, 3, "1"}},
       {}, std::nullopt,
       {"the published commutator list gives [e1*, e4*] = 2 e3*; the pairs give 2 e1*, which is stored"}},
      {"g4,8", {}, 4,
       {{{{"0", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "0"}}, 4}, {kG4, 3}},
       {{2, 3, 1, "1"}, {2, 4, 2, "1"}, {3, 4, 3, "-1"}},
       {}, std::nullopt, {}},
      {"g4,9", {"b"}, 4,
       {{{{"1+{b}", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "{b}", "0"}, {"0", "0", "0", "0"}}, 4},
        {kG4, 3}},
       {{2, 3, 1, "1"}, {1, 4, 1, "1+{b}"}, {2, 4, 2, "1"}, {3, 4, 3, "{b}"}},
       {}, std::nullopt, {}},
      {"g4,10", {}, 4,
       {{{{"0", "0", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "0"}}, 4}, {kG4, 3}},
       {{2, 3, 1, "1"}, {2, 4, 3, "-1"}, {3, 4, 2, "1"}},
       {}, std::nullopt, {}},
      {"g4,11", {"a"}, 4,
       {{{{"2*{a}", "0", "0", "0"}, {"0", "{a}", "-1", "0"}, {"0", "1", "{a}", "0"}, {"0", "0", "0", "0"}}, 4},
        {kG4, 3}},
       {{2, 3, 1, "1"}, {1, 4, 1, "2*{a}"}, {2, 4, 2, "{a}"}, {2, 4, 3, "-1"}, {3, 4, 2, "1"}, {3, 4, 3, "{a}"}},
       {}, std::nullopt,
       {"labelled without its parameter in the published table; stored with parameter a"}},
      {"g4,12", {}, 4,
       {{{{"0", "-1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}, 4},
        {{{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}, 3}},
       {{1, 3, 1, "1"}, {2, 3, 2, "1"}, {1, 4, 2, "-1"}, {2, 4, 1, "1"}},
       {}, std::nullopt, {}},
  };
  return all;
}

std::string substitute(const std::string& text, const Parameters& params) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '{') {
      out += text[i];
      continue;
    }
    const std::size_t close = text.find('}', i);
    const std::string key = text.substr(i + 1, close - i - 1);
    out += '(' + params.at(key).to_string() + ')';
    i = close;
  }
  return out;
}

Rational constant(const std::string& text, const Parameters& params) {
  auto value = fold_constant(parse_expr(substitute(text, params), 1));
  if (!value) throw std::logic_error("catalog coefficient '" + text + "' is not a rational constant");
  return *value;
}

}  // namespace

std::vector<CatalogName> list_catalog() {
  std::vector<CatalogName> out;
  for (const auto& t : templates()) out.push_back({t.name, t.parameters, t.dim});
  return out;
}

CatalogEntry lookup(std::string_view name, const Parameters& params) {
  const auto& all = templates();
  auto it = std::find_if(all.begin(), all.end(), [&](const EntryTemplate& t) { return t.name == name; });
  if (it == all.end()) throw InvalidArgument("unknown catalog entry '" + std::string(name) + "'");
  const EntryTemplate& t = *it;
  for (const auto& p : t.parameters) {
    if (!params.contains(p)) throw InvalidArgument(t.name + " needs parameter '" + p + "'");
  }
  for (const auto& [key, value] : params) {
    if (std::find(t.parameters.begin(), t.parameters.end(), key) == t.parameters.end()) {
      throw InvalidArgument(t.name + " has no parameter '" + key + "'");
    }
  }

  const std::size_t n = t.dim;
  CatalogEntry entry{t.name, params, {}, StructureConstants(n), {}, std::nullopt, t.notes};
  for (const auto& pt : t.pairs) {
    RationalMatrix F(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) F(r, c) = constant(pt.matrix[r][c], params);
    }
    entry.pairs.push_back(AnchoredPair::from_eigenvector(std::move(F), RationalVector::basis(n, pt.anchor - 1)));
  }
  for (const auto& c : t.commutators) {
    entry.commutators.set(c.i - 1, c.j - 1, c.k - 1, constant(c.coefficient, params));
  }
  for (const auto& c : t.casimirs) entry.casimirs.push_back(parse_expr(substitute(c, params), n));
  if (t.integrating_factor) entry.integrating_factor = parse_expr(substitute(*t.integrating_factor, params), n);
  return entry;
}

}  // namespace lieforge
