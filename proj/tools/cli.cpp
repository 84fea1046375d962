#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "lieforge/casimir.hpp"
#include "lieforge/errors.hpp"

namespace lieforge::cli {

namespace {

/// Raised for bad command-line values; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Io& io) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << io.in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw DocumentError(path + ": cannot open file");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void emit(const Json& j, Io& io) { io.out << j.dump(2) << '\n'; }

Json triple_json(const std::array<std::size_t, 3>& t) { return Json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

Json defect_json(const TrilinearDefect& d) {
  Json list = Json::array();
  for (const auto& [triple, value] : d.values()) {
    list.push_back({{"triple", triple_json(triple)}, {"value", covector_json(value)}});
  }
  return list;
}

const char* kind_name(AnchorKind k) {
  switch (k) {
    case AnchorKind::Eigenvector:
      return "eigenvector";
    case AnchorKind::Degenerate:
      return "degenerate";
    case AnchorKind::NotLie:
      return "not_lie";
  }
  return "unknown";
}

int cmd_check(const std::string& path, Io& io) {
  const AlgebraDocument doc = parse_document(read_input(path, io));
  const StructureConstants sc = doc.constants();
  const auto violations = jacobi_check(sc);
  bool pass = violations.empty();

  Json report;
  report["dim"] = doc.dim;
  Json jv = Json::array();
  for (const auto& v : violations) jv.push_back({{"triple", triple_json(v.triple)}, {"residual", covector_json(v.residual)}});
  report["jacobi"] = {{"ok", violations.empty()}, {"violations", std::move(jv)}};

  Json pairs = Json::array();
  for (std::size_t i = 0; i < doc.pairs.size(); ++i) {
    const RawPair& p = doc.pairs[i];
    const auto actual = verify_eigenpair(p.matrix, p.eigenvector);
    const bool eigen_ok = actual && *actual == p.eigenvalue;
    const AnchorClass cls = classify_anchor(p.matrix, p.eigenvector);
    const TrilinearDefect defect = jacobi_defect_single(p.matrix, p.eigenvector);
    Json pj;
    pj["index"] = i + 1;
    pj["eigenpair_ok"] = eigen_ok;
    if (actual) pj["actual_eigenvalue"] = rational_json(*actual);
    pj["anchor_class"] = kind_name(cls.kind);
    pj["defect_zero"] = defect.is_zero();
    pj["defect"] = defect_json(defect);
    pairs.push_back(std::move(pj));
    if (!eigen_ok) {
      pass = false;
      io.err << "pair " << i + 1 << ": F v != " << p.eigenvalue << " v\n";
    }
  }
  if (!doc.pairs.empty()) report["pairs"] = std::move(pairs);
  report["pass"] = pass;
  emit(report, io);
  io.err << "jacobi: " << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violated triple(s)")
         << "\n";
  for (const auto& v : violations) {
    io.err << "  (" << v.triple[0] + 1 << "," << v.triple[1] + 1 << "," << v.triple[2] + 1
           << ") residual " << v.residual << "\n";
  }
  io.err << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kPass : kCheckFailed;
}

Json dims_json(const std::vector<Subspace>& series) {
  Json list = Json::array();
  for (const auto& s : series) list.push_back(s.dim());
  return list;
}

int cmd_series(const std::string& path, Io& io) {
  const AlgebraDocument doc = parse_document(read_input(path, io));
  const StructureConstants sc = doc.constants();
  if (!jacobi_check(sc).empty()) {
    io.err << "not a Lie algebra: the Jacobi identity fails (run `check` for details)\n";
    emit(Json{{"lie", false}}, io);
    return kCheckFailed;
  }
  const auto derived = derived_series(sc);
  const auto lower = lower_central_series(sc);
  const bool solvable = derived.back().is_zero();
  const bool nilpotent = lower.back().is_zero();
  Json report;
  report["lie"] = true;
  report["derived_series"] = dims_json(derived);
  report["lower_central_series"] = dims_json(lower);
  report["solvable"] = solvable;
  report["nilpotent"] = nilpotent;
  emit(report, io);
  io.err << "derived series dims " << report["derived_series"].dump() << ", lower central series dims "
         << report["lower_central_series"].dump() << "\n"
         << (solvable ? "solvable" : "not solvable") << ", " << (nilpotent ? "nilpotent" : "not nilpotent") << "\n";
  return kPass;
}

int cmd_decompose(const std::string& path, bool verify, Io& io) {
  const AlgebraDocument doc = parse_document(read_input(path, io));
  const StructureConstants sc = doc.constants();
  if (!jacobi_check(sc).empty()) {
    io.err << "not a Lie algebra: the Jacobi identity fails (run `check` for details)\n";
    return kCheckFailed;
  }
  const Decomposition d = decompose(sc);
  AlgebraDocument result = document_from_pairs(d.pairs);
  result.casimirs = doc.casimirs;
  result.integrating_factor = doc.integrating_factor;
  emit(to_json(result), io);
  io.err << "decomposed into " << d.pairs.size() << " anchored pair(s)\n";
  if (verify) {
    const bool ok = reconstruct(d) == sc;
    io.err << "round trip: " << (ok ? "exact" : "MISMATCH") << "\n";
    return ok ? kPass : kCheckFailed;
  }
  return kPass;
}

std::pair<double, double> parse_box(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--box expects lo,hi");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--box: malformed lower bound");
    const std::string hi_text = text.substr(comma + 1);
    const double hi = std::stod(hi_text, &used);
    if (used != hi_text.size()) throw UsageError("--box: malformed upper bound");
    if (!(lo < hi)) throw UsageError("--box needs lo < hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--box expects two numbers lo,hi");
  }
}

int cmd_casimir(const std::string& path, const SampleConfig& config, Io& io) {
  const AlgebraDocument doc = parse_document(read_input(path, io));
  if (doc.casimirs.empty()) throw DocumentError("casimirs: the document lists no Casimir candidates");
  const StructureConstants sc = doc.constants();
  bool pass = true;
  Json reports = Json::array();
  for (const auto& text : doc.casimirs) {
    const CasimirReport r = verify_casimir(sc, parse_expr(text, doc.dim), config);
    Json rj;
    rj["candidate"] = text;
    rj["samples"] = r.samples;
    rj["resampled"] = r.resampled;
    rj["tolerance"] = r.tolerance;
    rj["max_abs_residual"] = r.max_abs_residual;
    rj["max_scaled_residual"] = r.max_scaled_residual;
    rj["generator_residuals"] = r.generator_residuals;
    rj["pass"] = r.pass;
    if (r.failure) rj["failure"] = *r.failure;
    reports.push_back(std::move(rj));
    pass = pass && r.pass;
    io.err << text << ": " << (r.pass ? "pass" : "FAIL") << " (max residual " << r.max_abs_residual << ")\n";
  }
  Json report;
  report["seed"] = config.seed;
  report["box"] = {config.lo, config.hi};
  report["casimirs"] = std::move(reports);
  if (doc.integrating_factor) {
    if (doc.dim == 3 && doc.has_pairs()) {
      const auto pairs = doc.anchored_pairs();
      const IntegratingFactorReport r = verify_integrating_factor(
          pairs, parse_expr(doc.casimirs.front(), 3), parse_expr(*doc.integrating_factor, 3), config);
      Json rj;
      rj["factor"] = *doc.integrating_factor;
      rj["casimir"] = doc.casimirs.front();
      rj["samples"] = r.samples;
      rj["max_abs_residual"] = r.max_abs_residual;
      rj["max_scaled_residual"] = r.max_scaled_residual;
      rj["pass"] = r.pass;
      if (r.failure) rj["failure"] = *r.failure;
      report["integrating_factor"] = std::move(rj);
      pass = pass && r.pass;
      io.err << "integrating factor " << *doc.integrating_factor << ": " << (r.pass ? "pass" : "FAIL")
             << " (max residual " << r.max_abs_residual << ")\n";
    } else {
      io.err << "integrating factor skipped: needs a three-dimensional pairs document\n";
    }
  }
  report["pass"] = pass;
  emit(report, io);
  return pass ? kPass : kCheckFailed;
}

int cmd_compat(const std::string& path, Io& io) {
  const AlgebraDocument doc = parse_document(read_input(path, io));
  if (!doc.has_pairs()) throw DocumentError("pairs: compat needs a pairs document");
  const auto pairs = doc.anchored_pairs();
  bool pass = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const TrilinearDefect defect = compatibility_defect(pairs[i], pairs[j]);
      const CommutingConditions cond = commuting_conditions(pairs[i], pairs[j]);
      Json pj;
      pj["pairs"] = {i + 1, j + 1};
      pj["defect_zero"] = defect.is_zero();
      pj["defect"] = defect_json(defect);
      pj["commuting_conditions"] = {{"maps_commute", cond.maps_commute},
                                    {"first_anchored", cond.p_anchored},
                                    {"second_anchored", cond.q_anchored},
                                    {"first_map_kills_second_vector", cond.p_map_kills_q_vector},
                                    {"second_map_kills_first_vector", cond.q_map_kills_p_vector},
                                    {"all", cond.all()}};
      list.push_back(std::move(pj));
      pass = pass && defect.is_zero();
      io.err << "pairs " << i + 1 << "," << j + 1 << ": defect " << (defect.is_zero() ? "zero" : "NONZERO")
             << ", commuting conditions " << (cond.all() ? "hold" : "do not all hold") << "\n";
    }
  }
  if (pairs.size() < 2) io.err << "single pair: nothing to compare\n";
  Json report;
  report["comparisons"] = std::move(list);
  report["pass"] = pass;
  emit(report, io);
  return pass ? kPass : kCheckFailed;
}

int cmd_catalog_list(Io& io) {
  Json list = Json::array();
  for (const auto& n : list_catalog()) {
    list.push_back({{"name", n.name}, {"dim", n.dim}, {"parameters", n.parameters}});
    io.err << n.name;
    if (n.arity()) {
      io.err << " [";
      for (std::size_t i = 0; i < n.parameters.size(); ++i) io.err << (i ? "," : "") << n.parameters[i];
      io.err << "]";
    }
    io.err << "\n";
  }
  emit(list, io);
  return kPass;
}

int cmd_catalog_show(const std::string& name, const std::vector<std::string>& params, Io& io) {
  Parameters values;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + p + "'");
    const std::string key = p.substr(0, eq);
    try {
      values[key] = Rational::parse(p.substr(eq + 1));
    } catch (const Error& e) {
      throw UsageError("--param " + key + ": " + e.what());
    }
  }
  CatalogEntry entry = [&] {
    try {
      return lookup(name, values);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  emit(to_json(document_from_entry(entry)), io);
  io.err << entry.name << ": " << entry.pairs.size() << " pair(s), " << entry.casimirs.size() << " Casimir(s)\n";
  return kPass;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("LIE_FORGE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw UsageError("LIE_FORGE_SEED must be a non-negative integer");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("LIE_FORGE_SEED must be a non-negative integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Lie algebras from linear maps and their eigenvectors", "lie-forge"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string file;
  bool verify = false;
  SampleConfig config;
  std::string box;
  std::string entry_name;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "Jacobi identity, eigenpairs and per-pair defects");
  check->add_option("file", file, "algebra document, '-' for stdin")->required();
  check->callback([&] { action = [&] { return cmd_check(file, io); }; });

  auto* series = app.add_subcommand("series", "derived and lower central series");
  series->add_option("file", file, "algebra document, '-' for stdin")->required();
  series->callback([&] { action = [&] { return cmd_series(file, io); }; });

  auto* dec = app.add_subcommand("decompose", "anchored pairs reproducing the structure constants");
  dec->add_option("file", file, "algebra document, '-' for stdin")->required();
  dec->add_flag("--verify", verify, "reconstruct and compare exactly");
  dec->callback([&] { action = [&] { return cmd_decompose(file, verify, io); }; });

  auto* cas = app.add_subcommand("casimir", "verify the listed Casimir functions");
  cas->add_option("file", file, "algebra document, '-' for stdin")->required();
  cas->add_option("--samples", config.samples, "number of sample points")->check(CLI::PositiveNumber);
  cas->add_option("--tol", config.tolerance, "relative tolerance")->check(CLI::NonNegativeNumber);
  auto* seed_opt = cas->add_option("--seed", config.seed, "sampling seed (default $LIE_FORGE_SEED or 0)");
  cas->add_option("--box", box, "sampling box lo,hi (default 0.5,2)");
  cas->callback([&] {
    action = [&] {
      if (seed_opt->count() == 0) config.seed = default_seed();
      if (!box.empty()) std::tie(config.lo, config.hi) = parse_box(box);
      return cmd_casimir(file, config, io);
    };
  });

  auto* compat = app.add_subcommand("compat", "pairwise compatibility defects of a pairs document");
  compat->add_option("file", file, "algebra document, '-' for stdin")->required();
  compat->callback([&] { action = [&] { return cmd_compat(file, io); }; });

  auto* catalog = app.add_subcommand("catalog", "built-in three- and four-dimensional algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "names and parameters");
  list->callback([&] { action = [&] { return cmd_catalog_list(io); }; });
  auto* show = catalog->add_subcommand("show", "emit an entry as an algebra document");
  show->add_option("name", entry_name, "entry name, e.g. g3,5")->required();
  show->add_option("--param", params, "parameter value, e.g. a=1/2 (repeatable)");
  show->callback([&] { action = [&] { return cmd_catalog_show(entry_name, params, io); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    return action();
  } catch (const DocumentError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const lieforge::ParseError& e) {
    err << "expression error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace lieforge::cli
