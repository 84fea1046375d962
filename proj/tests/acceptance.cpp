// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "lieforge/casimir.hpp"
#include "lieforge/catalog.hpp"
#include "lieforge/decompose.hpp"
#include "support/expressions.hpp"

namespace {

using namespace lieforge;
using namespace lieforge::testing;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

std::vector<AnchoredPair> random_pairs(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AnchoredPair> out;
  for (int t = 0; t < 200; ++t) out.push_back(random_pair(rng, uniform_index(rng, 2, 6)));
  return out;
}

StructureConstants single(const AnchoredPair& p) { return structure_constants_of_pairs(std::span(&p, 1)); }

Outcome jacobi_of_random_pairs() {
  Outcome o;
  for (const auto& p : random_pairs(1001)) {
    if (!jacobi_check(single(p)).empty()) o.fail("violation at dim " + std::to_string(p.dim()));
  }
  return o;
}

Outcome second_derived_algebra_vanishes() {
  Outcome o;
  for (const auto& p : random_pairs(1001)) {
    const StructureConstants sc = single(p);
    const auto series = derived_series(sc);
    if (series.size() > 3 || !series.back().is_zero()) o.fail("derived series does not reach 0 in two steps");
    const Subspace d1 = bracket_product(sc, Subspace::full(sc.dim()), Subspace::full(sc.dim()));
    if (!bracket_product(sc, d1, d1).is_zero()) o.fail("second derived algebra nonzero");
  }
  return o;
}

Outcome nilpotent_pairs() {
  Outcome o;
  Rng rng(1003);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = uniform_index(rng, 2, 6);
    const StructureConstants sc = single(random_nilpotent_pair(rng, n));
    const auto series = lower_central_series(sc);
    if (!series.back().is_zero() || series.size() - 1 > n) o.fail("lower central series does not reach 0");
  }
  return o;
}

Outcome commuting_couples() {
  Outcome o;
  Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    const bool nilpotent = t % 2 == 0;
    const auto [p, q] = random_commuting_couple(rng, uniform_index(rng, 2, 6), nilpotent);
    if (!commuting_conditions_hold(p, q)) o.fail("generator broke the commuting conditions");
    if (!compatibility_defect(p, q).is_zero()) o.fail("nonzero compatibility defect");
    const std::vector<AnchoredPair> pq{p, q};
    const StructureConstants sum = structure_constants_of_pairs(pq);
    if (!jacobi_check(sum).empty()) o.fail("summed bracket violates Jacobi");
    if (nilpotent && !is_nilpotent(sum)) o.fail("sum of nilpotent pairs not nilpotent");
  }
  return o;
}

Outcome catalog_regression() {
  Outcome o;
  for (const auto& e : all_catalog_instances()) {
    if (structure_constants_of_pairs(e.pairs) != e.commutators) o.fail(e.name + " commutators differ");
  }
  return o;
}

Outcome decompose_round_trip() {
  Outcome o;
  for (const auto& e : all_catalog_instances()) {
    if (reconstruct(decompose(e.commutators)) != e.commutators) o.fail(e.name + " does not round-trip");
  }
  Rng rng(1006);
  for (int t = 0; t < 500; ++t) {
    const StructureConstants sc = random_jacobi_tensor(rng, uniform_index(rng, 2, 5));
    if (reconstruct(decompose(sc)) != sc) o.fail("random tensor does not round-trip");
  }
  return o;
}

Outcome g38_cross_validation() {
  Outcome o;
  const CatalogEntry e = lookup("g3,8");
  const Decomposition d = decompose(e.commutators);
  if (d.pairs.size() != 3) return o.fail("expected three pairs"), o;
  if (d.pairs[0] != e.pairs[0]) o.fail("first pair differs from the catalog F");
  if (d.pairs[1] != e.pairs[1]) o.fail("second pair differs from the catalog G");
  if (!d.pairs[2].map().is_zero()) o.fail("third pair is not zero");
  return o;
}

Outcome casimir_suite() {
  Outcome o;
  for (const auto& e : all_catalog_instances()) {
    for (const Expr& c : e.casimirs) {
      const CasimirReport r = verify_casimir(e.commutators, c);
      if (r.samples != 100 || !r.pass) o.fail(e.name + " Casimir " + c.to_string());
    }
    if (e.commutators.dim() == 3 && e.integrating_factor) {
      if (!verify_integrating_factor(e.pairs, e.casimirs.front(), *e.integrating_factor).pass) {
        o.fail(e.name + " integrating factor");
      }
    }
  }
  return o;
}

Outcome hodge_matches_lie_poisson() {
  Outcome o;
  Rng rng(1009);
  for (const auto& e : all_catalog_instances()) {
    const std::size_t n = e.commutators.dim();
    const StructureConstants sc = structure_constants_of_pairs(e.pairs);
    for (int s = 0; s < 50; ++s) {
      const Point p = random_point(rng, n);
      const bool coords = s % 2 == 0;
      const Expr f = coords ? Expr::variable(uniform_index(rng, 0, n - 1)) : random_quadratic(rng, n);
      const Expr g = coords ? Expr::variable(uniform_index(rng, 0, n - 1)) : random_quadratic(rng, n);
      if (!close(hodge_poisson_bracket(e.pairs, f, g, p), lie_poisson_bracket(sc, f, g, p), 1e-9)) {
        o.fail(e.name + " disagrees at " + p.to_string());
      }
    }
  }
  return o;
}

Outcome nambu_consistency() {
  Outcome o;
  Rng rng(1010);
  for (const auto& e : all_catalog_instances()) {
    if (e.commutators.dim() != 3 || !e.integrating_factor) continue;
    for (int s = 0; s < 20; ++s) {
      const Point p = random_point(rng, 3);
      const Expr f = random_quadratic(rng, 3);
      const Expr g = random_quadratic(rng, 3);
      const double lhs = eval(*e.integrating_factor, p) * hodge_poisson_bracket(e.pairs, f, g, p);
      if (!close(lhs, nambu3(f, g, e.casimirs.front(), p), 1e-7)) o.fail(e.name + " at " + p.to_string());
    }
  }
  for (int s = 0; s < 20; ++s) {
    const Point p = random_point(rng, 3, -2.0, 2.0);
    const Expr f1 = random_quadratic(rng, 3);
    const Expr f2 = random_quadratic(rng, 3);
    const Expr g1 = random_quadratic(rng, 3);
    const Expr g2 = random_quadratic(rng, 3);
    const Expr g3 = random_quadratic(rng, 3);
    const double lhs = nambu3(f1, f2, nambu_expr(g1, g2, g3), p);
    const double rhs = nambu3(nambu_expr(f1, f2, g1), g2, g3, p) + nambu3(g1, nambu_expr(f1, f2, g2), g3, p) +
                       nambu3(g1, g2, nambu_expr(f1, f2, g3), p);
    if (!close(lhs, rhs, 1e-7)) o.fail("fundamental identity at " + p.to_string());
    const double leibniz = nambu3(f1 * g2, f2, g1, p);
    const double expanded = eval(f1, p) * nambu3(g2, f2, g1, p) + eval(g2, p) * nambu3(f1, f2, g1, p);
    if (!close(leibniz, expanded, 1e-7)) o.fail("Leibniz rule at " + p.to_string());
  }
  return o;
}

Outcome gradient_oracle() {
  Outcome o;
  Rng rng(1011);
  for (const Expr& e : catalog_expressions()) {
    const std::size_t n = std::max<std::size_t>(e.arity(), 1);
    for (int s = 0; s < 50; ++s) {
      const Point p = random_point(rng, n);
      const std::vector<double> x(p.coordinates().begin(), p.coordinates().end());
      const auto ad = grad(e, p);
      for (std::size_t i = 0; i < n; ++i) {
        const double fd = central_difference(e, x, i, 1e-6);
        if (std::abs(ad[i] - fd) > 1e-5 * std::max(1.0, std::abs(ad[i]))) o.fail(e.to_string());
      }
    }
  }
  return o;
}

Outcome so3_cross_product() {
  Outcome o;
  const StructureConstants sc = structure_constants_of_pairs(lookup("g3,9").pairs);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const RationalVector a = RationalVector::basis(3, i);
      const RationalVector b = RationalVector::basis(3, j);
      const Covector cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (sc.bracket(Covector::basis(3, i), Covector::basis(3, j)) != cross) o.fail("mismatch in the cross table");
    }
  }
  return o;
}

struct Criterion {
  const char* title;
  double limit_seconds;  // 0 = untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Jacobi identity for 200 random anchored pairs", 5.0, jacobi_of_random_pairs},
      {"second derived algebra vanishes for the same 200 pairs", 5.0, second_derived_algebra_vanishes},
      {"200 nilpotent pairs reach 0 in the lower central series", 0.0, nilpotent_pairs},
      {"100 commuting couples: zero defect, Jacobi, nilpotent sums", 0.0, commuting_couples},
      {"catalog pairs reproduce every stored commutator", 2.0, catalog_regression},
      {"decompose/reconstruct round trip on catalog and 500 random tensors", 0.0, decompose_round_trip},
      {"decomposition of g3,8 matches the catalog pairs", 0.0, g38_cross_validation},
      {"stored Casimirs and integrating factors verify", 0.0, casimir_suite},
      {"Hodge-star bracket agrees with the Lie-Poisson bracket", 10.0, hodge_matches_lie_poisson},
      {"Nambu consistency, fundamental identity and Leibniz rule", 0.0, nambu_consistency},
      {"forward-mode gradients match central differences", 0.0, gradient_oracle},
      {"g3,9 bracket reproduces the cross product table", 0.0, so3_cross_product},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %2zu  %-68s %7.3f s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.title, seconds,
                o.ok ? "" : "  ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
