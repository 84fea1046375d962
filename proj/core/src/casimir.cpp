#include "lieforge/casimir.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "lieforge/errors.hpp"

namespace lieforge {

namespace {

void require_box(const SampleConfig& config) {
  if (!(config.lo < config.hi) || !std::isfinite(config.lo) || !std::isfinite(config.hi)) {
    throw InvalidArgument("sampling box needs finite lo < hi");
  }
  if (config.samples == 0) throw InvalidArgument("sampling needs at least one sample");
}

void require_point(std::size_t dim, const Point& p, const char* what) {
  if (p.dim() != dim) {
    throw DimensionError(std::string(what) + ": point has " + std::to_string(p.dim()) +
                         " coordinates, expected " + std::to_string(dim));
  }
}

std::size_t common_dim(std::span<const AnchoredPair> pairs, const char* what) {
  if (pairs.empty()) throw InvalidArgument(std::string(what) + ": no pairs");
  const std::size_t n = pairs.front().dim();
  for (const auto& p : pairs) {
    if (p.dim() != n) throw DimensionError(std::string(what) + ": pair dimensions differ");
  }
  return n;
}

std::vector<double> apply_at(const RationalMatrix& F, const Point& p) {
  std::vector<double> out(F.dim(), 0.0);
  for (std::size_t r = 0; r < F.dim(); ++r) {
    for (std::size_t c = 0; c < F.dim(); ++c) {
      if (!F(r, c).is_zero()) out[r] += F(r, c).to_double() * p[c];
    }
  }
  return out;
}

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].to_double();
  return out;
}

}  // namespace

double lie_poisson_bracket(const StructureConstants& sc, const Expr& f, const Expr& g, const Point& p) {
  require_point(sc.dim(), p, "lie_poisson_bracket");
  const std::size_t n = sc.dim();
  const auto df = grad(f, p);
  const auto dg = grad(g, p);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || df[i] == 0.0 || dg[j] == 0.0) continue;
      double xk = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (!sc(i, j, k).is_zero()) xk += sc(i, j, k).to_double() * p[k];
      }
      total += xk * df[i] * dg[j];
    }
  }
  return total;
}

double nambu3(const Expr& f1, const Expr& f2, const Expr& f3, const Point& p) {
  require_point(3, p, "nambu3");
  const auto a = grad(f1, p);
  const auto b = grad(f2, p);
  const auto c = grad(f3, p);
  // Each term and each signed half is formed in an order that does not depend
  // on which row is which, so permuting the arguments flips the sign exactly.
  auto product = [](double x, double y, double z) {
    std::array<double, 3> f{x, y, z};
    std::sort(f.begin(), f.end());
    return f[0] * f[1] * f[2];
  };
  auto sum = [](double x, double y, double z) {
    std::array<double, 3> t{x, y, z};
    std::sort(t.begin(), t.end());
    return t[0] + t[1] + t[2];
  };
  const double even = sum(product(a[0], b[1], c[2]), product(a[1], b[2], c[0]), product(a[2], b[0], c[1]));
  const double odd = sum(product(a[0], b[2], c[1]), product(a[1], b[0], c[2]), product(a[2], b[1], c[0]));
  return even - odd;
}

KVectorF pairs_bivector(std::span<const AnchoredPair> pairs, const Point& p) {
  const std::size_t n = common_dim(pairs, "pairs_bivector");
  require_point(n, p, "pairs_bivector");
  KVectorF total(n, 2);
  for (const auto& pair : pairs) {
    const auto Fx = apply_at(pair.map(), p);
    const auto v = to_doubles(pair.eigenvector());
    total += wedge(KVectorF::from_vector(Fx), KVectorF::from_vector(v));
  }
  return total;
}

KVectorF hodge_dual_field(std::span<const AnchoredPair> pairs, const Point& p) {
  const std::size_t n = common_dim(pairs, "hodge_dual_field");
  if (n < 3) throw InvalidArgument("hodge_dual_field requires dimension >= 3");
  return hodge_star_2(pairs_bivector(pairs, p));
}

double hodge_poisson_bracket(std::span<const AnchoredPair> pairs, const Expr& f, const Expr& g,
                             const Point& p) {
  const std::size_t n = common_dim(pairs, "hodge_poisson_bracket");
  if (n < 3) throw InvalidArgument("hodge_poisson_bracket requires dimension >= 3");
  require_point(n, p, "hodge_poisson_bracket");
  const auto df = grad(f, p);
  const auto dg = grad(g, p);
  const KVectorF star = hodge_dual_field(pairs, p);
  return top_coefficient(wedge(wedge(KVectorF::from_vector(df), KVectorF::from_vector(dg)), star));
}

CasimirReport verify_casimir(const StructureConstants& sc, const Expr& c, const SampleConfig& config) {
  const std::size_t n = sc.dim();
  if (c.arity() > n) {
    throw DimensionError("candidate uses x" + std::to_string(c.arity()) + " in a " + std::to_string(n) +
                         "-dimensional algebra");
  }
  require_box(config);

  CasimirReport report(c);
  report.tolerance = config.tolerance;
  report.generator_residuals.assign(n, 0.0);

  std::vector<double> dense(n * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) dense[(j * n + i) * n + k] = sc(j, i, k).to_double();
    }
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coord(config.lo, config.hi);
  bool ok = true;
  while (report.samples < config.samples) {
    std::vector<double> x(n);
    for (auto& xi : x) xi = coord(rng);
    const Point p(x);
    std::vector<double> dc;
    try {
      dc = grad(c, p);
    } catch (const DomainError& e) {
      if (++report.resampled > config.max_retries) {
        report.failure = "gave up after " + std::to_string(config.max_retries) +
                         " points outside the candidate's domain; last: " + e.what();
        report.pass = false;
        return report;
      }
      continue;
    }
    ++report.samples;
    for (std::size_t i = 0; i < n; ++i) {
      double residual = 0.0;
      double scale = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (dc[j] == 0.0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const double cji = dense[(j * n + i) * n + k];
          if (cji == 0.0) continue;
          const double term = cji * x[k] * dc[j];
          residual += term;
          scale = std::max(scale, std::abs(term));
        }
      }
      const double abs_res = std::abs(residual);
      const double scaled = abs_res / (1.0 + scale);
      report.generator_residuals[i] = std::max(report.generator_residuals[i], abs_res);
      report.max_abs_residual = std::max(report.max_abs_residual, abs_res);
      report.max_scaled_residual = std::max(report.max_scaled_residual, scaled);
      if (abs_res > config.tolerance * (1.0 + scale)) ok = false;
    }
  }
  report.pass = ok;
  return report;
}

std::vector<double> integrating_factor_residual(std::span<const AnchoredPair> pairs, const Expr& c,
                                                const Expr& l, const Point& pt) {
  const std::size_t n = common_dim(pairs, "integrating_factor_check");
  if (n != 3) throw InvalidArgument("integrating_factor_check requires dimension 3");
  require_point(n, pt, "integrating_factor_check");
  const auto dc = grad(c, pt);
  const double lv = eval(l, pt);
  std::vector<double> field(3, 0.0);
  for (const auto& pair : pairs) {
    const auto a = apply_at(pair.map(), pt);
    const auto v = to_doubles(pair.eigenvector());
    field[0] += a[1] * v[2] - a[2] * v[1];
    field[1] += a[2] * v[0] - a[0] * v[2];
    field[2] += a[0] * v[1] - a[1] * v[0];
  }
  std::vector<double> residual(3);
  for (std::size_t i = 0; i < 3; ++i) residual[i] = dc[i] - lv * field[i];
  return residual;
}

std::vector<double> integrating_factor_check(const AnchoredPair& p, const Expr& c, const Expr& l,
                                             const Point& pt) {
  return integrating_factor_residual(std::span<const AnchoredPair>(&p, 1), c, l, pt);
}

IntegratingFactorReport verify_integrating_factor(std::span<const AnchoredPair> pairs, const Expr& c,
                                                  const Expr& l, const SampleConfig& config) {
  const std::size_t n = common_dim(pairs, "verify_integrating_factor");
  if (n != 3) throw InvalidArgument("verify_integrating_factor requires dimension 3");
  require_box(config);
  IntegratingFactorReport report;
  report.tolerance = config.tolerance;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coord(config.lo, config.hi);
  bool ok = true;
  while (report.samples < config.samples) {
    std::vector<double> x(n);
    for (auto& xi : x) xi = coord(rng);
    const Point p(x);
    std::vector<double> dc;
    std::vector<double> residual;
    try {
      dc = grad(c, p);
      residual = integrating_factor_residual(pairs, c, l, p);
    } catch (const DomainError& e) {
      if (++report.resampled > config.max_retries) {
        report.failure = "gave up after " + std::to_string(config.max_retries) +
                         " points outside the expressions' domain; last: " + e.what();
        report.pass = false;
        return report;
      }
      continue;
    }
    ++report.samples;
    for (std::size_t i = 0; i < n; ++i) {
      const double abs_res = std::abs(residual[i]);
      const double scale = std::max(std::abs(dc[i]), std::abs(dc[i] - residual[i]));
      report.max_abs_residual = std::max(report.max_abs_residual, abs_res);
      report.max_scaled_residual = std::max(report.max_scaled_residual, abs_res / (1.0 + scale));
      if (abs_res > config.tolerance * (1.0 + scale)) ok = false;
    }
  }
  report.pass = ok;
  return report;
}

}  // namespace lieforge
