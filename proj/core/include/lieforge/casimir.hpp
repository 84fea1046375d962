#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieforge/algebra.hpp"
#include "lieforge/bracket.hpp"
#include "lieforge/expr.hpp"
#include "lieforge/multivector.hpp"

namespace lieforge {

/// {f, g}(x) = sum_{i,j,k} c_ij^k x_k df/dx_i dg/dx_j.
double lie_poisson_bracket(const StructureConstants& sc, const Expr& f, const Expr& g, const Point& p);

/// Jacobian determinant d(f1, f2, f3)/d(x1, x2, x3) at p.
double nambu3(const Expr& f1, const Expr& f2, const Expr& f3, const Point& p);

/// sum_i F_i(p) ^ v_i with F(p) = F * p evaluated in binary64.
KVectorF pairs_bivector(std::span<const AnchoredPair> pairs, const Point& p);

/// Top coefficient of grad f ^ grad g ^ *(sum_i F_i(p) ^ v_i). Requires n >= 3.
double hodge_poisson_bracket(std::span<const AnchoredPair> pairs, const Expr& f, const Expr& g,
                             const Point& p);

/// The (n-2)-vector *(sum_i F_i(p) ^ v_i); at n = 3 this is the vector field
/// sum_i F_i(p) x v_i that an integrating factor scales into grad c.
KVectorF hodge_dual_field(std::span<const AnchoredPair> pairs, const Point& p);

struct SampleConfig {
  std::size_t samples = 100;
  double lo = 0.5;
  double hi = 2.0;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Total resampling budget for points outside the candidate's domain.
  std::size_t max_retries = 1000;
};

struct CasimirReport {
  explicit CasimirReport(Expr c) : candidate(std::move(c)) {}

  Expr candidate;
  std::size_t samples = 0;
  std::size_t resampled = 0;
  double tolerance = 0.0;
  /// max over points and generators of |{c, x_i}|.
  double max_abs_residual = 0.0;
  /// max of |{c, x_i}| / (1 + scale), scale being the largest single term
  /// |c_ji^k x_k dc/dx_j| contributing to that residual.
  double max_scaled_residual = 0.0;
  /// max |{c, x_i}| per generator i.
  std::vector<double> generator_residuals;
  bool pass = false;
  /// Set when sampling gave up on domain errors.
  std::optional<std::string> failure;
};

/// Checks {c, x_i} = 0 for every generator at `config.samples` points drawn
/// uniformly from [lo, hi]^n. Passes iff every residual is within
/// tolerance * (1 + scale). Deterministic for a fixed seed.
CasimirReport verify_casimir(const StructureConstants& sc, const Expr& c, const SampleConfig& config = {});

/// grad c(pt) - l(pt) * sum_i (F_i(pt) x v_i). Requires n = 3.
std::vector<double> integrating_factor_residual(std::span<const AnchoredPair> pairs, const Expr& c,
                                                const Expr& l, const Point& pt);

std::vector<double> integrating_factor_check(const AnchoredPair& p, const Expr& c, const Expr& l,
                                             const Point& pt);

struct IntegratingFactorReport {
  std::size_t samples = 0;
  std::size_t resampled = 0;
  double tolerance = 0.0;
  double max_abs_residual = 0.0;
  /// max of |r_i| / (1 + max(|dc/dx_i|, |l f_i|)) over points and components.
  double max_scaled_residual = 0.0;
  bool pass = false;
  std::optional<std::string> failure;
};

/// integrating_factor_residual at sampled points, judged like verify_casimir.
IntegratingFactorReport verify_integrating_factor(std::span<const AnchoredPair> pairs, const Expr& c,
                                                  const Expr& l, const SampleConfig& config = {});

}  // namespace lieforge
