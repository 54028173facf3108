#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kc/numeric/certificate.hpp"
#include "kc/numeric/int_poly.hpp"

namespace kc::numeric {

/// Outcome of deciding p(n) > 0 for every real n >= n0.
struct RayResult {
  bool positive = false;
  /// "shift" (all coefficients of p(n0 + t) nonnegative) or "sturm" (no root on the ray).
  std::string method;
  IntPoly shifted;
  int roots_on_ray = 0;
  /// Exact point with p <= 0, when one exists among the isolation endpoints.
  std::optional<mpq_class> counterexample;
  /// Isolating interval of a root where p touches zero without changing sign.
  std::optional<std::pair<mpq_class, mpq_class>> touching_root;
};

/// Complete decision procedure; never inconclusive. Throws on p == 0.
RayResult decide_ray_positivity(const IntPoly& p, const mpq_class& n0);

/// Certificate form of decide_ray_positivity.
Certificate poly_positive_on_ray(const IntPoly& p, long n0, const std::string& claim_id = "numeric.ray_positivity");

}  // namespace kc::numeric
