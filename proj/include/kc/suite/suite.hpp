#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kc/numeric/certificate.hpp"

namespace kc::suite {

/// KC_WORKERS when set to a positive integer, otherwise the hardware thread count.
int default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads; the first exception is rethrown.
void parallel_for(int count, int workers, const std::function<void(int)>& body);

/// Reduces a list of certificates to one: holds iff all hold, fails if any fails.
Certificate combine(const std::string& claim_id, const std::string& anchor, const std::vector<Certificate>& parts,
                    nlohmann::json params = nlohmann::json::object());

// ---- property suites ----

Certificate property_parseval(int cases, std::uint64_t seed);
Certificate property_integration_by_parts(int cases, std::uint64_t seed);
Certificate property_tangency(int cases, std::uint64_t seed);
Certificate property_enclosure_soundness(int cases, std::uint64_t seed);
Certificate property_comparison_transitivity(int cases, std::uint64_t seed);

// ---- batches shared by the CLI and the acceptance suite ----

enum class FiberCheck { tangent_identity, sym2_identity, projector_ratio, pairing_bound };

/// Accepts the descriptive names and the short aliases 4.3i, 4.3ii, 5.4norm, 4.1.
FiberCheck fiber_check_from_string(const std::string& s);
std::string to_string(FiberCheck c);

/// Identities: `trials` nonzero admissible sections with seeds seed, seed+1, ...; the ratio ignores k and trials.
Certificate fiber_batch(FiberCheck check, int n, int k, int trials, std::uint64_t seed, int workers = 1);

/// Generated pinched tensors at lambda, each checked against the angle-stratum bounds,
/// the trace-free sectional bound and the derivation bound for p = 1, 2.
Certificate curvature_batch(int n, double lambda, int trials, int restarts, double tol, std::uint64_t seed,
                            int workers);

/// G(X,JX,JX,X) = -|X|^4 exactly on `samples` rational vectors.
Certificate exact_g_holomorphic(int n, int samples, std::uint64_t seed);

// ---- acceptance ----

struct SuiteConfig {
  bool quick = true;
  int workers = 1;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double runtime_ms = 0.0;
  /// Zero means no time limit.
  double budget_ms = 0.0;
  std::vector<Certificate> certificates;
};

CriterionResult criterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);
constexpr int kCriterionCount = 8;

nlohmann::json to_json(const CriterionResult& r);

}  // namespace kc::suite
