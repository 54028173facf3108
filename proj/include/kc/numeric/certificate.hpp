#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace kc {

enum class Verdict { holds, fails, out_of_range };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/**
 * One verified claim. `params` and `witnesses` are free-form JSON objects so
 * every module can attach its own evidence without a shared schema.
 */
struct Certificate {
  std::string claim_id;
  std::string anchor;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::holds;
  nlohmann::json witnesses = nlohmann::json::object();
  int precision_bits = 0;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;

  bool holds() const { return verdict == Verdict::holds; }

  /// Marks the claim failed and records why; a failing certificate must carry a witness.
  void fail(const std::string& reason, nlohmann::json witness = nullptr);
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace kc
