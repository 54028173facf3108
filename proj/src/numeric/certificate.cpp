#include "kc/numeric/certificate.hpp"

#include <stdexcept>

namespace kc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::out_of_range: return "out-of-range";
  }
  return "fails";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "out-of-range") return Verdict::out_of_range;
  throw std::invalid_argument("unknown verdict: " + s);
}

void Certificate::fail(const std::string& reason, nlohmann::json witness) {
  verdict = Verdict::fails;
  if (!witnesses.contains("failures")) witnesses["failures"] = nlohmann::json::array();
  nlohmann::json entry = {{"reason", reason}};
  if (!witness.is_null()) entry["witness"] = std::move(witness);
  witnesses["failures"].push_back(std::move(entry));
}

nlohmann::json to_json(const Certificate& c) {
  return {
      {"claim_id", c.claim_id},
      {"anchor", c.anchor},
      {"params", c.params},
      {"verdict", to_string(c.verdict)},
      {"witnesses", c.witnesses},
      {"precision_bits", c.precision_bits},
      {"runtime_ms", c.runtime_ms},
      {"seed", c.seed},
  };
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.claim_id = j.at("claim_id").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.params = j.at("params");
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.witnesses = j.at("witnesses");
  c.precision_bits = j.at("precision_bits").get<int>();
  c.runtime_ms = j.at("runtime_ms").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace kc
