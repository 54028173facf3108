#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include "kc/suite/suite.hpp"

// Prints one line per acceptance criterion; optional argument: path for the JSON report.
int main(int argc, char** argv) {
  kc::suite::SuiteConfig cfg;
  cfg.workers = kc::suite::default_workers();
  nlohmann::json report{{"schema", 1}, {"criteria", nlohmann::json::array()}};
  int failed = 0;
  for (int id = 1; id <= kc::suite::kCriterionCount; ++id) {
    kc::suite::CriterionResult r;
    std::string note;
    try {
      r = kc::suite::criterion(id, cfg);
    } catch (const std::exception& e) {
      r.id = id;
      r.pass = false;
      note = std::string(" exception: ") + e.what();
    }
    if (note.empty()) {
      for (const auto& c : r.certificates)
        if (!c.holds()) note += " " + c.claim_id + "=" + kc::to_string(c.verdict);
      if (r.budget_ms > 0.0 && r.runtime_ms > r.budget_ms) note += " over time budget";
    }
    std::printf("[%s] criterion %d: %s (%.0f ms)%s\n", r.pass ? "PASS" : "FAIL", id, r.title.c_str(), r.runtime_ms,
                note.c_str());
    std::fflush(stdout);
    report["criteria"].push_back(kc::suite::to_json(r));
    failed += r.pass ? 0 : 1;
  }
  if (argc > 1) std::ofstream(argv[1]) << report.dump(2) << "\n";
  std::printf("%d of %d criteria passed\n", kc::suite::kCriterionCount - failed, kc::suite::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
