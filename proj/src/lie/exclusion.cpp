#include <chrono>
#include <set>
#include <stdexcept>

#include "kc/lie/lie.hpp"

namespace kc::lie {

namespace {

nlohmann::json row_json(const ExclusionRow& r) {
  return {{"algebra", to_string(r.irrep.algebra)},
          {"highest_weight", r.irrep.highest},
          {"dimension", r.irrep.dimension.get_str()},
          {"p", r.p},
          {"rho", r.rho},
          {"required", r.required},
          {"survives", r.survives}};
}

}  // namespace

ExclusionTable enumerate_exclusion_table(long p_max) {
  if (p_max < 13) throw std::domain_error("p_max must be at least 13");
  const auto t0 = std::chrono::steady_clock::now();
  ExclusionTable t;
  Certificate& c = t.cert;
  c.claim_id = "lie.exclusion_table";
  c.anchor = "odd-dimensional irreps of exceptional algebras against the vector-field count on spheres";
  c.params = {{"p_max", p_max}};

  for (Algebra a : exceptional_algebras()) {
    const WeightLattice L(a);
    const long dim = L.dimension();
    for (const auto& irrep : odd_irreps_in_window(L, 7, dim + 1)) {
      ExclusionRow r;
      r.irrep = irrep;
      r.p = (irrep.dimension.get_si() - 1) / 2;
      r.rho = radon_hurwitz(4 * r.p + 4);
      r.required = 4 * r.p + 3 - dim;
      r.survives = r.rho >= r.required;
      t.candidates.push_back(r);
      if (r.survives) t.survivors.push_back(r);
    }
  }

  // the general bound that makes the filter bite for p >= 3, swept up to p_max
  long sweep_violations = 0;
  for (long p = 3; p <= p_max; ++p)
    if (radon_hurwitz(4 * p + 4) > 2 * p + 3) ++sweep_violations;

  const std::set<std::pair<std::string, Weight>> expected{
      {"g2", {1, 0}}, {"e6", {1, 0, 0, 0, 0, 0}}, {"e6", {0, 0, 0, 0, 0, 1}}};
  std::set<std::pair<std::string, Weight>> got;
  nlohmann::json unexpected = nlohmann::json::array();
  for (const auto& r : t.survivors) {
    got.insert({to_string(r.irrep.algebra), r.irrep.highest});
    if (!expected.count({to_string(r.irrep.algebra), r.irrep.highest})) unexpected.push_back(row_json(r));
  }
  nlohmann::json cand = nlohmann::json::array(), surv = nlohmann::json::array();
  for (const auto& r : t.candidates) cand.push_back(row_json(r));
  for (const auto& r : t.survivors) surv.push_back(row_json(r));
  c.witnesses["candidates"] = cand;
  c.witnesses["survivors"] = surv;
  c.witnesses["rh_sweep_violations"] = sweep_violations;
  if (!unexpected.empty()) c.fail("unexpected survivors", unexpected);
  if (got.size() != expected.size() || t.survivors.size() != expected.size())
    c.fail("survivor set differs from {(e6,27) x2, (g2,7)}", surv);
  if (sweep_violations != 0) c.fail("rho(4p+4) > 2p+3 for some 3 <= p <= p_max", sweep_violations);
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

}  // namespace kc::lie
