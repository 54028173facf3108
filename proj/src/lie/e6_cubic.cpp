#include <chrono>

#include "kc/lie/lie.hpp"

namespace kc::lie {

namespace {

nlohmann::json decomposition_json(const WeightLattice& L, const std::map<Weight, mpz_class>& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, m] : d)
    out.push_back({{"highest_weight", w}, {"dimension", weyl_dimension(L, w).get_str()}, {"multiplicity", m.get_str()}});
  return out;
}

mpz_class total_dimension(const WeightLattice& L, const std::map<Weight, mpz_class>& d) {
  mpz_class s = 0;
  for (const auto& [w, m] : d) s += m * weyl_dimension(L, w);
  return s;
}

}  // namespace

CubicInvariantReport e6_cubic_report() {
  const auto t0 = std::chrono::steady_clock::now();
  CubicInvariantReport r;
  Certificate& c = r.cert;
  c.claim_id = "lie.e6_cubic_invariant";
  c.anchor = "e6-invariant cubic form on the 27-dimensional representation";
  const WeightLattice L(Algebra::e6);
  const Weight zero(6, 0);
  const std::vector<Weight> w27 = minuscule_weights(L, L.fundamental(1));

  const mpz_class dim_s2 = 27 * 28 / 2, dim_s3 = 27 * 28 * 29 / 6;
  r.square = decompose(L, symmetric_power_dominant(w27, 2), dim_s2);
  r.cube = decompose(L, symmetric_power_dominant(w27, 3), dim_s3);
  r.trivial_in_square = r.square.count(zero) ? r.square.at(zero) : mpz_class(0);
  r.trivial_in_cube = r.cube.count(zero) ? r.cube.at(zero) : mpz_class(0);

  c.witnesses["weights_of_27"] = w27.size();
  c.witnesses["square"] = decomposition_json(L, r.square);
  c.witnesses["cube"] = decomposition_json(L, r.cube);
  c.witnesses["trivial_in_square"] = r.trivial_in_square.get_str();
  c.witnesses["trivial_in_cube"] = r.trivial_in_cube.get_str();
  const mpz_class s2 = total_dimension(L, r.square), s3 = total_dimension(L, r.cube);
  c.witnesses["dim_square"] = s2.get_str();
  c.witnesses["dim_cube"] = s3.get_str();
  if (s2 != dim_s2) c.fail("S^2 decomposition does not add up to 378", s2.get_str());
  if (s3 != dim_s3) c.fail("S^3 decomposition does not add up to 3654", s3.get_str());
  if (sgn(r.trivial_in_square) != 0) c.fail("S^2 has a trivial summand", r.trivial_in_square.get_str());
  if (r.trivial_in_cube < 1) c.fail("no invariant in S^3", r.trivial_in_cube.get_str());
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int e6_cubic_invariant_dim() { return static_cast<int>(e6_cubic_report().trivial_in_cube.get_si()); }

}  // namespace kc::lie
