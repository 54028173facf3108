#include "kc/numeric/ray_certificate.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

namespace kc::numeric {

namespace {

struct Isolation {
  std::vector<std::pair<mpq_class, mpq_class>> intervals;
  std::optional<mpq_class> hit;  // endpoint where p <= 0
};

// Splits (a, b] until every piece holds at most one root of the squarefree part.
void isolate(const std::vector<IntPoly>& chain, const IntPoly& p, const mpq_class& a, const mpq_class& b,
             Isolation& out) {
  if (out.hit) return;
  const int k = count_roots(chain, a, b);
  if (k == 0) return;
  if (k == 1) {
    out.intervals.emplace_back(a, b);
    return;
  }
  const mpq_class mid = (a + b) / 2;
  if (p(mid) <= 0) {
    out.hit = mid;
    return;
  }
  isolate(chain, p, a, mid, out);
  isolate(chain, p, mid, b, out);
}

}  // namespace

RayResult decide_ray_positivity(const IntPoly& p, const mpq_class& n0) {
  if (p.is_zero()) throw std::invalid_argument("ray positivity of the zero polynomial");
  RayResult r;
  r.shifted = p.taylor_shift(n0);
  const mpq_class at0 = p(n0);
  if (at0 <= 0) r.method = "sign";
  if (at0 == 0) {
    r.counterexample = n0;
    return r;
  }
  if (at0 < 0) {
    // p < 0 on (n0, first root); walk toward n0 from the first root's isolating interval.
    const IntPoly s = squarefree_part(p);
    const std::vector<IntPoly> chain = sturm_chain(s);
    r.roots_on_ray = count_roots_above(chain, n0);
    mpq_class b = n0 + 1;
    if (r.roots_on_ray > 0) {
      b = root_bound(s);
      if (b <= n0) b = n0 + 1;
      while (count_roots(chain, n0, (n0 + b) / 2) > 0) b = (n0 + b) / 2;
    }
    for (mpq_class x = (n0 + b) / 2;; x = (n0 + x) / 2) {
      if (p(x) < 0) {
        r.counterexample = x;
        return r;
      }
    }
  }
  bool all_nonneg = true;
  for (const auto& c : r.shifted.coeffs()) all_nonneg = all_nonneg && c >= 0;
  if (all_nonneg) {
    r.positive = true;
    r.method = "shift";
    return r;
  }
  r.method = "sturm";
  const IntPoly s = squarefree_part(p);
  const std::vector<IntPoly> chain = sturm_chain(s);
  r.roots_on_ray = count_roots_above(chain, n0);
  if (r.roots_on_ray == 0) {
    r.positive = true;
    return r;
  }
  mpq_class hi = root_bound(s);
  if (hi <= n0) hi = n0 + 1;
  Isolation iso;
  if (p(hi) <= 0) {
    iso.hit = hi;
  } else {
    isolate(chain, p, n0, hi, iso);
  }
  if (iso.hit) {
    r.counterexample = iso.hit;
    return r;
  }
  // An odd-multiplicity root flips the sign of p between the ends of its interval.
  for (const auto& [a, b] : iso.intervals) {
    if (p(a) <= 0) {
      r.counterexample = a;
      return r;
    }
    if (p(b) <= 0) {
      r.counterexample = b;
      return r;
    }
  }
  r.touching_root = iso.intervals.front();
  return r;
}

Certificate poly_positive_on_ray(const IntPoly& p, long n0, const std::string& claim_id) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = claim_id;
  c.anchor = "polynomial positivity on an integer ray";
  c.params = {{"polynomial", p.to_string()}, {"n0", n0}};
  const RayResult r = decide_ray_positivity(p, mpq_class(n0));
  c.witnesses["method"] = r.method;
  c.witnesses["shifted"] = r.shifted.to_string("t");
  c.witnesses["roots_on_ray"] = r.roots_on_ray;
  if (!r.positive) {
    nlohmann::json w = nlohmann::json::object();
    if (r.counterexample) {
      w["n"] = r.counterexample->get_str();
      w["value"] = p(*r.counterexample).get_str();
    }
    if (r.touching_root) w["root_interval"] = {r.touching_root->first.get_str(), r.touching_root->second.get_str()};
    c.fail("polynomial is not positive on the ray", w);
  }
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace kc::numeric
