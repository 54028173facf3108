#include "kc/suite/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "kc/curvature/curvature.hpp"
#include "kc/fiber/fiber.hpp"
#include "kc/lie/lie.hpp"
#include "kc/numeric/exact_scalar.hpp"
#include "kc/thresholds/thresholds.hpp"

namespace kc::suite {

namespace {

using Clock = std::chrono::steady_clock;
using numeric::DyadicInterval;
using numeric::ExactScalar;
using numeric::Ordering;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Certificate begin(const std::string& id, const std::string& anchor, nlohmann::json params, std::uint64_t seed) {
  Certificate c;
  c.claim_id = id;
  c.anchor = anchor;
  c.params = std::move(params);
  c.seed = seed;
  return c;
}

fiber::Poly random_poly(int n, int lo, int hi, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> v(0, n - 1), c(-4, 4), d(lo, hi);
  fiber::Poly p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    const int deg = d(rng);
    for (int i = 0; i < deg; ++i) ++e[static_cast<std::size_t>(v(rng))];
    p.add_term(fiber::make_monomial(e), c(rng));
  }
  return p;
}

// random expression evaluated exactly and by interval arithmetic in lockstep
struct Node {
  ExactScalar exact;
  std::function<DyadicInterval(mpfr_prec_t)> interval;
  std::string text;
};

Node random_leaf(std::mt19937_64& rng) {
  static const long rads[] = {1, 2, 3, 5, 6, 7, 10, 12, 18, 30};
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 9) + 1;
  const long d = rads[rng() % 10];
  mpq_class c(num, den);
  c.canonicalize();
  Node n{ExactScalar(c) * ExactScalar::sqrt(mpq_class(d)), nullptr,
         "(" + c.get_str() + ")*sqrt(" + std::to_string(d) + ")"};
  n.interval = [c, d](mpfr_prec_t p) { return DyadicInterval(c, p) * DyadicInterval(mpq_class(d), p).sqrt(); };
  return n;
}

Node random_tree(std::mt19937_64& rng, int depth) {
  if (depth == 0) return random_leaf(rng);
  Node a = random_tree(rng, depth - 1);
  Node b = random_tree(rng, depth - 1);
  const int op = static_cast<int>(rng() % 4);
  if (op == 3) {
    while (b.exact.is_zero() || b.exact.term_count() > 4) b = random_leaf(rng);
  }
  static const char* names[] = {"+", "-", "*", "/"};
  Node r;
  r.text = "(" + a.text + " " + names[op] + " " + b.text + ")";
  auto ia = a.interval;
  auto ib = b.interval;
  switch (op) {
    case 0:
      r.exact = a.exact + b.exact;
      r.interval = [ia, ib](mpfr_prec_t p) { return ia(p) + ib(p); };
      break;
    case 1:
      r.exact = a.exact - b.exact;
      r.interval = [ia, ib](mpfr_prec_t p) { return ia(p) - ib(p); };
      break;
    case 2:
      r.exact = a.exact * b.exact;
      r.interval = [ia, ib](mpfr_prec_t p) { return ia(p) * ib(p); };
      break;
    default:
      r.exact = a.exact / b.exact;
      r.interval = [ia, ib](mpfr_prec_t p) { return ia(p) / ib(p); };
      break;
  }
  return r;
}

nlohmann::json part_summary(const Certificate& c) {
  nlohmann::json j{{"claim_id", c.claim_id}, {"verdict", to_string(c.verdict)}, {"params", c.params}};
  if (c.seed != 0) j["seed"] = c.seed;
  j["witnesses"] = c.witnesses;
  return j;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("KC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Certificate combine(const std::string& claim_id, const std::string& anchor, const std::vector<Certificate>& parts,
                    nlohmann::json params) {
  Certificate c = begin(claim_id, anchor, std::move(params), 0);
  nlohmann::json list = nlohmann::json::array();
  bool out_of_range = false;
  int precision = 0;
  for (const auto& p : parts) {
    list.push_back(part_summary(p));
    precision = std::max(precision, p.precision_bits);
    if (p.verdict == Verdict::out_of_range) out_of_range = true;
    if (p.verdict == Verdict::fails) c.fail(p.claim_id + " fails", part_summary(p));
    c.runtime_ms += p.runtime_ms;
  }
  if (c.verdict == Verdict::holds && out_of_range) c.verdict = Verdict::out_of_range;
  c.witnesses["parts"] = list;
  c.precision_bits = precision;
  return c;
}

// ---- property suites ----

Certificate property_parseval(int cases, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("property.parseval", "L2 norm equals the sum of the norms of the harmonic parts",
                        {{"cases", cases}}, seed);
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 3 + (t % 4);
    const fiber::Poly p = random_poly(n, 0, 5, rng, 6);
    mpq_class parts = 0;
    for (int k = 0; k <= p.degree(); ++k) {
      const fiber::Poly h = fiber::degree_project(p, k);
      parts += fiber::integrate_product(h, h);
    }
    if (parts != fiber::integrate_product(p, p)) {
      if (failures++ == 0) c.fail("Parseval mismatch", {{"case", t}, {"poly", p.to_string()}});
    }
  }
  c.witnesses["failures"] = failures;
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate property_integration_by_parts(int cases, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("property.integration_by_parts", "<grad_V f, grad_V g> = <f, Lap_V g> on the unit sphere",
                        {{"cases", cases}}, seed);
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 3 + (t % 3);
    const fiber::Poly f = random_poly(n, 0, 4, rng, 4), g = random_poly(n, 0, 4, rng, 4);
    const mpq_class lhs = fiber::l2_inner(fiber::vertical_gradient(f), fiber::vertical_gradient(g));
    const mpq_class rhs = fiber::integrate_product(f, fiber::vertical_laplacian(g));
    if (lhs != rhs && failures++ == 0)
      c.fail("integration by parts mismatch", {{"case", t}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
  }
  c.witnesses["failures"] = failures;
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate property_tangency(int cases, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("property.tangency", "vertical gradient is orthogonal to the base point on the sphere",
                        {{"cases", cases}}, seed);
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 2 + 2 * (t % 4);
    const fiber::Poly f = random_poly(n, 0, 5, rng, 6);
    if (fiber::sphere_degree(fiber::iota_v(fiber::vertical_gradient(f))) != -1 && failures++ == 0)
      c.fail("gradient has a radial component", {{"case", t}, {"poly", f.to_string()}});
  }
  c.witnesses["failures"] = failures;
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate property_enclosure_soundness(int cases, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("property.enclosure_soundness", "interval evaluation encloses the exact value",
                        {{"cases", cases}, {"precisions", {32, 64, 128, 256}}}, seed);
  std::mt19937_64 rng(seed);
  int failures = 0, checked = 0, straddled = 0;
  for (int t = 0; t < cases; ++t) {
    const Node node = random_tree(rng, static_cast<int>(rng() % 3) + 1);
    for (mpfr_prec_t p : {32, 64, 128, 256}) {
      DyadicInterval iv(p);
      try {
        iv = node.interval(p);
      } catch (const std::domain_error&) {
        ++straddled;  // a divisor enclosure touched zero at this precision
        continue;
      }
      ++checked;
      const bool inside = numeric::exact_compare(node.exact, ExactScalar(iv.lower_exact())).verdict != Ordering::less &&
                          numeric::exact_compare(node.exact, ExactScalar(iv.upper_exact())).verdict != Ordering::greater;
      const bool self = node.exact.enclose(p).width_log2() >= node.exact.enclose(4 * p).width_log2();
      if ((!inside || !self) && failures++ == 0)
        c.fail("enclosure misses the exact value", {{"case", t}, {"expr", node.text}, {"bits", p}});
    }
  }
  c.witnesses["failures"] = failures;
  c.witnesses["checked"] = checked;
  c.witnesses["skipped_zero_divisor"] = straddled;
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate property_comparison_transitivity(int cases, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("property.comparison_transitivity", "exact comparison is antisymmetric and transitive",
                        {{"cases", cases}}, seed);
  std::mt19937_64 rng(seed);
  auto flip = [](Ordering o) {
    return o == Ordering::less ? Ordering::greater : (o == Ordering::greater ? Ordering::less : Ordering::equal);
  };
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    ExactScalar x[3];
    for (auto& v : x) {
      v = random_leaf(rng).exact + random_leaf(rng).exact;
      if (rng() % 5 == 0) v = x[0];
    }
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        ok = ok && numeric::exact_compare(x[i], x[j]).verdict == flip(numeric::exact_compare(x[j], x[i]).verdict);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (x[i] <= x[j] && x[j] <= x[k]) ok = ok && x[i] <= x[k];
    if (!ok && failures++ == 0)
      c.fail("comparison inconsistent", {{"case", t}, {"x", {x[0].to_string(), x[1].to_string(), x[2].to_string()}}});
  }
  c.witnesses["failures"] = failures;
  c.runtime_ms = ms_since(t0);
  return c;
}

// ---- batches ----

FiberCheck fiber_check_from_string(const std::string& s) {
  if (s == "tangent-identity" || s == "4.3i") return FiberCheck::tangent_identity;
  if (s == "sym2-identity" || s == "4.3ii") return FiberCheck::sym2_identity;
  if (s == "projector-ratio" || s == "5.4norm") return FiberCheck::projector_ratio;
  if (s == "pairing-bound" || s == "4.1") return FiberCheck::pairing_bound;
  throw std::invalid_argument("unknown fiber check: " + s);
}

std::string to_string(FiberCheck c) {
  switch (c) {
    case FiberCheck::tangent_identity: return "tangent-identity";
    case FiberCheck::sym2_identity: return "sym2-identity";
    case FiberCheck::projector_ratio: return "projector-ratio";
    case FiberCheck::pairing_bound: return "pairing-bound";
  }
  return "?";
}

Certificate fiber_batch(FiberCheck check, int n, int k, int trials, std::uint64_t seed, int workers) {
  if (check == FiberCheck::projector_ratio) return fiber::verify_projector_norm_ratio(n);
  if (check == FiberCheck::pairing_bound)
    return fiber::verify_curvature_pairing_bound(n, k, fiber::Space::vector, 0.95, trials, 1e-7, seed);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto t0 = Clock::now();
  const fiber::IntMat J = curvature::ComplexStructure::canonical(n).integer_form();
  fiber::Constraints cons;
  const bool tangent = check == FiberCheck::tangent_identity;
  if (tangent) {
    cons.iota_jv = true;
  } else {
    cons.commutes_j = true;
  }
  const fiber::Space space = tangent ? fiber::Space::vector : fiber::Space::sym2;
  std::vector<Certificate> parts;
  int empty = 0;
  std::uint64_t next = seed;
  // seeds are tried in rounds of the missing count; results are appended in seed order
  while (static_cast<int>(parts.size()) < trials && empty <= 4 * trials) {
    const int need = trials - static_cast<int>(parts.size());
    std::vector<std::optional<Certificate>> round(static_cast<std::size_t>(need));
    parallel_for(need, workers, [&](int i) {
      const std::uint64_t s = next + static_cast<std::uint64_t>(i);
      const fiber::SampleResult r = fiber::sample_admissible_section(n, k, space, cons, J, s);
      if (!r.section) return;
      Certificate part = tangent ? fiber::verify_g_identity_tm(n, J, *r.section, k)
                                 : fiber::verify_g_identity_s2(n, J, *r.section, k);
      part.seed = s;
      round[static_cast<std::size_t>(i)] = std::move(part);
    });
    next += static_cast<std::uint64_t>(need);
    for (auto& p : round) {
      if (p) {
        parts.push_back(std::move(*p));
      } else {
        ++empty;
      }
    }
  }
  Certificate c = combine(tangent ? "fiber.g_identity.tangent.batch" : "fiber.g_identity.sym2.batch",
                          tangent ? "G pairing identity on random admissible TM-valued sections"
                                  : "G pairing identity on random admissible S^2-valued sections",
                          parts, {{"n", n}, {"k", k}, {"trials", trials}});
  c.seed = seed;
  c.witnesses["sections_checked"] = parts.size();
  c.witnesses["empty_samples"] = empty;
  if (static_cast<int>(parts.size()) < trials)
    c.fail("admissible space produced too few nonzero sections", {{"found", parts.size()}, {"wanted", trials}});
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate curvature_batch(int n, double lambda, int trials, int restarts, double tol, std::uint64_t seed,
                            int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto t0 = Clock::now();
  Certificate c = begin("curvature.pinched_batch", "pinched Kahler tensors against sectional and trace-free bounds",
                        {{"n", n}, {"lambda", lambda}, {"trials", trials}, {"restarts", restarts}, {"tol", tol}}, seed);
  std::vector<nlohmann::json> rows(static_cast<std::size_t>(trials));
  std::vector<std::vector<Certificate>> certs(static_cast<std::size_t>(trials));
  std::vector<double> worst(static_cast<std::size_t>(trials), 0.0);
  parallel_for(trials, workers, [&](int t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    auto& out = certs[static_cast<std::size_t>(t)];
    const curvature::GeneratedTensor g = curvature::random_pinched_kahler(n, lambda, s, restarts);
    const curvature::PinchReport bg = curvature::verify_bishop_goldberg(g.R, g.J, lambda, restarts, tol, s);
    out.push_back(bg.certificate);
    const Certificate r0 = curvature::verify_r0_bound(g.R, g.J, lambda, 2000, restarts, tol, s);
    out.push_back(r0);
    // smallest slack over every bound; negative means violated
    double slack = std::min(bg.h_min + 1.0, -lambda - bg.h_max);
    slack = std::min(slack, std::min(bg.sec_min + 1.0, -(3.0 * lambda - 2.0) / 4.0 - bg.sec_max));
    for (const auto& st : bg.strata)
      slack = std::min(slack, std::min(st.min.value - st.lower_bound, st.upper_bound - st.max.value));
    slack = std::min(slack, r0.witnesses["bound"].get<double>() -
                                std::max(r0.witnesses["sampled_max"].get<double>(),
                                         r0.witnesses["optimized_max"].get<double>()));
    for (auto [p, space] : {std::pair{1, curvature::TensorSpace::exterior},
                            std::pair{2, curvature::TensorSpace::exterior},
                            std::pair{2, curvature::TensorSpace::symmetric}}) {
      const Certificate d = curvature::verify_derivation_bound(g.R, g.J, lambda, p, space, 200, tol, s);
      slack = std::min(slack, d.witnesses["bound"].get<double>() - d.witnesses["max_operator_norm"].get<double>());
      out.push_back(d);
    }
    worst[static_cast<std::size_t>(t)] = slack;
    rows[static_cast<std::size_t>(t)] = {{"seed", s}, {"min_slack", slack}, {"h_range", {bg.h_min, bg.h_max}},
                                         {"sec_range", {bg.sec_min, bg.sec_max}}};
  });
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t t = 0; t < rows.size(); ++t) {
    table.push_back(rows[t]);
    for (const auto& part : certs[t])
      if (part.verdict == Verdict::fails) c.fail(part.claim_id + " fails", part_summary(part));
  }
  c.witnesses["trials"] = table;
  c.witnesses["min_slack"] = *std::min_element(worst.begin(), worst.end());
  c.precision_bits = 53;
  c.runtime_ms = ms_since(t0);
  return c;
}

Certificate exact_g_holomorphic(int n, int samples, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Certificate c = begin("curvature.exact_g_holomorphic", "holomorphic curvature of the model tensor is -1",
                        {{"n", n}, {"samples", samples}}, seed);
  const auto J = curvature::ComplexStructure::canonical(n).integer_form();
  const curvature::ExactCurvatureTensor G = curvature::complex_hyperbolic_g_exact(J);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int t = 0; t < samples; ++t) {
    curvature::QVec x(static_cast<std::size_t>(n)), jx(static_cast<std::size_t>(n), 0);
    mpq_class norm2 = 0;
    for (auto& v : x) {
      v = mpq_class(num(rng), den(rng));
      v.canonicalize();
      norm2 += v * v;
    }
    if (sgn(norm2) == 0) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (J[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0)
          jx[static_cast<std::size_t>(a)] += J[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * x[static_cast<std::size_t>(b)];
    const mpq_class h = G.eval(x, jx, jx, x) / (norm2 * norm2);
    if (h != -1 && c.holds()) c.fail("H differs from -1", {{"sample", t}, {"H", h.get_str()}});
  }
  c.runtime_ms = ms_since(t0);
  return c;
}

// ---- acceptance ----

namespace {

std::vector<Certificate> criterion_certificates(int id, const SuiteConfig& cfg) {
  const std::uint64_t seed = cfg.seed;
  switch (id) {
    case 1:
      return {thresholds::verify_final_constants(6, 200)};
    case 2:
      return {thresholds::verify_roots(4, 40, 2, 12)};
    case 3: {
      std::vector<Certificate> out;
      for (int n : {4, 8, 12, 24, 56}) out.push_back(thresholds::verify_monotonicity(n, 200));
      return out;
    }
    case 4:
      return {thresholds::verify_chain(10, cfg.quick ? 1000 : 10000),
              thresholds::verify_threshold_table(6, 200, cfg.workers).certificate, thresholds::verify_side_claims()};
    case 5: {
      std::vector<Certificate> out;
      const int trials = cfg.quick ? 20 : 40;
      for (auto [n, k] : {std::pair{4, 2}, std::pair{8, 2}, std::pair{8, 4}}) {
        out.push_back(fiber_batch(FiberCheck::tangent_identity, n, k, trials, seed, cfg.workers));
        out.push_back(fiber_batch(FiberCheck::sym2_identity, n, k, trials, seed, cfg.workers));
      }
      out.push_back(fiber_batch(FiberCheck::projector_ratio, 8, 0, 0, 0));
      out.push_back(fiber_batch(FiberCheck::projector_ratio, 12, 0, 0, 0));
      return out;
    }
    case 6: {
      const int restarts = cfg.quick ? 16 : 64;
      return {curvature_batch(4, 0.95, 20, restarts, 1e-7, seed, cfg.workers),
              curvature_batch(8, 0.95, 20, restarts, 1e-7, seed, cfg.workers),
              exact_g_holomorphic(4, 50, seed), exact_g_holomorphic(8, 50, seed)};
    }
    case 7: {
      Certificate dims = begin("lie.weyl_dimensions", "Weyl dimension formula on fundamental and adjoint weights",
                               nlohmann::json::object(), 0);
      const std::vector<std::tuple<lie::Algebra, lie::Weight, long>> want{
          {lie::Algebra::g2, {1, 0}, 7},
          {lie::Algebra::g2, {0, 1}, 14},
          {lie::Algebra::e6, {1, 0, 0, 0, 0, 0}, 27},
          {lie::Algebra::f4, {1, 0, 0, 0}, 52},
          {lie::Algebra::e6, {0, 1, 0, 0, 0, 0}, 78},
          {lie::Algebra::e7, {1, 0, 0, 0, 0, 0, 0}, 133},
          {lie::Algebra::e8, {0, 0, 0, 0, 0, 0, 0, 1}, 248}};
      nlohmann::json got = nlohmann::json::array();
      for (const auto& [a, w, d] : want) {
        const mpz_class dim = lie::weyl_dimension(lie::WeightLattice(a), w);
        got.push_back({{"algebra", lie::to_string(a)}, {"highest_weight", w}, {"dimension", dim.get_str()}});
        if (dim != d) dims.fail("dimension mismatch", got.back());
      }
      dims.witnesses["dimensions"] = got;

      Certificate rh = begin("lie.radon_hurwitz", "vector fields on spheres: rho(16) and rho(4p+4) <= 2p+3",
                             {{"p_max", 10000}}, 0);
      rh.witnesses["rho16"] = lie::radon_hurwitz(16);
      if (lie::radon_hurwitz(16) != 9) rh.fail("rho(16) != 9", lie::radon_hurwitz(16));
      for (long p = 3; p <= 10000; ++p)
        if (lie::radon_hurwitz(4 * p + 4) > 2 * p + 3) {
          rh.fail("rho(4p+4) > 2p+3", {{"p", p}, {"rho", lie::radon_hurwitz(4 * p + 4)}});
          break;
        }
      return {lie::enumerate_exclusion_table(20).cert, dims, rh, lie::e6_cubic_report().cert};
    }
    case 8: {
      const int cases = cfg.quick ? 200 : 1000;
      return {property_parseval(cases, seed), property_integration_by_parts(cases, seed + 1),
              property_tangency(cases, seed + 2), property_enclosure_soundness(cases, seed + 3),
              property_comparison_transitivity(cases, seed + 4)};
    }
  }
  throw std::out_of_range("criterion id must be 1..8");
}

const char* criterion_title(int id) {
  switch (id) {
    case 1: return "final threshold constants";
    case 2: return "root consistency of the threshold coefficients";
    case 3: return "monotonicity of the degree thresholds";
    case 4: return "inequality chain on the ray n >= 10";
    case 5: return "exact fiber identities and projector ratio";
    case 6: return "pinched Kahler curvature bounds";
    case 7: return "exceptional Lie algebra arithmetic";
    case 8: return "randomized property suites";
  }
  return "";
}

double criterion_budget_ms(int id) {
  switch (id) {
    case 1: return 1000.0;
    case 2: return 10000.0;
    case 5: return 120000.0;
    case 7: return 300000.0;
  }
  return 0.0;
}

}  // namespace

CriterionResult criterion(int id, const SuiteConfig& cfg) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  r.budget_ms = criterion_budget_ms(id);
  const auto t0 = Clock::now();
  r.certificates = criterion_certificates(id, cfg);
  r.runtime_ms = ms_since(t0);
  r.pass = std::all_of(r.certificates.begin(), r.certificates.end(), [](const Certificate& c) { return c.holds(); });
  if (r.budget_ms > 0.0 && r.runtime_ms > r.budget_ms) r.pass = false;
  return r;
}

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(criterion(id, cfg));
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : r.certificates) certs.push_back(kc::to_json(c));
  nlohmann::json j{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"runtime_ms", r.runtime_ms},
                   {"certificates", certs}};
  if (r.budget_ms > 0.0) j["budget_ms"] = r.budget_ms;
  return j;
}

}  // namespace kc::suite
