#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "kc/numeric/ray_certificate.hpp"
#include "kc/thresholds/thresholds.hpp"

namespace kc::thresholds {

namespace {

using numeric::IntPoly;
using numeric::Ordering;
using Q = ExactScalar;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Exact comparisons that remember the largest interval precision they needed.
struct Comparer {
  int bits = 0;
  Ordering cmp(const Q& a, const Q& b) {
    const numeric::Comparison c = numeric::exact_compare(a, b);
    bits = std::max(bits, c.precision_bits);
    return c.verdict;
  }
  bool lt(const Q& a, const Q& b) { return cmp(a, b) == Ordering::less; }
  bool gt(const Q& a, const Q& b) { return cmp(a, b) == Ordering::greater; }
  int sign(const Q& a) {
    const Ordering o = cmp(a, Q());
    return o == Ordering::less ? -1 : (o == Ordering::equal ? 0 : 1);
  }
};

Certificate start(const std::string& id, const std::string& anchor, nlohmann::json params) {
  Certificate c;
  c.claim_id = id;
  c.anchor = anchor;
  c.params = std::move(params);
  return c;
}

nlohmann::json scalar_json(const Q& x) { return {{"exact", x.to_string()}, {"decimal", x.to_decimal(12)}}; }

// Certificate of p > 0 on n >= n0, folded into `out` under `key`.
void attach_ray(Certificate& out, const std::string& key, const IntPoly& p, long n0) {
  const Certificate r = numeric::poly_positive_on_ray(p, n0, out.claim_id + "." + key);
  out.witnesses["ray"][key] = {{"polynomial", p.to_string()}, {"n0", n0}, {"verdict", to_string(r.verdict)},
                               {"method", r.witnesses["method"]}};
  if (!r.holds()) out.fail("ray certificate failed: " + key, to_json(r));
}

IntPoly lin(long a, long b) { return IntPoly::linear(a, b); }

mpq_class ratio_of(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  const std::size_t w = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

ThresholdRow threshold_row(int m) {
  ThresholdRow r;
  r.m = m;
  r.n = 2 * m;
  r.lambda1 = lambda1(r.n, 4);
  r.lambda2 = lambda2(r.n, 4);
  r.lambda3 = lambda3(r.n);
  r.lambda0 = r.lambda1;
  r.dominant = "lambda1";
  if (r.lambda2 > r.lambda0) {
    r.lambda0 = r.lambda2;
    r.dominant = "lambda2";
  }
  if (r.lambda3 > r.lambda0) {
    r.lambda0 = r.lambda3;
    r.dominant = "lambda3";
  }
  r.lambda_final = lambda_final(m);
  r.verdict = r.lambda0 < r.lambda_final ? Verdict::holds : Verdict::fails;
  return r;
}

ThresholdTable verify_threshold_table(int m_min, int m_max, int workers) {
  if (m_min < 6 || m_min % 2 != 0) throw std::domain_error("m_min must be even and >= 6");
  if (m_max < m_min) throw std::domain_error("empty m range");
  Timer timer;
  ThresholdTable t;
  t.certificate = start("thresholds.table", "final pinching bound against the maximum of the three thresholds",
                        {{"m_min", m_min}, {"m_max", m_max}, {"parity", "even"}});
  std::vector<int> ms;
  for (int m = m_min; m <= m_max; m += 2) ms.push_back(m);
  t.rows.resize(ms.size());
  parallel_for(ms.size(), workers, [&](std::size_t i) { t.rows[i] = threshold_row(ms[i]); });

  Certificate& c = t.certificate;
  Comparer cmp;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const ThresholdRow& r = t.rows[i];
    if (!(r.lambda0 == r.lambda2))
      c.fail("maximum is not lambda2", {{"m", r.m}, {"dominant", r.dominant}, {"lambda0", scalar_json(r.lambda0)}});
    if (!cmp.lt(r.lambda0, r.lambda_final))
      c.fail("lambda0 >= lambda(m)", {{"m", r.m}, {"lambda0", scalar_json(r.lambda0)},
                                      {"lambda_final", scalar_json(r.lambda_final)}});
    if (i > 0 && !cmp.lt(r.lambda_final, t.rows[i - 1].lambda_final))
      c.fail("lambda(m) not decreasing", {{"m", r.m}});
  }
  const Certificate chain = verify_chain(10, std::min(2 * m_max, 1000));
  c.witnesses["chain"] = {{"verdict", to_string(chain.verdict)}, {"ray", chain.witnesses["ray"]}};
  if (!chain.holds()) c.fail("chain inequalities", to_json(chain));
  c.witnesses["rows"] = t.rows.size();
  if (!t.rows.empty()) {
    c.witnesses["first"] = {{"m", t.rows.front().m}, {"lambda0", scalar_json(t.rows.front().lambda0)},
                            {"lambda_final", scalar_json(t.rows.front().lambda_final)}};
  }
  c.precision_bits = std::max(cmp.bits, chain.precision_bits);
  c.runtime_ms = timer.ms();
  return t;
}

Certificate dominance_scan(int m_min, int m_max) {
  if (m_min < 2 || m_max < m_min) throw std::domain_error("invalid m range");
  Timer timer;
  Certificate c = start("thresholds.lambda0", "which threshold attains the maximum; claimed to be lambda2 from m = 6 on",
                        {{"m_min", m_min}, {"m_max", m_max}});
  nlohmann::json others = nlohmann::json::array();
  for (int m = m_min; m <= m_max; ++m) {
    const ThresholdRow r = threshold_row(m);
    if (r.dominant != "lambda2") {
      others.push_back({{"m", m}, {"dominant", r.dominant}, {"lambda0", scalar_json(r.lambda0)},
                        {"lambda2", scalar_json(r.lambda2)}});
      if (m >= 6) c.fail("maximum is not lambda2", others.back());
    }
  }
  c.witnesses["not_lambda2"] = others;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_monotonicity(int n, int k_max) {
  if (k_max < 3) throw std::domain_error("k_max must be >= 3");
  Timer timer;
  Certificate c = start("thresholds.monotone", "lambda1 and lambda2 decrease in k, with the auxiliary sequences",
                        {{"n", n}, {"k_min", 2}, {"k_max", k_max}});
  Comparer cmp;
  std::vector<PestovConstants> pc;
  for (int k = 1; k <= k_max; ++k) pc.push_back(pestov_constants(n, k));
  auto at = [&](int k) -> const PestovConstants& { return pc[static_cast<std::size_t>(k - 1)]; };
  // s_{n,k} = (n+2k-2) beta / alpha
  auto s = [&](int k) { return Q(static_cast<long>(n + 2 * k - 2)) * at(k).beta / at(k).alpha; };
  auto dga = [&](int k) { return at(k).delta * at(k).gamma / at(k).alpha; };
  auto third = [&](int k) {
    return Q(static_cast<long>(n + 2 * k - 2)) / at(k).alpha +
           Q(2) * Q(mpq_class(n + 2 * k - 4, n + 2 * k - 2));
  };

  int checked = 0;
  Q l1_prev = lambda1(n, 2), l2_prev = lambda2(n, 2);
  auto positive = [&](const Q& v, const char* what, int k) {
    if (cmp.sign(v) <= 0) c.fail(std::string(what) + " not positive", {{"n", n}, {"k", k}, {"value", scalar_json(v)}});
  };
  positive(l1_prev, "lambda1", 2);
  positive(l2_prev, "lambda2", 2);
  for (int k = 2; k <= k_max; ++k) {
    const Q sk = s(k);
    const Q want = Q(n - 1) * (Q(4) + Q(mpq_class(mpz_class(n - 2) * (n - 2), mpz_class(k) * (n + k - 2))));
    if (!(sk * sk == want)) c.fail("closed form of s^2", {{"n", n}, {"k", k}, {"s2", (sk * sk).to_string()}});
    if (k == k_max) break;
    const Q l1 = lambda1(n, k + 1), l2 = lambda2(n, k + 1);
    positive(l1, "lambda1", k + 1);
    positive(l2, "lambda2", k + 1);
    auto dec = [&](const Q& next, const Q& cur, const char* name) {
      if (!cmp.lt(next, cur))
        c.fail(std::string(name) + " not decreasing",
               {{"n", n}, {"k", k}, {"at_k", scalar_json(cur)}, {"at_k_plus_1", scalar_json(next)}});
    };
    dec(l1, l1_prev, "lambda1");
    dec(l2, l2_prev, "lambda2");
    dec(s(k + 1), sk, "s");
    dec(dga(k + 1), dga(k), "(n+2k-4)gamma/alpha");
    dec(third(k + 1), third(k), "(n+2k-2)/alpha + 2(n+2k-4)/(n+2k-2)");
    l1_prev = l1;
    l2_prev = l2;
    ++checked;
  }
  c.witnesses["steps_checked"] = checked;
  c.witnesses["lambda1_at_k_max"] = scalar_json(l1_prev);
  c.witnesses["lambda2_at_k_max"] = scalar_json(l2_prev);
  c.precision_bits = cmp.bits;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_chain(int n_min, int n_max) {
  if (n_min < 4) throw std::domain_error("n_min must be >= 4");
  Timer timer;
  Certificate c = start("thresholds.chain", "rational lower bounds for 1/lambda_i - 1 and their ordering",
                        {{"n_min", n_min}, {"n_max", n_max}});
  // a1/b1 > a2/b2 > a3/b3 after cross-multiplication (denominators positive on the ray).
  const IntPoly a1 = lin(6, 6), b1 = lin(44, 43);
  const IntPoly a2 = lin(9, -18), b2 = lin(86, 190);
  const IntPoly a3 = lin(14, -26), b3 = lin(154, 131);
  attach_ray(c, "denominator_1", b1, n_min);
  attach_ray(c, "denominator_2", b2, n_min);
  attach_ray(c, "denominator_3", b3, n_min);
  attach_ray(c, "first", a1 * b2 - a2 * b1, n_min);
  attach_ray(c, "second", a2 * b3 - a3 * b2, n_min);

  Comparer cmp;
  int swept = 0;
  for (int n = n_min + (n_min % 2); n <= n_max; n += 2) {
    const mpq_class q(n);
    auto bound = [&](const IntPoly& a, const IntPoly& b) { return Q(mpq_class(a(q) / b(q))); };
    const Q one(1);
    auto check = [&](const Q& lam, const Q& lo, const char* name) {
      if (!cmp.gt(one / lam - one, lo)) c.fail(std::string(name) + " lower bound", {{"n", n}});
    };
    check(lambda1(n, 4), bound(a1, b1), "lambda1");
    check(lambda3(n), bound(a2, b2), "lambda3");
    check(lambda2(n, 4), bound(a3, b3), "lambda2");
    ++swept;
  }
  c.witnesses["swept_n"] = swept;
  c.precision_bits = cmp.bits;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_side_claims() {
  Timer timer;
  Certificate c = start("thresholds.side_claims", "elementary numeric inequalities used in the final chain", {});
  Comparer cmp;
  const Q lhs1 = Q(16) * Q::sqrt(mpq_class(2));
  const Q rhs1 = Q::fraction(68, 3);
  const Q lhs2 = Q(64) / Q::sqrt(mpq_class(3));
  const Q rhs2(37);
  if (!cmp.lt(lhs1, rhs1)) c.fail("16 sqrt2 < 68/3", scalar_json(lhs1));
  if (!cmp.lt(lhs2, rhs2)) c.fail("64/sqrt3 < 37", scalar_json(lhs2));
  c.witnesses["16sqrt2"] = scalar_json(lhs1);
  c.witnesses["64/sqrt3"] = scalar_json(lhs2);
  // sqrt((n+2)(n-1)) < n + 1/2 on n >= 2: both sides positive there, so squaring is legal.
  const long n0 = 2;
  const IntPoly radicand = lin(1, 2) * lin(1, -1);
  const IntPoly right = IntPoly::linear(1, mpq_class(1, 2));
  attach_ray(c, "radicand_positive", radicand, n0);
  attach_ray(c, "right_side_positive", right, n0);
  attach_ray(c, "squared", right * right - radicand, n0);
  c.precision_bits = cmp.bits;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_gamma_bracket(int n_max) {
  Timer timer;
  Certificate c = start("thresholds.gamma_bracket", "two-sided bound on gamma at k = 4", {{"n_min", 3}, {"n_max", n_max}});
  // gamma_{n,4} = 4(n+2)(n+4) / (3(n+1)(n+6))
  const IntPoly num = lin(1, 2) * lin(1, 4);
  const IntPoly den = lin(1, 1) * lin(1, 6);
  attach_ray(c, "denominator", den, 3);
  attach_ray(c, "upper", den - num, 3);
  attach_ray(c, "lower", num - lin(1, 0) * lin(1, 6), 3);
  for (int n = 3; n <= n_max; ++n) {
    const mpq_class q(n);
    const mpq_class g = mpq_class(4 * num(q)) / (3 * den(q));
    if (!(g < mpq_class(4, 3) && g > mpq_class(4 * q) / (3 * (q + 1)))) c.fail("bracket", {{"n", n}});
    if (n >= 4 && n % 2 == 0 && !(pestov_constants(n, 4).gamma == Q(g)))
      c.fail("closed form of gamma_{n,4}", {{"n", n}});
  }
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_rank_ratio_bound(int n_max) {
  Timer timer;
  Certificate c = start("thresholds.rank_ratio", "contraction ratio of rank-r projectors against the looser constant",
                        {{"n_min", 8}, {"n_max", n_max}});
  attach_ray(c, "loose_vs_tight", lin(1, -2) * lin(1, 4) - lin(1, -4) * lin(1, 2), 8);
  int cases = 0;
  for (int n = 8; n <= n_max; n += 2) {
    const mpq_class tight = ratio_of(n - 4, static_cast<long>(n) * (n + 4));
    const mpq_class loose = ratio_of(n - 2, static_cast<long>(n) * (n + 2));
    for (int r = 1; 2 * r <= n / 2 - 2; ++r) {
      const mpq_class ratio = ratio_of(2L * r, static_cast<long>(n) * (n - 2 * r));
      if (!(ratio <= tight && tight <= loose))
        c.fail("ratio bound", {{"n", n}, {"r", r}});
      ++cases;
    }
  }
  c.witnesses["cases"] = cases;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_roots(int n_min, int n_max, int k_min, int k_max) {
  if (k_min < 2) throw std::domain_error("k_min must be >= 2");
  Timer timer;
  Certificate c = start("thresholds.roots", "lambda1 and lambda2 are the roots of B and B + C/2",
                        {{"n_min", n_min}, {"n_max", n_max}, {"k_min", k_min}, {"k_max", k_max}});
  Comparer cmp;
  const std::vector<Q> probes{Q(0), Q::fraction(1, 4), Q::fraction(1, 2), Q::fraction(3, 4), Q(1)};
  int cases = 0;
  for (int n = n_min + (n_min % 2); n <= n_max; n += 2) {
    for (int k = k_min; k <= k_max; ++k) {
      const nlohmann::json at{{"n", n}, {"k", k}};
      const auto [b, cc] = [&] {
        try {
          return assemble_bc(n, k);
        } catch (const AssemblyMismatch& e) {
          c.fail(e.what(), at);
          return std::make_pair(b_coeff(n, k), c_coeff(n, k));
        }
      }();
      const AffineInLambda bc = b + cc * Q::fraction(1, 2);
      const Q l1 = lambda1(n, k), l2 = lambda2(n, k);
      if (!b.at(l1).is_zero()) c.fail("B(lambda1) != 0", at);
      if (!bc.at(l2).is_zero()) c.fail("(B + C/2)(lambda2) != 0", at);
      if (!(b.root() == l1)) c.fail("root of B differs from lambda1", at);
      if (!(bc.root() == l2)) c.fail("root of B + C/2 differs from lambda2", at);
      for (const Q& lam : probes) {
        if (cmp.sign(b.at(lam)) != cmp.sign(lam - l1)) c.fail("sign of B", at);
        if (cmp.sign(bc.at(lam)) != cmp.sign(lam - l2)) c.fail("sign of B + C/2", at);
      }
      ++cases;
    }
  }
  c.witnesses["cases"] = cases;
  c.precision_bits = cmp.bits;
  c.runtime_ms = timer.ms();
  return c;
}

Certificate verify_final_constants(int m_min, int m_max) {
  Timer timer;
  Certificate c = start("thresholds.final_constants", "closed-form pinching bound, its monotonicity and limit",
                        {{"m_min", m_min}, {"m_max", m_max}});
  const Q l6 = lambda_final(6);
  const std::string dec = l6.to_decimal(12);
  c.witnesses["lambda6"] = {{"exact", l6.to_string()}, {"decimal", dec}};
  if (!(l6 == Q(mpq_class(1979, 2121)))) c.fail("lambda(6) != 1979/2121", scalar_json(l6));
  if (dec.rfind("0.9330", 0) != 0) c.fail("decimal prefix of lambda(6)", dec);
  const Q limit = Q::fraction(11, 12);
  Comparer cmp;
  Q prev_l, prev_gap;
  for (int m = m_min; m <= m_max; m += 2) {
    const Q l = lambda_final(m);
    const Q gap = l - limit;
    if (!(gap == Q(mpq_class(417, 12L * (336L * m + 105))))) c.fail("gap closed form", {{"m", m}});
    if (!cmp.gt(l, limit)) c.fail("lambda(m) <= 11/12", {{"m", m}});
    if (m > m_min) {
      if (!cmp.lt(l, prev_l)) c.fail("lambda(m) not decreasing", {{"m", m}});
      if (!cmp.lt(gap, prev_gap)) c.fail("gap not decreasing", {{"m", m}});
    }
    prev_l = l;
    prev_gap = gap;
  }
  c.witnesses["limit"] = limit.to_string();
  c.witnesses["gap_closed_form"] = "417/(12(336m+105))";
  c.witnesses["gap_at_m_max"] = scalar_json(prev_gap);
  c.precision_bits = cmp.bits;
  c.runtime_ms = timer.ms();
  return c;
}

}  // namespace kc::thresholds
