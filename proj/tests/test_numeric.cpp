#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "kc/numeric/certificate.hpp"
#include "kc/numeric/exact_scalar.hpp"
#include "kc/numeric/int_poly.hpp"
#include "kc/numeric/ray_certificate.hpp"

using namespace kc::numeric;
using kc::Certificate;
using kc::Verdict;

namespace {

ExactScalar q(long a, long b = 1) { return ExactScalar(mpq_class(a, b)); }
ExactScalar rt(long a) { return ExactScalar::sqrt(mpq_class(a)); }

}  // namespace

TEST(ExactScalar, SqrtIsReducedToSquarefree) {
  EXPECT_EQ(rt(12), q(2) * rt(3));
  EXPECT_EQ(ExactScalar::sqrt(mpq_class(1, 2)), q(1, 2) * rt(2));
  EXPECT_EQ(rt(6) * rt(10), q(2) * rt(15));
  EXPECT_EQ(rt(49), q(7));
  EXPECT_TRUE(rt(0).is_zero());
  EXPECT_EQ(rt(616).to_string(), "2*sqrt(154)");
}

TEST(ExactScalar, DivisionRationalizes) {
  EXPECT_EQ(q(1) / (rt(2) + rt(3)), rt(3) - rt(2));
  const ExactScalar a = q(3, 7) + q(2) * rt(5) - rt(30);
  const ExactScalar b = q(1) + rt(2) + rt(3) + rt(6) * q(5);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(a / ExactScalar(), std::domain_error);
}

TEST(ExactScalar, NestedRadicalRejected) {
  const ExactScalar inner = q(5) + q(2) * rt(6);
  EXPECT_THROW(ExactScalar::sqrt(inner), NestedRadicalError);
  EXPECT_THROW(ExactScalar::sqrt(mpq_class(-1)), std::domain_error);
  EXPECT_EQ(ExactScalar::sqrt(q(9, 4)), q(3, 2));
}

TEST(ExactScalar, CompareExamples) {
  EXPECT_EQ(exact_compare(q(16) * rt(2), q(68, 3)).verdict, Ordering::less);
  EXPECT_EQ(exact_compare(q(64) / rt(3), q(37)).verdict, Ordering::less);
  const ExactScalar x = q(3, 7) + q(2) * rt(5);
  const Comparison c = exact_compare(x, x);
  EXPECT_EQ(c.verdict, Ordering::equal);
  EXPECT_EQ(c.precision_bits, 0);
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 decided by cancellation
  EXPECT_EQ(exact_compare((rt(2) + rt(3)) * (rt(2) + rt(3)), q(5) + q(2) * rt(6)).verdict, Ordering::equal);
}

TEST(ExactScalar, CloseValuesNeedMorePrecision) {
  // sqrt(10^12 + 1) - 10^6 is about 5e-7; against its rational neighbour 1/(2*10^6)
  const ExactScalar a = ExactScalar::sqrt(mpq_class(mpz_class("1000000000001"))) - q(1000000);
  const ExactScalar b = ExactScalar(mpq_class(1, 2000000));
  const Comparison c = exact_compare(a, b);
  EXPECT_EQ(c.verdict, Ordering::less);
  EXPECT_GE(c.precision_bits, 64);
}

TEST(ExactScalar, DecimalRendering) {
  EXPECT_EQ(q(1979, 2121).to_decimal(12), "0.933050447902");
  EXPECT_EQ(rt(2).to_decimal(12), "1.41421356237");
  EXPECT_EQ(q(-25, 2).to_decimal(4), "-12.50");
  EXPECT_EQ(q(123456).to_decimal(3), "123000");
  EXPECT_EQ((q(3, 7) + q(2) * rt(5) - rt(30)).to_string(), "3/7 + 2*sqrt(5) - sqrt(30)");
}

namespace {

// Random expression tree evaluated exactly and by interval arithmetic in lockstep.
struct Node {
  ExactScalar exact;
  std::function<DyadicInterval(mpfr_prec_t)> interval;
};

Node random_leaf(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 9) + 1;
  static const long rads[] = {1, 2, 3, 5, 6, 7, 10, 12, 18, 30};
  const long d = rads[rng() % 10];
  const mpq_class c(num, den);
  Node n{ExactScalar(c) * ExactScalar::sqrt(mpq_class(d)), nullptr};
  n.interval = [c, d](mpfr_prec_t p) { return DyadicInterval(c, p) * DyadicInterval(mpq_class(d), p).sqrt(); };
  return n;
}

Node random_tree(std::mt19937_64& rng, int depth) {
  if (depth == 0) return random_leaf(rng);
  Node a = random_tree(rng, depth - 1);
  Node b = random_tree(rng, depth - 1);
  const int op = static_cast<int>(rng() % 4);
  Node r;
  if (op == 3 && (b.exact.is_zero() || b.exact.term_count() > 4)) {
    b = random_leaf(rng);
    while (b.exact.is_zero()) b = random_leaf(rng);
  }
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

}  // namespace

TEST(ExactScalarProperty, EnclosureSoundness) {
  std::mt19937_64 rng(20240611);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Node n = random_tree(rng, static_cast<int>(rng() % 3) + 1);
    for (mpfr_prec_t p : {32, 64, 128, 256}) {
      DyadicInterval iv(p);
      try {
        iv = n.interval(p);
      } catch (const std::domain_error&) {
        continue;  // divisor enclosure straddled zero at this precision
      }
      EXPECT_NE(exact_compare(n.exact, ExactScalar(iv.lower_exact())).verdict, Ordering::less) << n.exact.to_string();
      EXPECT_NE(exact_compare(n.exact, ExactScalar(iv.upper_exact())).verdict, Ordering::greater) << n.exact.to_string();
      EXPECT_GE(n.exact.enclose(p).width_log2(), n.exact.enclose(4 * p).width_log2());
      ++checked;
    }
  }
  EXPECT_GE(checked, 3000);
}

TEST(ExactScalarProperty, RationalValuesAreContained) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Node a = random_leaf(rng);
    const mpq_class r(static_cast<long>(rng() % 100) - 50, static_cast<long>(rng() % 7) + 1);
    const ExactScalar x = a.exact * a.exact + ExactScalar(r);  // rational
    ASSERT_TRUE(x.is_rational());
    for (mpfr_prec_t p : {24, 53, 64, 200}) {
      const DyadicInterval iv = a.interval(p) * a.interval(p) + DyadicInterval(r, p);
      EXPECT_TRUE(iv.contains(x.rational_value()));
      EXPECT_TRUE(x.enclose(p).contains(x.rational_value()));
    }
  }
}

TEST(ExactScalarProperty, ComparisonAntisymmetricAndTransitive) {
  std::mt19937_64 rng(99);
  auto flip = [](Ordering o) {
    return o == Ordering::less ? Ordering::greater : (o == Ordering::greater ? Ordering::less : Ordering::equal);
  };
  for (int trial = 0; trial < 400; ++trial) {
    ExactScalar x[3];
    for (auto& v : x) {
      v = random_leaf(rng).exact + random_leaf(rng).exact;
      if (rng() % 5 == 0) v = x[0];  // force some ties
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        EXPECT_EQ(exact_compare(x[i], x[j]).verdict, flip(exact_compare(x[j], x[i]).verdict));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (x[i] <= x[j] && x[j] <= x[k]) {
            EXPECT_TRUE(x[i] <= x[k]);
          }
  }
}

TEST(IntPoly, ArithmeticAndShift) {
  const IntPoly p({mpq_class(-2), mpq_class(0), mpq_class(1)});  // n^2 - 2
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(mpq_class(3)), 7);
  const IntPoly s = p.taylor_shift(1);  // (t+1)^2 - 2 = t^2 + 2t - 1
  EXPECT_EQ(s, IntPoly({mpq_class(-1), mpq_class(2), mpq_class(1)}));
  EXPECT_EQ(p.derivative(), IntPoly({mpq_class(0), mpq_class(2)}));
  IntPoly qq, rr;
  (p * p).divmod(p, qq, rr);
  EXPECT_EQ(qq, p);
  EXPECT_TRUE(rr.is_zero());
  EXPECT_EQ(p.to_string(), "n^2 - 2");
}

TEST(IntPoly, SquarefreeAndSturm) {
  const IntPoly a = IntPoly::linear(1, -1) * IntPoly::linear(1, -1) * IntPoly::linear(1, 3);  // (n-1)^2 (n+3)
  EXPECT_EQ(squarefree_part(a), IntPoly::linear(1, -1) * IntPoly::linear(1, 3));
  const auto chain = sturm_chain(squarefree_part(a));
  EXPECT_EQ(count_roots(chain, -10, 10), 2);
  EXPECT_EQ(count_roots_above(chain, 0), 1);
  EXPECT_EQ(count_roots_above(chain, 1), 0);
}

TEST(RayCertificate, ChainInequalitiesArePositive) {
  const IntPoly first = IntPoly::linear(6, 6) * IntPoly::linear(86, 190) - IntPoly::linear(9, -18) * IntPoly::linear(44, 43);
  const IntPoly second = IntPoly::linear(9, -18) * IntPoly::linear(154, 131) - IntPoly::linear(14, -26) * IntPoly::linear(86, 190);
  const Certificate c1 = poly_positive_on_ray(first, 10);
  const Certificate c2 = poly_positive_on_ray(second, 10);
  EXPECT_TRUE(c1.holds());
  EXPECT_TRUE(c2.holds());
  // margin at n = 10 is 72*1671 - 114*1050 = 612
  EXPECT_EQ(second(10), 612);
  for (long n = 10; n <= 10000; ++n) {
    ASSERT_GT(first(n), 0);
    ASSERT_GT(second(n), 0);
  }
}

TEST(RayCertificate, CounterexampleInsideSignChange) {
  const RayResult r = decide_ray_positivity(IntPoly::linear(1, -20), 10);
  EXPECT_FALSE(r.positive);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_GT(*r.counterexample, 10);
  EXPECT_LT(*r.counterexample, 20);
  const Certificate c = poly_positive_on_ray(IntPoly::linear(1, -20), 10);
  EXPECT_EQ(c.verdict, Verdict::fails);
  EXPECT_TRUE(c.witnesses.contains("failures"));
}

TEST(RayCertificate, SturmPathAndTouchingRoot) {
  // (n-15)^2 + 1 has a negative shift coefficient at n0 = 10 but no real root.
  const IntPoly p = IntPoly::linear(1, -15) * IntPoly::linear(1, -15) + IntPoly::constant(1);
  const RayResult r = decide_ray_positivity(p, 10);
  EXPECT_TRUE(r.positive);
  EXPECT_EQ(r.method, "sturm");
  // (n^2 - 200)^2 touches zero at sqrt(200) without changing sign.
  const IntPoly t = IntPoly({mpq_class(-200), mpq_class(0), mpq_class(1)});
  const RayResult rt2 = decide_ray_positivity(t * t, 10);
  EXPECT_FALSE(rt2.positive);
  ASSERT_TRUE(rt2.touching_root.has_value());
  EXPECT_LT(rt2.touching_root->first * rt2.touching_root->first, 200);
  EXPECT_GE(rt2.touching_root->second * rt2.touching_root->second, 200);
}

TEST(RayCertificateProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = static_cast<int>(rng() % 6) + 1;
    IntPoly p = IntPoly::constant(mpq_class(static_cast<long>(rng() % 5) + 1));
    for (int i = 0; i < deg; ++i) {
      const long root = static_cast<long>(rng() % 400) - 100;
      p = p * IntPoly::linear(rng() % 2 ? 1 : -1, -root);
    }
    p = p + IntPoly::constant(mpq_class(static_cast<long>(rng() % 2000) - 1000));
    const long n0 = static_cast<long>(rng() % 50);
    const RayResult r = decide_ray_positivity(p, n0);
    bool brute_positive = true;
    for (long n = n0; n <= n0 + 10000 && brute_positive; ++n) brute_positive = p(n) > 0;
    if (r.positive) {
      EXPECT_TRUE(brute_positive) << p.to_string();
    } else {
      if (r.counterexample) {
        EXPECT_GE(*r.counterexample, n0);
        EXPECT_LE(p(*r.counterexample), 0) << p.to_string();
      } else {
        EXPECT_TRUE(r.touching_root.has_value());
      }
    }
    if (!brute_positive) {
      EXPECT_FALSE(r.positive) << p.to_string();
    }
  }
}

TEST(Certificate, JsonRoundTrip) {
  Certificate c;
  c.claim_id = "numeric.demo";
  c.anchor = "demo";
  c.params = {{"n", 10}};
  c.fail("bad", {{"x", "1/2"}});
  c.precision_bits = 128;
  c.seed = 42;
  const Certificate back = kc::certificate_from_json(kc::to_json(c));
  EXPECT_EQ(kc::to_json(back), kc::to_json(c));
  EXPECT_EQ(back.verdict, Verdict::fails);
}
