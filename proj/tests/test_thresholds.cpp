#include <cmath>

#include <gtest/gtest.h>

#include "kc/thresholds/thresholds.hpp"

using namespace kc;
using namespace kc::thresholds;
using numeric::ExactScalar;
using Q = ExactScalar;

namespace {

// Plain double transcription, kept independent of the exact code path.
double f_alpha(int n, int k) { return k * (n + k - 2.0); }
double f_beta(int n, int k) { return std::sqrt(k * (n + k - 2.0) * (n - 1.0)); }
double f_gamma(int n, int k) {
  return (n + k - 2.0) * (n + 2 * k - 4.0) * k / ((n + k - 3.0) * (n + 2 * k - 2.0) * (k - 1.0));
}
double f_delta(int n, int k) { return n + 2 * k - 4.0; }
double f_c(int n, int k, double l) {
  return f_gamma(n, k) * ((3 * l - 2) / 2 * f_alpha(n, k - 1) - 8.0 / 3 * (1 - l) * f_beta(n, k - 1) -
                          29 * (1 + l) / 48 - (1 + l) / 4 * f_delta(n, k - 1)) -
         (1 + l) / 2 * f_delta(n, k);
}

}  // namespace

TEST(PestovConstants, Invariants) {
  for (int n = 4; n <= 30; n += 2) {
    for (int k = 1; k <= 8; ++k) {
      const PestovConstants c = pestov_constants(n, k);
      EXPECT_EQ(c.alpha, Q(static_cast<long>(k) * (n + k - 2)));
      EXPECT_EQ(c.beta * c.beta, Q(static_cast<long>(k) * (n + k - 2) * (n - 1)));
      EXPECT_EQ(c.delta, Q(static_cast<long>(n + 2 * k - 4)));
      EXPECT_GT(c.alpha.sign(), 0);
      EXPECT_GT(c.beta.sign(), 0);
      EXPECT_GT(c.delta.sign(), 0);
      EXPECT_EQ(c.has_gamma, k >= 2);
      if (k >= 2) {
        EXPECT_GT(c.gamma.sign(), 0);
      }
    }
  }
  EXPECT_THROW(pestov_constants(5, 2), std::domain_error);
  EXPECT_THROW(pestov_constants(2, 2), std::domain_error);
  EXPECT_THROW(pestov_constants(4, 0), std::domain_error);
}

TEST(Coefficients, BAtFourTwo) {
  EXPECT_EQ(b_coeff(4, 2).at(Q(1)), Q(1));
  for (int n = 4; n <= 20; n += 2)
    for (int k = 2; k <= 6; ++k) EXPECT_GT(b_coeff(n, k).c1.sign(), 0);
}

TEST(Coefficients, CAgainstFloatTranscription) {
  EXPECT_THROW(c_coeff(8, 1), std::domain_error);
  for (int n : {4, 12, 24})
    for (int k : {2, 3, 4, 7})
      for (double l : {0.0, 0.5, 1.0}) {
        const double exact = c_coeff(n, k).at(Q(mpq_class(static_cast<long>(l * 2), 2L))).to_double();
        EXPECT_NEAR(exact, f_c(n, k, l), 1e-10) << n << " " << k << " " << l;
      }
  EXPECT_NEAR(c_coeff(12, 4).at(Q(1)).to_double(), -1.5878442545109211, 1e-12);
  EXPECT_EQ(c_coeff(4, 2).at(Q(1)), Q(mpq_class(-142, 27)));
}

TEST(Coefficients, CNegativeAtZero) {
  for (int n = 4; n <= 100; n += 2)
    for (int k : {2, 4}) EXPECT_LT(c_coeff(n, k).at(Q(0)).sign(), 0) << n << " " << k;
}

TEST(Lambdas, KnownValues) {
  EXPECT_EQ(lambda1(12, 4).to_decimal(6), "0.879277");
  EXPECT_EQ(lambda2(12, 4).to_decimal(9), "0.929707678");
  EXPECT_EQ(lambda3(12).to_decimal(9), "0.929127848");
  EXPECT_THROW(lambda1(12, 1), std::domain_error);
}

TEST(Lambdas, RootsAreExact) {
  for (int n = 4; n <= 40; n += 2) {
    for (int k = 2; k <= 10; ++k) {
      EXPECT_TRUE(b_coeff(n, k).at(lambda1(n, k)).is_zero()) << n << " " << k;
      EXPECT_TRUE(b_plus_half_c(n, k).at(lambda2(n, k)).is_zero()) << n << " " << k;
    }
  }
}

TEST(Lambdas, Lambda3IsRootOfTheDegreeTwoAssembly) {
  for (int n = 4; n <= 60; n += 2) {
    EXPECT_EQ(assemble_k2(n).root(), lambda3(n)) << n;
    EXPECT_TRUE(assemble_k2(n).at(lambda3(n)).is_zero());
    // the substituted display drops a -(1+l)/2 term and gives a strictly smaller root
    EXPECT_LT(lambda3_substituted_display_root(n), lambda3(n));
  }
}

TEST(Assembly, MatchesClosedForms) {
  for (int n = 4; n <= 40; n += 2) {
    for (int k = 2; k <= 12; ++k) {
      const auto [b, c] = assemble_bc(n, k);
      EXPECT_EQ(b, b_coeff(n, k));
      EXPECT_EQ(c, c_coeff(n, k));
    }
  }
}

TEST(Assembly, RecordsTheIntermediateConstants) {
  const Derivation d = derive_bc(12, 4);
  bool saw_eps = false, saw_young = false;
  for (const auto& [name, value] : d.steps) {
    if (name == "eps_min") {
      saw_eps = true;
      EXPECT_EQ(value, "12/5");
    }
    if (name == "young_constant") {
      saw_young = true;
      EXPECT_EQ(value, "5/48");
    }
  }
  EXPECT_TRUE(saw_eps);
  EXPECT_TRUE(saw_young);
}

TEST(Properties, RootDualityAndConditionLogic) {
  const std::vector<Q> probes{Q(0), Q::fraction(1, 4), Q::fraction(1, 2), Q::fraction(3, 4), Q(1)};
  for (int n = 4; n <= 24; n += 4) {
    for (int k = 2; k <= 8; ++k) {
      const Q l1 = lambda1(n, k), l2 = lambda2(n, k);
      for (const Q& lam : probes) {
        EXPECT_EQ(b_coeff(n, k).at(lam).sign(), (lam - l1).sign());
        EXPECT_EQ(b_plus_half_c(n, k).at(lam).sign(), (lam - l2).sign());
        if (lam > l1 && lam > l2) {
          EXPECT_GT(b_coeff(n, k).at(lam).sign(), 0);
          EXPECT_GT(b_plus_half_c(n, k).at(lam).sign(), 0);
        }
      }
    }
  }
}

TEST(Verify, Roots) { EXPECT_TRUE(verify_roots(4, 40, 2, 12).holds()); }

TEST(Verify, MonotonicityAtTwelve) {
  const Certificate c = verify_monotonicity(12, 200);
  EXPECT_TRUE(c.holds()) << to_json(c).dump();
  EXPECT_EQ(c.witnesses["steps_checked"], 198);
}

TEST(Verify, MonotonicitySmallN) {
  EXPECT_GT(lambda1(4, 2), lambda1(4, 3));
  EXPECT_TRUE(verify_monotonicity(4, 40).holds());
  EXPECT_THROW(verify_monotonicity(4, 2), std::domain_error);
}

TEST(Verify, FinalConstants) {
  const Certificate c = verify_final_constants(6, 200);
  EXPECT_TRUE(c.holds()) << to_json(c).dump();
  EXPECT_EQ(lambda_final(6), Q(mpq_class(1979, 2121)));
  EXPECT_EQ(lambda_final(6).to_decimal(12), "0.933050447902");
  EXPECT_EQ(lambda_final(8), Q(mpq_class(865, 931)));
}

TEST(Verify, ThresholdTable) {
  const ThresholdTable t = verify_threshold_table(6, 40, 2);
  EXPECT_TRUE(t.certificate.holds()) << to_json(t.certificate).dump();
  ASSERT_EQ(t.rows.size(), 18u);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].m, 6 + 2 * static_cast<int>(i));
    EXPECT_EQ(t.rows[i].dominant, "lambda2");
    EXPECT_EQ(t.rows[i].verdict, Verdict::holds);
  }
  EXPECT_THROW(verify_threshold_table(5, 10), std::domain_error);
  EXPECT_THROW(verify_threshold_table(4, 10), std::domain_error);
}

TEST(Verify, DominanceBelowSix) {
  const Certificate c = dominance_scan(2, 30);
  EXPECT_TRUE(c.holds());
  const auto& others = c.witnesses["not_lambda2"];
  ASSERT_EQ(others.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(others[static_cast<std::size_t>(i)]["m"], i + 2);
    EXPECT_EQ(others[static_cast<std::size_t>(i)]["dominant"], "lambda3");
  }
}

TEST(Verify, ChainAndSideClaims) {
  const Certificate chain = verify_chain(10, 400);
  EXPECT_TRUE(chain.holds()) << to_json(chain).dump();
  EXPECT_EQ(chain.witnesses["ray"]["first"]["verdict"], "holds");
  EXPECT_EQ(chain.witnesses["ray"]["second"]["verdict"], "holds");
  EXPECT_TRUE(verify_side_claims().holds());
  EXPECT_TRUE(verify_gamma_bracket(500).holds());
  EXPECT_TRUE(verify_rank_ratio_bound(200).holds());
}
