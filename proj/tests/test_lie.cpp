#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "kc/lie/lie.hpp"

using namespace kc::lie;

namespace {

// size of the Weyl orbit of a weight, by closing under simple reflections
long orbit_size(const WeightLattice& L, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 0; i < L.rank(); ++i) {
        Weight v = w;
        const int c = w[static_cast<std::size_t>(i)];
        for (int j = 0; j < L.rank(); ++j) v[static_cast<std::size_t>(j)] -= c * L.cartan()[i][j];
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

mpz_class dimension_from_character(const WeightLattice& L, const Weight& hw) {
  mpz_class s = 0;
  for (const auto& [mu, m] : freudenthal(L, hw)) s += m * orbit_size(L, mu);
  return s;
}

// real 2x2 building blocks and their Kronecker products, as signed permutation data
using Mat16 = std::vector<std::vector<int>>;

Mat16 kron(const Mat16& a, const Mat16& b) {
  const std::size_t n = a.size(), m = b.size();
  Mat16 r(n * m, std::vector<int>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return r;
}

Mat16 mul(const Mat16& a, const Mat16& b) {
  const std::size_t n = a.size();
  Mat16 r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat16 scaled_identity(std::size_t n, int s) {
  Mat16 r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = s;
  return r;
}

bool anticommute(const Mat16& a, const Mat16& b) {
  const Mat16 x = mul(a, b), y = mul(b, a);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[i][j] != -y[i][j]) return false;
  return true;
}

// largest family of pairwise anticommuting complex structures among 4-fold tensor words
int largest_clifford_family(std::vector<Mat16>& best) {
  const std::vector<Mat16> blocks{{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}, {{0, 1}, {1, 0}}, {{1, 0}, {0, -1}}};
  std::vector<Mat16> cands;
  for (int w = 0; w < 256; ++w) {
    Mat16 m = blocks[static_cast<std::size_t>(w & 3)];
    for (int s = 1; s < 4; ++s) m = kron(m, blocks[static_cast<std::size_t>((w >> (2 * s)) & 3)]);
    if (mul(m, m) == scaled_identity(16, -1)) cands.push_back(m);
  }
  std::vector<std::vector<bool>> ac(cands.size(), std::vector<bool>(cands.size()));
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = 0; j < cands.size(); ++j) ac[i][j] = anticommute(cands[i], cands[j]);
  std::vector<std::size_t> cur, top;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (cur.size() > top.size()) top = cur;
    for (std::size_t i = from; i < cands.size(); ++i) {
      bool ok = true;
      for (std::size_t j : cur) ok = ok && ac[i][j];
      if (!ok) continue;
      cur.push_back(i);
      grow(i + 1);
      cur.pop_back();
    }
  };
  grow(0);
  for (std::size_t i : top) best.push_back(cands[i]);
  return static_cast<int>(top.size());
}

}  // namespace

TEST(RootSystem, PositiveRootCountsAndDimensions) {
  const std::vector<std::pair<Algebra, std::pair<int, int>>> table{
      {Algebra::g2, {6, 14}}, {Algebra::f4, {24, 52}}, {Algebra::e6, {36, 78}},
      {Algebra::e7, {63, 133}}, {Algebra::e8, {120, 248}}};
  for (const auto& [a, expect] : table) {
    const WeightLattice L(a);
    EXPECT_EQ(static_cast<int>(L.positive_roots().size()), expect.first) << to_string(a);
    EXPECT_EQ(L.dimension(), expect.second) << to_string(a);
  }
}

TEST(RootSystem, CartanMatricesMatchTables) {
  EXPECT_EQ(WeightLattice(Algebra::g2).cartan(), (std::vector<std::vector<int>>{{2, -1}, {-3, 2}}));
  EXPECT_EQ(WeightLattice(Algebra::f4).cartan(),
            (std::vector<std::vector<int>>{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  const auto e6 = WeightLattice(Algebra::e6).cartan();
  EXPECT_EQ(e6[1][3], -1);
  EXPECT_EQ(e6[0][2], -1);
  EXPECT_EQ(e6[1][2], 0);
  for (Algebra a : exceptional_algebras()) {
    const WeightLattice L(a);
    for (int i = 0; i < L.rank(); ++i)
      for (int j = 0; j < L.rank(); ++j)
        EXPECT_EQ(L.cartan()[i][j] == 0, L.cartan()[j][i] == 0);
  }
}

TEST(RootSystem, RhoPairsToOneWithSimpleCoroots) {
  for (Algebra a : exceptional_algebras()) {
    const WeightLattice L(a);
    for (int i = 0; i < L.rank(); ++i) {
      RootVec e(static_cast<std::size_t>(L.rank()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      EXPECT_EQ(L.coroot_pairing(L.rho(), e), 1) << to_string(a);
    }
    // simply laced: rho pairs with any root to its height
    if (a == Algebra::e6 || a == Algebra::e7 || a == Algebra::e8) {
      int h = 0;
      for (int c : L.positive_roots().back()) h += c;
      EXPECT_EQ(L.coroot_pairing(L.rho(), L.positive_roots().back()), h);
    }
  }
}

TEST(RootSystem, AdjointWeights) {
  EXPECT_EQ(WeightLattice(Algebra::g2).adjoint_weight(), (Weight{0, 1}));
  EXPECT_EQ(WeightLattice(Algebra::f4).adjoint_weight(), (Weight{1, 0, 0, 0}));
  EXPECT_EQ(WeightLattice(Algebra::e6).adjoint_weight(), (Weight{0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(WeightLattice(Algebra::e7).adjoint_weight(), (Weight{1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(WeightLattice(Algebra::e8).adjoint_weight(), (Weight{0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(WeylDimension, StandardValues) {
  const WeightLattice g2(Algebra::g2), f4(Algebra::f4), e6(Algebra::e6), e7(Algebra::e7), e8(Algebra::e8);
  EXPECT_EQ(weyl_dimension(g2, g2.fundamental(1)), 7);
  EXPECT_EQ(weyl_dimension(g2, g2.fundamental(2)), 14);
  EXPECT_EQ(weyl_dimension(g2, Weight{2, 0}), 27);
  EXPECT_EQ(weyl_dimension(f4, f4.fundamental(4)), 26);
  EXPECT_EQ(weyl_dimension(e6, e6.fundamental(1)), 27);
  EXPECT_EQ(weyl_dimension(e6, e6.fundamental(6)), 27);
  EXPECT_EQ(weyl_dimension(e7, e7.fundamental(7)), 56);
  EXPECT_EQ(weyl_dimension(e8, e8.fundamental(1)), 3875);
  for (Algebra a : exceptional_algebras()) {
    const WeightLattice L(a);
    EXPECT_EQ(weyl_dimension(L, L.adjoint_weight()), L.dimension()) << to_string(a);
    EXPECT_EQ(weyl_dimension(L, Weight(static_cast<std::size_t>(L.rank()), 0)), 1);
  }
}

TEST(WeylDimension, RejectsNonDominant) {
  const WeightLattice g2(Algebra::g2);
  EXPECT_THROW(weyl_dimension(g2, Weight{-1, 1}), std::domain_error);
  EXPECT_THROW(weyl_dimension(g2, Weight{1, 0, 0}), std::invalid_argument);
}

TEST(WeylDimension, AgreesWithCharacterOrbitSums) {
  const std::vector<std::pair<Algebra, Weight>> cases{
      {Algebra::g2, {1, 0}}, {Algebra::g2, {0, 1}}, {Algebra::g2, {2, 1}}, {Algebra::f4, {0, 0, 0, 1}},
      {Algebra::f4, {1, 0, 0, 0}}, {Algebra::e6, {1, 0, 0, 0, 0, 0}}, {Algebra::e6, {0, 1, 0, 0, 0, 0}},
      {Algebra::e6, {1, 0, 0, 0, 0, 1}}, {Algebra::e7, {0, 0, 0, 0, 0, 0, 1}}};
  for (const auto& [a, hw] : cases) {
    const WeightLattice L(a);
    EXPECT_EQ(dimension_from_character(L, hw), weyl_dimension(L, hw)) << to_string(a) << weight_to_string(hw);
  }
}

TEST(Freudenthal, SmallG2Characters) {
  const WeightLattice g2(Algebra::g2);
  const auto seven = freudenthal(g2, {1, 0});
  EXPECT_EQ(seven.size(), 2u);
  EXPECT_EQ(seven.at({0, 0}), 1);
  const auto adj = freudenthal(g2, {0, 1});
  EXPECT_EQ(adj.at({1, 0}), 1);
  EXPECT_EQ(adj.at({0, 0}), 2);
}

TEST(RadonHurwitz, ClosedFormValues) {
  EXPECT_EQ(radon_hurwitz(1), 1);
  EXPECT_EQ(radon_hurwitz(2), 2);
  EXPECT_EQ(radon_hurwitz(4), 4);
  EXPECT_EQ(radon_hurwitz(8), 8);
  EXPECT_EQ(radon_hurwitz(16), 9);
  EXPECT_EQ(radon_hurwitz(32), 10);
  EXPECT_EQ(radon_hurwitz(256), 17);
  for (long n = 1; n < 200; n += 2) EXPECT_EQ(radon_hurwitz(n), 1);
  EXPECT_THROW(radon_hurwitz(0), std::domain_error);
}

TEST(RadonHurwitz, CliffordFamilyOnR16) {
  std::vector<Mat16> fam;
  const int found = largest_clifford_family(fam);
  EXPECT_EQ(found, 8);
  EXPECT_EQ(found + 1, radon_hurwitz(16));
  for (const auto& m : fam) {
    Mat16 t = m;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) t[i][j] = m[j][i];
    EXPECT_EQ(mul(t, m), scaled_identity(16, 1));
  }
}

TEST(RadonHurwitz, OddFactorInvariance) {
  for (long n = 1; n <= 512; ++n)
    for (long odd : {3L, 5L, 7L, 9L, 15L, 101L}) EXPECT_EQ(radon_hurwitz(n * odd), radon_hurwitz(n));
}

TEST(RadonHurwitz, SweepBoundForPAtLeastThree) {
  for (long p = 3; p <= 10000; ++p) ASSERT_LE(radon_hurwitz(4 * p + 4), 2 * p + 3) << p;
  EXPECT_GT(radon_hurwitz(4 * 1 + 4), 2 * 1 + 3);
}

TEST(Exclusion, PrunedSearchEqualsBruteForceBoxForG2) {
  const WeightLattice g2(Algebra::g2);
  std::set<Weight> brute;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const mpz_class d = weyl_dimension(g2, {a, b});
      if (d >= 7 && d <= 15 && d % 2 != 0) brute.insert({a, b});
    }
  std::set<Weight> pruned;
  for (const auto& r : odd_irreps_in_window(g2, 7, 15)) pruned.insert(r.highest);
  EXPECT_EQ(pruned, brute);
  std::set<Weight> brute_wide, pruned_wide;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const mpz_class d = weyl_dimension(g2, {a, b});
      if (d >= 7 && d <= 300 && d % 2 != 0) brute_wide.insert({a, b});
    }
  for (const auto& r : odd_irreps_in_window(g2, 7, 300))
    if (r.highest[0] <= 4 && r.highest[1] <= 4) pruned_wide.insert(r.highest);
  EXPECT_EQ(pruned_wide, brute_wide);
}

TEST(Exclusion, SurvivorsAreExactlyE6TwiceAndG2) {
  const auto t = enumerate_exclusion_table(20);
  EXPECT_TRUE(t.cert.holds()) << kc::to_json(t.cert).dump();
  std::multiset<std::pair<std::string, long>> got;
  for (const auto& r : t.survivors) got.insert({to_string(r.irrep.algebra), r.irrep.dimension.get_si()});
  EXPECT_EQ(got, (std::multiset<std::pair<std::string, long>>{{"e6", 27}, {"e6", 27}, {"g2", 7}}));
  for (const auto& r : t.survivors) {
    if (r.irrep.algebra == Algebra::g2) {
      EXPECT_EQ(r.p, 3);
    } else {
      EXPECT_EQ(r.p, 13);
    }
  }
  bool seen_e7 = false;
  for (const auto& r : t.candidates)
    if (r.irrep.algebra == Algebra::e7) {
      seen_e7 = true;
      EXPECT_EQ(r.irrep.dimension, 133);
      EXPECT_FALSE(r.survives);
    }
  EXPECT_TRUE(seen_e7);
  EXPECT_THROW(enumerate_exclusion_table(12), std::domain_error);
}

TEST(E6Cubic, MinusculeWeights) {
  const WeightLattice e6(Algebra::e6);
  const auto w = minuscule_weights(e6, e6.fundamental(1));
  EXPECT_EQ(w.size(), 27u);
  EXPECT_THROW(minuscule_weights(e6, e6.fundamental(2)), std::domain_error);
}

TEST(E6Cubic, SquareHasNoInvariantByZeroWeightCount) {
  const WeightLattice e6(Algebra::e6);
  const auto w = minuscule_weights(e6, e6.fundamental(1));
  int zero_pairs = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i; j < w.size(); ++j) {
      bool z = true;
      for (std::size_t c = 0; c < 6; ++c) z = z && w[i][c] + w[j][c] == 0;
      zero_pairs += z;
    }
  EXPECT_EQ(zero_pairs, 0);
  const auto r = e6_cubic_report();
  EXPECT_EQ(r.trivial_in_square, 0);
  EXPECT_EQ(r.square, (std::map<Weight, mpz_class>{{{2, 0, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0, 1}, 1}}));
}

TEST(E6Cubic, CubeDecompositionAndZeroWeightBalance) {
  const WeightLattice e6(Algebra::e6);
  const auto r = e6_cubic_report();
  EXPECT_TRUE(r.cert.holds()) << kc::to_json(r.cert).dump();
  EXPECT_EQ(r.trivial_in_cube, 1);
  EXPECT_EQ(e6_cubic_invariant_dim(), 1);
  mpz_class total = 0;
  for (const auto& [hw, m] : r.cube) total += m * weyl_dimension(e6, hw);
  EXPECT_EQ(total, 3654);

  const auto w = minuscule_weights(e6, e6.fundamental(1));
  long zero_triples = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i; j < w.size(); ++j)
      for (std::size_t k = j; k < w.size(); ++k) {
        bool z = true;
        for (std::size_t c = 0; c < 6; ++c) z = z && w[i][c] + w[j][c] + w[k][c] == 0;
        zero_triples += z;
      }
  mpz_class zero_from_parts = 0;
  const Weight zero(6, 0);
  for (const auto& [hw, m] : r.cube) {
    const auto ch = freudenthal(e6, hw);
    if (ch.count(zero)) zero_from_parts += m * ch.at(zero);
  }
  EXPECT_EQ(zero_from_parts, zero_triples);
}

TEST(Decompose, GuardTrips) {
  const WeightLattice e6(Algebra::e6);
  const auto w = minuscule_weights(e6, e6.fundamental(1));
  EXPECT_THROW(decompose(e6, symmetric_power_dominant(w, 2), 100), std::runtime_error);
}
