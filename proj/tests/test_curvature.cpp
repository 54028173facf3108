#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "kc/curvature/curvature.hpp"

using namespace kc::curvature;

namespace {

QVec qvec(std::initializer_list<long> v) {
  QVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Vec random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

}  // namespace

TEST(ComplexStructure, CanonicalAndRandomAreValid) {
  const auto c = ComplexStructure::canonical(6);
  EXPECT_TRUE(c.valid());
  EXPECT_EQ(c.J(1, 0), 1.0);
  EXPECT_EQ(c.J(0, 1), -1.0);
  EXPECT_TRUE(ComplexStructure::random(8, 3).valid(1e-12));
  EXPECT_THROW(ComplexStructure::canonical(5), std::domain_error);
  EXPECT_THROW(ComplexStructure::random(8, 3).integer_form(), std::domain_error);
}

TEST(GWedgeG, SignAndSymmetriesExact) {
  const auto gg = g_wedge_g_exact(4);
  EXPECT_EQ(gg.eval(qvec({1, 0, 0, 0}), qvec({0, 1, 0, 0}), qvec({0, 1, 0, 0}), qvec({1, 0, 0, 0})), -1);
  EXPECT_EQ(gg.symmetry_residual(), 0);
  EXPECT_EQ(gg.bianchi_residual(), 0);
}

TEST(ComplexHyperbolic, BothConstructionsAgreeExactly) {
  for (int n : {4, 6, 8}) {
    const auto J = ComplexStructure::canonical(n).integer_form();
    const auto a = complex_hyperbolic_g_exact(J);
    const auto b = complex_hyperbolic_g_exact_endomorphism(J);
    EXPECT_TRUE(a == b) << n;
    EXPECT_EQ(a.symmetry_residual(), 0);
    EXPECT_EQ(a.bianchi_residual(), 0);
    EXPECT_EQ(a.kahler_residual(J), 0);
  }
}

TEST(ComplexHyperbolic, HolomorphicCurvatureIsExactlyMinusOne) {
  const auto J = ComplexStructure::canonical(4).integer_form();
  const auto G = complex_hyperbolic_g_exact(J);
  // X = (1, 2, -3, 1)/|.|; H is scale invariant after dividing by |X|^4
  const QVec x = qvec({1, 2, -3, 1});
  QVec jx(4);
  for (int i = 0; i < 4; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < 4; ++j) s += J[i][j] * x[j];
    jx[i] = s;
  }
  mpq_class norm2 = 0;
  for (const auto& v : x) norm2 += v * v;
  mpq_class h = G.eval(x, jx, jx, x) / (norm2 * norm2);
  h.canonicalize();
  EXPECT_EQ(h, -1);
  // orthonormal pair with <X, JY> = 0 gives -1/4
  EXPECT_EQ(G.eval(qvec({1, 0, 0, 0}), qvec({0, 0, 1, 0}), qvec({0, 0, 1, 0}), qvec({1, 0, 0, 0})),
            mpq_class(-1, 4));
}

TEST(ComplexHyperbolic, FloatMatchesExactAndIsInvariantUnderRandomJ) {
  const auto c = ComplexStructure::canonical(6);
  const CurvatureTensor a = complex_hyperbolic_g(c);
  const CurvatureTensor b = complex_hyperbolic_g_exact(c.integer_form()).to_float();
  EXPECT_LE((a - b).norm(), 1e-14);
  const auto r = ComplexStructure::random(6, 11);
  const CurvatureTensor g = complex_hyperbolic_g(r);
  EXPECT_LE((g - complex_hyperbolic_g_endomorphism(r)).norm(), 1e-12);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) EXPECT_NEAR(g.holomorphic(random_unit(rng, 6), r.J), -1.0, 1e-13);
  EXPECT_LE(g.kahler_residual(r.J), 1e-13);
}

TEST(CurvatureTensor, EndomorphismAndPartialMatchEval) {
  const auto c = ComplexStructure::canonical(4);
  const CurvatureTensor g = complex_hyperbolic_g(c);
  std::mt19937_64 rng(9);
  const Vec x = random_unit(rng, 4), y = random_unit(rng, 4), z = random_unit(rng, 4), w = random_unit(rng, 4);
  EXPECT_NEAR((g.endomorphism(x, y) * z).dot(w), g.eval(x, y, z, w), 1e-14);
  EXPECT_NEAR(g.partial(0, y, z, w).dot(x), g.eval(x, y, z, w), 1e-14);
  EXPECT_NEAR(g.partial(2, x, y, w).dot(z), g.eval(x, y, z, w), 1e-14);
  EXPECT_NEAR(g.partial(3, x, y, z).dot(w), g.eval(x, y, z, w), 1e-14);
}

TEST(R0, VanishesForGAtLambdaOne) {
  const auto c = ComplexStructure::canonical(4);
  const CurvatureTensor g = complex_hyperbolic_g(c);
  EXPECT_LE(r0_decompose(g, 1.0, c).norm(), 1e-15);
  EXPECT_THROW(r0_decompose(g, 1.0, ComplexStructure::canonical(6)), std::invalid_argument);
  CurvatureTensor plain = g;
  plain.kahler = false;
  EXPECT_THROW(r0_decompose(plain, 1.0, c), std::invalid_argument);
}

TEST(Projections, AreIdempotentAndProduceCurvatureTensors) {
  const auto c = ComplexStructure::canonical(4);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  CurvatureTensor r(4);
  for (auto& v : r.data()) v = g(rng);
  const CurvatureTensor s = project_pair_symmetric(r);
  EXPECT_LE((project_pair_symmetric(s) - s).norm(), 1e-13);
  EXPECT_LE(s.symmetry_residual(), 1e-14);
  const CurvatureTensor b = project_bianchi(s);
  EXPECT_LE(b.bianchi_residual(), 1e-13);
  EXPECT_LE(b.symmetry_residual(), 1e-13);
  const CurvatureTensor k = project_kahler(s, c.J);
  EXPECT_LE(k.kahler_residual(c.J), 1e-13);
  EXPECT_LE((project_kahler(k, c.J) - k).norm(), 1e-13);
}

TEST(Optimizer, HolomorphicExtremaOfGAreMinusOne) {
  const auto c = ComplexStructure::random(6, 2);
  const CurvatureTensor g = complex_hyperbolic_g(c);
  const Extrema e = holomorphic_extrema(g, c.J, 4, 3);
  EXPECT_NEAR(e.min.value, -1.0, 1e-12);
  EXPECT_NEAR(e.max.value, -1.0, 1e-12);
}

TEST(Optimizer, StrataOfGHitTheirExactValues) {
  const auto c = ComplexStructure::canonical(6);
  const CurvatureTensor g = complex_hyperbolic_g(c);
  // for G the stratum value is -(1 + 3 cos^2)/4
  for (int i = 0; i <= 4; ++i) {
    const double theta = i * std::numbers::pi / 8;
    const Extrema e = stratum_extrema(g, c.J, theta, 3, 10 + i);
    const double expect = -(1.0 + 3.0 * std::cos(theta) * std::cos(theta)) / 4.0;
    EXPECT_NEAR(e.min.value, expect, 1e-12) << theta;
    EXPECT_NEAR(e.max.value, expect, 1e-12) << theta;
  }
  const Extrema s = sectional_extrema(g, 6, 4);
  EXPECT_NEAR(s.min.value, -1.0, 1e-9);
  EXPECT_NEAR(s.max.value, -0.25, 1e-9);
  EXPECT_TRUE(s.min.converged);
  EXPECT_LE(s.max.projected_grad_norm, 1e-8);
}

TEST(Optimizer, MaximizesAQuadraticOnTheSphere) {
  // max of x^T A x on the unit sphere is the top eigenvalue
  Mat a(3, 3);
  a << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  ManifoldProblem p;
  p.f = [&](const Vec& x) { return x.dot(a * x); };
  p.grad = [&](const Vec& x) { return Vec(2 * a * x); };
  p.constraint_jacobian = [](const Vec& x) { return Mat(x.transpose()); };
  p.retract = [](const Vec& x) { return Vec(x.normalized()); };
  const OptimResult r = maximize(p, Vec::Ones(3).normalized());
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, Eigen::SelfAdjointEigenSolver<Mat>(a).eigenvalues()(2), 1e-12);
  EXPECT_LE(project_gradient(p, r.x).norm(), 1e-9);
}

TEST(Generator, LambdaOneReturnsG) {
  const GeneratedTensor t = random_pinched_kahler(4, 1.0, 42, 8);
  EXPECT_LE((t.R - complex_hyperbolic_g(t.J)).norm(), 1e-9);
}

TEST(Generator, HolomorphicRangeIsCalibrated) {
  const GeneratedTensor t = random_pinched_kahler(8, 0.95, 42, 32);
  EXPECT_LE(t.projection_residual, 1e-12);
  EXPECT_LE(t.R.kahler_residual(t.J.J), 1e-12);
  EXPECT_NEAR(t.h_min, -1.0, 1e-6);
  EXPECT_NEAR(t.h_max, -0.95, 1e-6);
  // dense sampling never leaves the optimized range
  std::mt19937_64 rng(77);
  double lo = 0.0, hi = -2.0;
  for (int s = 0; s < 20000; ++s) {
    const double h = t.R.holomorphic(random_unit(rng, 8), t.J.J);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  EXPECT_GE(lo, t.h_min - 1e-9);
  EXPECT_LE(hi, t.h_max + 1e-9);
}

TEST(Generator, RejectsBadArguments) {
  EXPECT_THROW(random_pinched_kahler(5, 0.9, 1), std::domain_error);
  EXPECT_THROW(random_pinched_kahler(4, 0.0, 1), std::domain_error);
  EXPECT_THROW(random_pinched_kahler(4, 1.5, 1), std::domain_error);
}

TEST(Pinching, BishopGoldbergOnGeneratedTensor) {
  const GeneratedTensor t = random_pinched_kahler(4, 0.95, 7, 16);
  const PinchReport r = verify_bishop_goldberg(t.R, t.J, 0.95, 16, 1e-7, 7);
  EXPECT_TRUE(r.certificate.holds()) << kc::to_json(r.certificate).dump();
  EXPECT_EQ(r.strata.size(), 5u);
  EXPECT_GE(r.sec_min, -1.0 - 1e-7);
  EXPECT_LE(r.sec_max, -(3 * 0.95 - 2) / 4 + 1e-7);
}

TEST(Pinching, BishopGoldbergDetectsAViolation) {
  // G is 1-pinched; claiming lambda above 1 must fail on the holomorphic range
  const auto c = ComplexStructure::canonical(4);
  const CurvatureTensor g = complex_hyperbolic_g(c) * 1.2;
  CurvatureTensor scaled = g;
  scaled.kahler = true;
  const PinchReport r = verify_bishop_goldberg(scaled, c, 0.95, 4, 1e-7, 1);
  EXPECT_EQ(r.certificate.verdict, kc::Verdict::fails);
}

TEST(Pinching, R0BoundOnGeneratedTensor) {
  const GeneratedTensor t = random_pinched_kahler(4, 0.95, 8, 16);
  const auto cert = verify_r0_bound(t.R, t.J, 0.95, 500, 8, 1e-7, 8);
  EXPECT_TRUE(cert.holds()) << kc::to_json(cert).dump();
}

TEST(Derivation, BasisDimensionsAndOrthonormality) {
  const CurvatureTensor g = complex_hyperbolic_g(ComplexStructure::canonical(4));
  const auto ext = derivation_extend(g, 2, TensorSpace::exterior);
  const auto sym = derivation_extend(g, 2, TensorSpace::symmetric);
  const auto ext3 = derivation_extend(g, 3, TensorSpace::exterior);
  EXPECT_EQ(ext.basis().cols(), 6);
  EXPECT_EQ(sym.basis().cols(), 10);
  EXPECT_EQ(ext3.basis().cols(), 4);
  for (const auto* a : {&ext, &sym, &ext3}) {
    const Mat gram = a->basis().transpose() * a->basis();
    EXPECT_LE((gram - Mat::Identity(gram.rows(), gram.cols())).norm(), 1e-13);
  }
  EXPECT_THROW(derivation_extend(g, 0, TensorSpace::exterior), std::domain_error);
  EXPECT_THROW(derivation_extend(g, 4, TensorSpace::symmetric), std::domain_error);
}

TEST(Derivation, PreservesSubspaceAndIsSkew) {
  const CurvatureTensor g = complex_hyperbolic_g(ComplexStructure::canonical(4));
  std::mt19937_64 rng(3);
  for (TensorSpace s : {TensorSpace::exterior, TensorSpace::symmetric}) {
    const auto act = derivation_extend(g, 2, s);
    const Vec x = random_unit(rng, 4), y = random_unit(rng, 4);
    const Vec w = act.project(random_unit(rng, 16)), e = act.project(random_unit(rng, 16));
    const Vec dw = act.apply(x, y, w);
    EXPECT_LE((act.project(dw) - dw).norm(), 1e-13);
    EXPECT_NEAR(act.pairing(x, y, w, e), -act.pairing(x, y, e, w), 1e-13);
  }
}

TEST(Derivation, OperatorNormAtPOneIsTheMatrixNorm) {
  const CurvatureTensor g = complex_hyperbolic_g(ComplexStructure::canonical(4));
  const auto act = derivation_extend(g, 1, TensorSpace::exterior);
  std::mt19937_64 rng(4);
  const Vec x = random_unit(rng, 4), y = random_unit(rng, 4);
  const double expect = Eigen::JacobiSVD<Mat>(g.endomorphism(x, y)).singularValues()(0);
  EXPECT_NEAR(act.operator_norm(x, y), expect, 1e-13);
}

TEST(Derivation, BoundHoldsOnGeneratedTensors) {
  const GeneratedTensor t = random_pinched_kahler(4, 0.95, 21, 16);
  for (int p : {1, 2}) {
    for (TensorSpace s : {TensorSpace::exterior, TensorSpace::symmetric}) {
      const auto cert = verify_derivation_bound(t.R, t.J, 0.95, p, s, 200, 1e-7, 21);
      EXPECT_TRUE(cert.holds()) << kc::to_json(cert).dump();
    }
  }
}
