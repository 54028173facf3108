#include "kc/thresholds/thresholds.hpp"

namespace kc::thresholds {

namespace {

using Q = ExactScalar;

Q frac(long a, long b) { return Q::fraction(a, b); }

const AffineInLambda kLam = AffineInLambda::lambda();
const AffineInLambda kOne = AffineInLambda::constant(1);

// (3l-2)/4, (1-l), (1+l)
AffineInLambda three_l_minus_two() { return kLam * Q(3) - kOne * Q(2); }
AffineInLambda one_minus_l() { return kOne - kLam; }
AffineInLambda one_plus_l() { return kOne + kLam; }

void check_k2(int k) {
  if (k < 2) throw std::domain_error("k must be >= 2");
}

}  // namespace

AffineInLambda b_coeff(int n, int k) {
  const PestovConstants c = pestov_constants(n, k);
  return three_l_minus_two() * (c.alpha * frac(1, 4)) - one_minus_l() * (c.beta * frac(8, 3)) -
         one_plus_l() * frac(1, 2);
}

AffineInLambda c_coeff(int n, int k) {
  check_k2(k);
  const PestovConstants c = pestov_constants(n, k);
  const PestovConstants p = pestov_constants(n, k - 1);
  const AffineInLambda bracket = three_l_minus_two() * (p.alpha * frac(1, 2)) -
                                 one_minus_l() * (p.beta * frac(8, 3)) - one_plus_l() * frac(29, 48) -
                                 one_plus_l() * (p.delta * frac(1, 4));
  return bracket * c.gamma - one_plus_l() * (c.delta * frac(1, 2));
}

ExactScalar lambda1(int n, int k) {
  check_k2(k);
  const PestovConstants c = pestov_constants(n, k);
  return (Q(6) * c.alpha + Q(32) * c.beta + Q(6)) / (Q(9) * c.alpha + Q(32) * c.beta - Q(6));
}

ExactScalar lambda2(int n, int k) {
  check_k2(k);
  const PestovConstants c = pestov_constants(n, k);
  const PestovConstants p = pestov_constants(n, k - 1);
  const Q num = Q(6) * c.alpha + Q(32) * c.beta + Q(6) +
                c.gamma * (Q(6) * p.alpha + Q(16) * p.beta + frac(29, 8) + frac(3, 2) * p.delta) + Q(3) * c.delta;
  const Q den = Q(9) * c.alpha + Q(32) * c.beta - Q(6) +
                c.gamma * (Q(9) * p.alpha + Q(16) * p.beta - frac(29, 8) - frac(3, 2) * p.delta) - Q(3) * c.delta;
  return num / den;
}

ExactScalar lambda3(int n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("n must be an even integer >= 4");
  const Q s = Q::sqrt(mpq_class(2L * n * (n - 1)));
  const Q t = frac(6L * n, n + 2);
  return (Q(6L * n) + Q(16) * s + t) / (Q(9L * n) + Q(16) * s - t);
}

ExactScalar lambda3_substituted_display_root(int n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("n must be an even integer >= 4");
  const Q s = Q::sqrt(mpq_class(2L * n * (n - 1)));
  const AffineInLambda f = three_l_minus_two() * frac(n, 2) - one_minus_l() * (s * frac(8, 3)) -
                           one_plus_l() * frac(n - 2, 2L * (n + 2));
  return f.root();
}

Derivation derive_bc(int n, int k) {
  check_k2(k);
  const PestovConstants c = pestov_constants(n, k);
  const PestovConstants p = pestov_constants(n, k - 1);
  Derivation d;
  auto note = [&](const std::string& name, const std::string& value) { d.steps.emplace_back(name, value); };

  // Young's inequality with eps = 6l/(1+l): (1+l)*eps = 6l exactly, so the J-gradient
  // term 3l/4 - (1+l)/2 * eps/4 cancels; 1/(4 eps) is bounded by its value at l = 2/3.
  const AffineInLambda one_plus_l_eps = kLam * Q(6);
  const AffineInLambda jgrad = kLam * frac(3, 4) - one_plus_l_eps * frac(1, 8);
  if (!(jgrad == AffineInLambda{})) throw AssemblyMismatch("J-gradient terms do not cancel: " + jgrad.to_string());
  const Q eps_min = Q(6) * frac(2, 3) / (Q(1) + frac(2, 3));
  const Q young = Q(1) / (Q(4) * eps_min);
  note("eps_min", eps_min.to_string());
  note("young_constant", young.to_string());

  // Lower bound for the X_+ term of a degree k-1 TM-valued section (p = 1).
  const AffineInLambda xplus_f =
      three_l_minus_two() * (p.alpha * frac(1, 4)) - one_minus_l() * (p.beta * (Q(4) * Q(1) / Q(3))) -
      one_plus_l() * (frac(1, 2) * (frac(1, 2) + young));
  const AffineInLambda xplus_iota = -(one_plus_l() * (p.delta * frac(1, 8)));
  note("xplus_norm_coeff", xplus_f.to_string());
  note("xplus_contraction_coeff", xplus_iota.to_string());

  // f = iota_v u: iota_{Jv} f = 0 and |iota_v f| <= |f|, the contraction coefficient being
  // nonpositive; the X_- term dominates twice the X_+ term of f.
  const AffineInLambda bracket = (xplus_f + xplus_iota) * Q(2);
  note("xminus_bracket", bracket.to_string());

  // Ratio of the X_- coefficient in the Pestov identity to the one in the X_- bound.
  const Q pestov_xminus = Q(mpq_class(mpz_class(n + k - 2) * (n + 2 * k - 4), n + k - 3));
  const Q bound_xminus = Q(mpq_class(mpz_class(k - 1) * (n + 2 * k - 2), k));
  const Q gamma = pestov_xminus / bound_xminus;
  if (!(gamma == c.gamma)) throw AssemblyMismatch("gamma ratio " + gamma.to_string() + " != " + c.gamma.to_string());
  note("gamma", gamma.to_string());

  // Upper bound of the right-hand side on |u|^2: curvature pairing, trace-free part with
  // p = 2 (E = S^2), and the G pairing |u|^2 + delta |iota_v u|^2 weighted by (1+l)/2.
  const int p_s2 = 2;
  const AffineInLambda rhs_u = -(three_l_minus_two() * (c.alpha * frac(1, 4))) +
                               one_minus_l() * (c.beta * Q(4L * p_s2) / Q(3)) + one_plus_l() * frac(1, 2);
  const AffineInLambda rhs_iota = one_plus_l() * (c.delta * frac(1, 2));

  d.B = -rhs_u;
  d.C = bracket * gamma - rhs_iota;
  note("B", d.B.to_string());
  note("C", d.C.to_string());
  return d;
}

std::pair<AffineInLambda, AffineInLambda> assemble_bc(int n, int k) {
  const Derivation d = derive_bc(n, k);
  const AffineInLambda b = b_coeff(n, k);
  const AffineInLambda c = c_coeff(n, k);
  auto check = [&](const char* name, const ExactScalar& got, const ExactScalar& want) {
    if (!(got == want))
      throw AssemblyMismatch(std::string(name) + " at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": derived " + got.to_string() + ", closed form " + want.to_string());
  };
  check("B constant term", d.B.c0, b.c0);
  check("B lambda coefficient", d.B.c1, b.c1);
  check("C constant term", d.C.c0, c.c0);
  check("C lambda coefficient", d.C.c1, c.c1);
  return {d.B, d.C};
}

AffineInLambda assemble_k2(int n) {
  const PestovConstants c = pestov_constants(n, 2);
  const Q rho = Q(mpq_class(n - 2, static_cast<long>(n) * (n + 2)));
  return b_coeff(n, 2) - one_plus_l() * (c.delta * rho * frac(1, 2));
}

ExactScalar lambda0(int m) {
  const int n = 2 * m;
  Q best = lambda1(n, 4);
  const Q l2 = lambda2(n, 4);
  const Q l3 = lambda3(n);
  if (l2 > best) best = l2;
  if (l3 > best) best = l3;
  return best;
}

ExactScalar lambda_final(int m) {
  if (m < 1) throw std::domain_error("m must be positive");
  return Q(mpq_class(308L * m + 131, 336L * m + 105));
}

}  // namespace kc::thresholds
