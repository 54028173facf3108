#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

using curvature::ExactCurvatureTensor;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void check_j(const IntMat& J, int n) {
  if (static_cast<int>(J.size()) != n) throw std::invalid_argument("J has the wrong dimension");
}

// sum_b J_ab v_b
std::vector<Poly> j_times_v(int n, const IntMat& J) {
  std::vector<Poly> w(static_cast<std::size_t>(n), Poly(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (J[a][b] != 0) w[static_cast<std::size_t>(a)] += Poly::variable(n, b) * mpq_class(J[a][b]);
  return w;
}

// <v, J y> for a V-valued section y
Poly v_dot_jy(const PolySection& y, const IntMat& J) {
  const int n = y.n;
  Poly s(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (J[p][q] != 0) s += y(q).mul_var(p) * mpq_class(J[p][q]);
  return s;
}

void set_out_of_range(Certificate& c, const std::string& reason) {
  c.verdict = Verdict::out_of_range;
  c.witnesses["precondition"] = reason;
}

bool is_symmetric(const PolySection& f) {
  for (int a = 0; a < f.n; ++a)
    for (int b = a + 1; b < f.n; ++b)
      if (!(f(a, b) == f(b, a))) return false;
  return true;
}

void record_sides(Certificate& c, const IdentitySides& s) {
  c.witnesses["lhs"] = s.lhs.get_str();
  c.witnesses["rhs"] = s.rhs.get_str();
  c.witnesses["lhs_decimal"] = s.lhs.get_d();
  if (s.lhs != s.rhs) c.fail("exact sides differ", {{"difference", mpq_class(s.lhs - s.rhs).get_str()}});
}

}  // namespace

IntMat quaternionic_a(int n) {
  if (n < 4 || n % 4 != 0) throw std::domain_error("quaternionic structure needs n divisible by 4");
  IntMat A(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int b = 0; b < n; b += 4) {
    // e0 -> e2, e1 -> -e3, e2 -> -e0, e3 -> e1
    A[b + 2][b] = 1;
    A[b + 3][b + 1] = -1;
    A[b][b + 2] = -1;
    A[b + 1][b + 3] = 1;
  }
  return A;
}

PolySection quaternionic_projector(int n) {
  const IntMat A = quaternionic_a(n);
  const IntMat J = curvature::ComplexStructure::canonical(n).integer_form();
  std::vector<Poly> av(static_cast<std::size_t>(n), Poly(n)), jav(static_cast<std::size_t>(n), Poly(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (A[a][b] != 0) av[static_cast<std::size_t>(a)] += Poly::variable(n, b) * mpq_class(A[a][b]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (J[a][b] != 0) jav[static_cast<std::size_t>(a)] += av[static_cast<std::size_t>(b)] * mpq_class(J[a][b]);
  PolySection pi(n, Space::sym2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      pi(a, b) = av[static_cast<std::size_t>(a)] * av[static_cast<std::size_t>(b)] +
                 jav[static_cast<std::size_t>(a)] * jav[static_cast<std::size_t>(b)];
  return pi;
}

PolySection quaternionic_trace_free(int n) {
  PolySection u = quaternionic_projector(n);
  const Poly shift = Poly::radius2(n) * mpq_class(2, n);
  for (int a = 0; a < n; ++a) u(a, a) -= shift;
  return u;
}

IdentitySides g_identity_tm_sides(const PolySection& f, int k, const IntMat& J) {
  if (f.space != Space::vector) throw std::invalid_argument("the tangent identity needs a V-valued section");
  const int n = f.n;
  check_j(J, n);
  const ExactCurvatureTensor G = curvature::complex_hyperbolic_g_exact(J);
  const std::vector<PolySection> grad = vertical_gradient(f);
  IdentitySides s;
  // sum_a G(v, grad f_a, f, e_a) = sum_{j,a} (grad f_a)_j W_ja with W_ja = sum_{i,l} G_ijla v_i f_l
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) {
      Poly w(n);
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          const mpq_class& g = G(i, j, l, a);
          if (sgn(g) != 0) w += f(l).mul_var(i) * g;
        }
      s.lhs += integrate_product(grad[static_cast<std::size_t>(a)](j), w);
    }
  }
  const mpq_class delta = n + 2 * k - 4;
  const mpq_class iv = l2_norm2(iota_v(f));
  const mpq_class ijv = l2_norm2(iota_jv(f, J));
  mpq_class cross = 0;
  for (int a = 0; a < n; ++a) {
    Poly fje(n);
    for (int b = 0; b < n; ++b)
      if (J[b][a] != 0) fje += f(b) * mpq_class(J[b][a]);
    cross += integrate_product(v_dot_jy(grad[static_cast<std::size_t>(a)], J), fje);
  }
  s.rhs = delta / 4 * (iv + ijv) + l2_norm2(f) / 2 + cross / 2;
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  return s;
}

IdentitySides g_identity_s2_sides(const PolySection& f, int k, const IntMat& J) {
  if (f.space != Space::sym2 && f.space != Space::matrix)
    throw std::invalid_argument("the S^2 identity needs a matrix section");
  const int n = f.n;
  check_j(J, n);
  const ExactCurvatureTensor G = curvature::complex_hyperbolic_g_exact(J);
  const std::vector<PolySection> grad = vertical_gradient(f);
  IdentitySides s;
  // sum_ab ([R(v, grad f_ab), f])_ab with R(X,Y)_pq = sum G_ijqp x_i y_j
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const PolySection& gab = grad[static_cast<std::size_t>(a * n + b)];
      for (int j = 0; j < n; ++j) {
        if (gab(j).is_zero()) continue;
        Poly w(n);
        for (int i = 0; i < n; ++i)
          for (int c = 0; c < n; ++c) {
            const mpq_class& g1 = G(i, j, c, a);
            if (sgn(g1) != 0) w += f(c, b).mul_var(i) * g1;
            const mpq_class& g2 = G(i, j, b, c);
            if (sgn(g2) != 0) w -= f(a, c).mul_var(i) * g2;
          }
        s.lhs += integrate_product(gab(j), w);
      }
    }
  }
  const mpq_class delta = n + 2 * k - 4;
  s.rhs = delta * l2_norm2(iota_v(f)) + l2_norm2(f);
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  return s;
}

Certificate verify_g_identity_tm(int n, const IntMat& J, const PolySection& f, int k) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "fiber.g_identity.tangent";
  c.anchor = "pairing of the complex hyperbolic curvature with the vertical gradient, TM-valued sections";
  c.params = {{"n", n}, {"k", k}};
  c.witnesses["arithmetic"] = "exact rational";
  if (f.space != Space::vector || f.n != n) {
    set_out_of_range(c, "section is not V-valued in dimension n");
  } else if (!is_harmonic_of_degree(f, k)) {
    set_out_of_range(c, "section is not harmonic of degree k");
  } else if (sphere_degree(iota_v(f)) > k - 1 || sphere_degree(iota_jv(f, J)) > k - 1) {
    set_out_of_range(c, "contractions with v and Jv exceed degree k-1");
  } else {
    record_sides(c, g_identity_tm_sides(f, k, J));
  }
  c.runtime_ms = elapsed_ms(t0);
  return c;
}

Certificate verify_g_identity_s2(int n, const IntMat& J, const PolySection& f, int k) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "fiber.g_identity.sym2";
  c.anchor = "pairing of the complex hyperbolic curvature with the vertical gradient, S^2-valued sections";
  c.params = {{"n", n}, {"k", k}};
  c.witnesses["arithmetic"] = "exact rational";
  // the conjugates -J E_ab J of the matrix units form an orthonormal basis again
  bool basis_ok = static_cast<int>(J.size()) == n;
  std::set<std::pair<int, int>> support;
  for (int a = 0; a < n && basis_ok; ++a)
    for (int b = 0; b < n && basis_ok; ++b) {
      int entries = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const int v = -J[p][a] * J[b][q];
          if (v == 0) continue;
          ++entries;
          if (v * v != 1 || !support.emplace(p, q).second) basis_ok = false;
        }
      if (entries != 1) basis_ok = false;
    }
  c.witnesses["conjugated_basis_orthonormal"] = basis_ok;
  if ((f.space != Space::sym2 && f.space != Space::matrix) || f.n != n) {
    set_out_of_range(c, "section is not S^2-valued in dimension n");
  } else if (!is_symmetric(f)) {
    set_out_of_range(c, "section is not symmetric");
  } else if (!j_commutator(f, J).is_zero()) {
    set_out_of_range(c, "section does not commute with J");
  } else if (!is_harmonic_of_degree(f, k)) {
    set_out_of_range(c, "section is not harmonic of degree k");
  } else if (sphere_degree(iota_v(f)) > k - 1) {
    set_out_of_range(c, "contraction with v exceeds degree k-1");
  } else {
    if (!basis_ok) c.fail("conjugated matrix units are not orthonormal", nullptr);
    record_sides(c, g_identity_s2_sides(f, k, J));
  }
  c.runtime_ms = elapsed_ms(t0);
  return c;
}

Certificate verify_projector_norm_ratio(int n) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "fiber.projector_norm_ratio";
  c.anchor = "L2 norm of the contraction of the trace-free part of a rank-2 complex projector field";
  c.params = {{"n", n}};
  c.witnesses["arithmetic"] = "exact rational";
  const IntMat J = curvature::ComplexStructure::canonical(n).integer_form();
  const IntMat A = quaternionic_a(n);
  const PolySection pi = quaternionic_projector(n);
  const PolySection u = quaternionic_trace_free(n);

  Poly av_v(n), av_jv(n);
  const std::vector<Poly> jv = j_times_v(n, J);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (A[a][b] == 0) continue;
      av_v += Poly::variable(n, b).mul_var(a) * mpq_class(A[a][b]);
      av_jv += jv[static_cast<std::size_t>(a)] * Poly::variable(n, b) * mpq_class(A[a][b]);
    }
  bool trace_part = true;
  const PolySection pi0 = degree_project(pi, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Poly expect = a == b ? Poly::constant(n, mpq_class(2, n)) : Poly(n);
      if (!(pi0(a, b) == expect)) trace_part = false;
    }
  const nlohmann::json checks = {
      {"Av_orthogonal_to_v", av_v.is_zero()},
      {"Av_orthogonal_to_Jv", av_jv.is_zero()},
      {"iota_v_pi_zero", iota_v(pi).is_zero()},
      {"iota_Jv_pi_zero", iota_jv(pi, J).is_zero()},
      {"commutes_with_J", j_commutator(pi, J).is_zero()},
      {"trace_part_is_2_over_n", trace_part},
      {"trace_free_part_harmonic_degree_2", is_harmonic_of_degree(u, 2)}};
  c.witnesses["checks"] = checks;
  for (const auto& [name, ok] : checks.items())
    if (!ok.get<bool>()) c.fail("witness property fails", name);

  const mpq_class num = l2_norm2(iota_v(u));
  const mpq_class den = l2_norm2(u);
  mpq_class ratio = num / den;
  ratio.canonicalize();
  mpq_class expect(2, static_cast<long>(n) * (n - 2));
  expect.canonicalize();
  c.witnesses["iota_v_norm2"] = num.get_str();
  c.witnesses["norm2"] = den.get_str();
  c.witnesses["ratio"] = ratio.get_str();
  c.witnesses["expected"] = expect.get_str();
  if (ratio != expect) c.fail("ratio differs from 2/(n(n-2))", ratio.get_str());
  c.runtime_ms = elapsed_ms(t0);
  return c;
}

std::vector<mpq_class> pairing_moments(const PolySection& f) {
  const int n = f.n;
  const std::size_t n2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<Poly> s(n2, Poly(n));
  for (const auto& comp : f.comp) {
    if (comp.is_zero()) continue;
    const PolySection y = vertical_gradient(comp);
    for (int i = 0; i < n; ++i)
      for (int l = i; l < n; ++l) s[static_cast<std::size_t>(i * n + l)] += y(i) * y(l);
  }
  std::vector<mpq_class> out(n2 * n2);
  auto at = [n](int i, int j, int k, int l) { return static_cast<std::size_t>(((i * n + j) * n + k) * n + l); };
  for (int i = 0; i < n; ++i)
    for (int l = i; l < n; ++l) {
      const Poly& p = s[static_cast<std::size_t>(i * n + l)];
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const mpq_class v = sphere_integrate(p.mul_var(j).mul_var(k));
          out[at(i, j, k, l)] = v;
          out[at(l, j, k, i)] = v;
          out[at(i, k, j, l)] = v;
          out[at(l, k, j, i)] = v;
        }
    }
  return out;
}

namespace {

// int sum_alpha <v, J grad_V f_alpha>^2
mpq_class holomorphic_cross_term(const PolySection& f, const IntMat& J) {
  mpq_class x = 0;
  for (const auto& comp : f.comp) {
    if (comp.is_zero()) continue;
    const Poly p = v_dot_jy(vertical_gradient(comp), J);
    x += integrate_product(p, p);
  }
  return x;
}

}  // namespace

PairingBound curvature_pairing_sides(const curvature::CurvatureTensor& R, const PolySection& f, int k, double lambda,
                                     const IntMat& J) {
  const int n = f.n;
  if (R.dim() != n) throw std::invalid_argument("tensor and section dimensions differ");
  const std::vector<mpq_class> I = pairing_moments(f);
  PairingBound b;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk)
        for (int l = 0; l < n; ++l, ++idx)
          if (sgn(I[idx]) != 0) b.lhs += R(i, j, kk, l) * I[idx].get_d();
  const double alpha = static_cast<double>(k) * (n + k - 2);
  b.rhs = -(3.0 * lambda - 2.0) / 4.0 * alpha * l2_norm2(f).get_d() -
          0.75 * lambda * holomorphic_cross_term(f, J).get_d();
  return b;
}

IdentitySides curvature_pairing_sides_exact_g(const PolySection& f, int k, const IntMat& J) {
  const int n = f.n;
  const ExactCurvatureTensor G = curvature::complex_hyperbolic_g_exact(J);
  const std::vector<mpq_class> I = pairing_moments(f);
  IdentitySides s;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk)
        for (int l = 0; l < n; ++l, ++idx)
          if (sgn(I[idx]) != 0 && sgn(G(i, j, kk, l)) != 0) s.lhs += G(i, j, kk, l) * I[idx];
  const mpq_class alpha = static_cast<long>(k) * (n + k - 2);
  s.rhs = -alpha / 4 * l2_norm2(f) - mpq_class(3, 4) * holomorphic_cross_term(f, J);
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  return s;
}

Certificate verify_curvature_pairing_bound(int n, int k, Space E, double lambda, int trials, double tol,
                                           std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "fiber.curvature_pairing_bound";
  c.anchor = "upper bound for the curvature term of the vertical gradient under holomorphic pinching";
  c.params = {{"n", n}, {"k", k}, {"space", to_string(E)}, {"lambda", lambda}, {"trials", trials}, {"tol", tol}};
  c.seed = seed;
  c.precision_bits = 53;
  const IntMat J = curvature::ComplexStructure::canonical(n).integer_form();
  Constraints free;
  free.iota_v = false;
  double worst = std::numeric_limits<double>::infinity();
  nlohmann::json rows = nlohmann::json::array();
  for (int t = 0; t < trials; ++t) {
    const SampleResult sample = sample_admissible_section(n, k, E, free, J, seed + static_cast<std::uint64_t>(t));
    if (!sample.section) continue;
    const PolySection& f = *sample.section;
    const double norm2 = l2_norm2(f).get_d();
    if (t == 0) {
      const IdentitySides g = curvature_pairing_sides_exact_g(f, k, J);
      const mpq_class slack = g.rhs - g.lhs;
      c.witnesses["g_exact_slack"] = slack.get_str();
      if (sgn(slack) < 0) c.fail("bound fails for the complex hyperbolic tensor", slack.get_str());
    }
    const curvature::GeneratedTensor gen =
        curvature::random_pinched_kahler(n, lambda, seed + 1000 + static_cast<std::uint64_t>(t), 16);
    const PairingBound b = curvature_pairing_sides(gen.R, f, k, lambda, J);
    const double slack = (b.rhs - b.lhs) / norm2;
    worst = std::min(worst, slack);
    rows.push_back({{"trial", t}, {"lhs", b.lhs / norm2}, {"rhs", b.rhs / norm2}, {"slack", slack}});
  }
  c.witnesses["trials"] = rows;
  c.witnesses["min_normalized_slack"] = worst;
  if (worst < -tol) c.fail("bound violated", {{"min_normalized_slack", worst}});
  c.runtime_ms = elapsed_ms(t0);
  return c;
}

}  // namespace kc::fiber
