#include <stdexcept>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

// sum_d d F_d over the homogeneous parts of F
Poly euler(const Poly& f) {
  Poly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int d = monomial_degree(m, f.nvars());
    if (d > 0) r.add_term(m, c * d);
  }
  return r;
}

bool is_matrix(Space s) { return s == Space::sym2 || s == Space::matrix; }

// sum_a w_a f_a over the first slot for linear polynomials w_a
PolySection contract_first(const PolySection& f, const std::vector<Poly>& w) {
  const int n = f.n;
  if (f.space == Space::vector) {
    Poly s(n);
    for (int a = 0; a < n; ++a) s += w[static_cast<std::size_t>(a)] * f(a);
    return PolySection::from_scalar(s);
  }
  if (!is_matrix(f.space)) throw std::invalid_argument("contraction needs a vector or matrix section");
  PolySection out(n, Space::vector);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) out(b) += w[static_cast<std::size_t>(a)] * f(a, b);
  return out;
}

std::vector<Poly> coordinate_vector(int n) {
  std::vector<Poly> v;
  for (int a = 0; a < n; ++a) v.push_back(Poly::variable(n, a));
  return v;
}

std::vector<Poly> j_times_v(int n, const IntMat& J) {
  std::vector<Poly> w(static_cast<std::size_t>(n), Poly(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (J[a][b] != 0) w[static_cast<std::size_t>(a)] += Poly::variable(n, b) * mpq_class(J[a][b]);
  return w;
}

}  // namespace

Poly vertical_laplacian(const Poly& f) {
  // on the sphere: -(r^2 Lap - E^2 - (n-2) E) applied to each homogeneous part
  const int n = f.nvars();
  const Poly r2 = Poly::radius2(n);
  Poly out(n);
  for (int d = 0; d <= f.degree(); ++d) {
    const Poly part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    out += part * mpq_class(static_cast<long>(d) * (d + n - 2));
    out -= r2 * part.laplacian();
  }
  return out;
}

PolySection vertical_laplacian(const PolySection& f) {
  PolySection r = f;
  for (auto& p : r.comp) p = vertical_laplacian(p);
  return r;
}

PolySection vertical_gradient(const Poly& f) {
  const int n = f.nvars();
  const Poly e = euler(f);
  PolySection g(n, Space::vector);
  for (int a = 0; a < n; ++a) g(a) = f.diff(a) - e.mul_var(a);
  return g;
}

std::vector<PolySection> vertical_gradient(const PolySection& f) {
  std::vector<PolySection> out;
  out.reserve(f.comp.size());
  for (const auto& p : f.comp) out.push_back(vertical_gradient(p));
  return out;
}

PolySection iota_v(const PolySection& f) { return contract_first(f, coordinate_vector(f.n)); }

PolySection iota_jv(const PolySection& f, const IntMat& J) { return contract_first(f, j_times_v(f.n, J)); }

PolySection j_apply(const PolySection& f, const IntMat& J) {
  const int n = f.n;
  if (f.space == Space::vector) {
    PolySection out(n, Space::vector);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (J[a][b] != 0) out(a) += f(b) * mpq_class(J[a][b]);
    return out;
  }
  if (!is_matrix(f.space)) throw std::invalid_argument("J acts on vector or matrix sections");
  PolySection out(n, Space::matrix);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (J[a][c] != 0)
        for (int b = 0; b < n; ++b) out(a, b) += f(c, b) * mpq_class(J[a][c]);
  return out;
}

PolySection j_commutator(const PolySection& f, const IntMat& J) {
  if (!is_matrix(f.space)) throw std::invalid_argument("commutator needs a matrix section");
  const int n = f.n;
  PolySection out(n, Space::matrix);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (J[a][c] != 0) out(a, b) += f(c, b) * mpq_class(J[a][c]);
        if (J[c][b] != 0) out(a, b) -= f(a, c) * mpq_class(J[c][b]);
      }
  return out;
}

}  // namespace kc::fiber
