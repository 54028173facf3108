#include <stdexcept>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

int component_count(int n, Space s) {
  switch (s) {
    case Space::scalar: return 1;
    case Space::vector: return n;
    case Space::sym2:
    case Space::matrix: return n * n;
  }
  return 0;
}

void check_compatible(const PolySection& f, const PolySection& g) {
  if (f.n != g.n || f.size() != g.size()) throw std::invalid_argument("sections live in different spaces");
}

}  // namespace

std::string to_string(Space s) {
  switch (s) {
    case Space::scalar: return "scalar";
    case Space::vector: return "vector";
    case Space::sym2: return "sym2";
    case Space::matrix: return "matrix";
  }
  return "unknown";
}

PolySection::PolySection(int n_, Space space_)
    : n(n_), space(space_), comp(static_cast<std::size_t>(component_count(n_, space_)), Poly(n_)) {}

PolySection PolySection::from_scalar(const Poly& p) {
  PolySection s(p.nvars(), Space::scalar);
  s.comp[0] = p;
  return s;
}

bool PolySection::is_zero() const {
  for (const auto& p : comp)
    if (!p.is_zero()) return false;
  return true;
}

PolySection PolySection::operator+(const PolySection& o) const {
  check_compatible(*this, o);
  PolySection r = *this;
  for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] += o.comp[i];
  return r;
}

PolySection PolySection::operator-(const PolySection& o) const {
  check_compatible(*this, o);
  PolySection r = *this;
  for (std::size_t i = 0; i < comp.size(); ++i) r.comp[i] -= o.comp[i];
  return r;
}

PolySection PolySection::operator*(const mpq_class& s) const {
  PolySection r = *this;
  for (auto& p : r.comp) p = p * s;
  return r;
}

mpq_class l2_inner(const PolySection& f, const PolySection& g) {
  check_compatible(f, g);
  mpq_class s = 0;
  for (std::size_t i = 0; i < f.comp.size(); ++i) s += integrate_product(f.comp[i], g.comp[i]);
  return s;
}

mpq_class l2_norm2(const PolySection& f) { return l2_inner(f, f); }

mpq_class fischer_inner(const PolySection& f, const PolySection& g) {
  check_compatible(f, g);
  mpq_class s = 0;
  for (std::size_t i = 0; i < f.comp.size(); ++i) s += fischer_inner(f.comp[i], g.comp[i]);
  return s;
}

PolySection degree_project(const PolySection& f, int k) {
  PolySection r = f;
  for (auto& p : r.comp) p = degree_project(p, k);
  return r;
}

int sphere_degree(const PolySection& f) {
  int d = -1;
  for (const auto& p : f.comp) d = std::max(d, sphere_degree(p));
  return d;
}

bool is_harmonic_of_degree(const PolySection& f, int k) {
  for (const auto& p : f.comp) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() != k || !p.laplacian().is_zero()) return false;
  }
  return true;
}

}  // namespace kc::fiber
