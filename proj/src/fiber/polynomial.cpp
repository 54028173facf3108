#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

constexpr int kBits = 5;
constexpr Monomial kMask = (Monomial{1} << kBits) - 1;

void check_vars(int n) {
  if (n < 1 || n > kMaxVars) throw std::domain_error("polynomials support 1 to 12 variables");
}

mpz_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

Monomial make_monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) throw std::domain_error("too many variables");
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw std::domain_error("exponent out of range");
    m |= static_cast<Monomial>(exponents[i]) << (kBits * i);
  }
  return m;
}

int exponent(Monomial m, int var) { return static_cast<int>((m >> (kBits * var)) & kMask); }

int monomial_degree(Monomial m, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += exponent(m, i);
  return d;
}

Poly::Poly(int nvars) : n_(nvars) { check_vars(nvars); }

Poly Poly::constant(int nvars, const mpq_class& c) {
  Poly p(nvars);
  mpq_class v = c;
  v.canonicalize();
  p.add_term(0, v);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  p.add_term(Monomial{1} << (kBits * i), 1);
  return p;
}

Poly Poly::radius2(int nvars) {
  Poly p(nvars);
  for (int i = 0; i < nvars; ++i) p.add_term(Monomial{2} << (kBits * i), 1);
  return p;
}

void Poly::add_term(Monomial m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

mpq_class Poly::coeff(const std::vector<int>& exponents) const {
  const auto it = terms_.find(make_monomial(exponents));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m, n_));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int e = monomial_degree(m, n_);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(n_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m, n_) == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("polynomials in different variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("polynomials in different variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomials in different variable counts");
  Poly r(n_);
  const bool safe = degree() + o.degree() <= kMaxExponent;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      if (!safe) {
        for (int i = 0; i < n_; ++i)
          if (exponent(m1, i) + exponent(m2, i) > kMaxExponent) throw std::overflow_error("exponent overflow");
      }
      r.add_term(m1 + m2, c1 * c2);
    }
  }
  return r;
}

Poly Poly::operator*(const mpq_class& s) const {
  if (sgn(s) == 0) return Poly(n_);
  mpq_class f = s;
  f.canonicalize();
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c *= f;
  return r;
}

Poly Poly::mul_var(int i) const {
  Poly r(n_);
  const Monomial step = Monomial{1} << (kBits * i);
  for (const auto& [m, c] : terms_) {
    if (exponent(m, i) == kMaxExponent) throw std::overflow_error("exponent overflow");
    r.terms_.emplace(m + step, c);
  }
  return r;
}

Poly Poly::diff(int i) const {
  Poly r(n_);
  const Monomial step = Monomial{1} << (kBits * i);
  for (const auto& [m, c] : terms_) {
    const int e = exponent(m, i);
    if (e > 0) r.terms_.emplace(m - step, c * e);
  }
  return r;
}

Poly Poly::laplacian() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      const int e = exponent(m, i);
      if (e >= 2) r.add_term(m - (Monomial{2} << (kBits * i)), c * (e * (e - 1)));
    }
  }
  return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("point has the wrong dimension");
  mpq_class s = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < n_; ++i)
      for (int e = exponent(m, i); e > 0; --e) t *= v[static_cast<std::size_t>(i)];
    s += t;
  }
  return s;
}

double Poly::eval(const curvature::Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("point has the wrong dimension");
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < n_; ++i) {
      const int e = exponent(m, i);
      if (e > 0) t *= std::pow(v(i), e);
    }
    s += t;
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < n_; ++i) {
      const int e = exponent(m, i);
      if (e == 1) os << "*v" << i + 1;
      if (e > 1) os << "*v" << i + 1 << "^" << e;
    }
  }
  return os.str();
}

mpq_class fischer_inner(const Poly& p, const Poly& q) {
  mpq_class s = 0;
  const Poly& small = p.terms().size() <= q.terms().size() ? p : q;
  const Poly& large = &small == &p ? q : p;
  for (const auto& [m, c] : small.terms()) {
    const auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    mpz_class w = 1;
    for (int i = 0; i < p.nvars(); ++i) w *= factorial(exponent(m, i));
    s += c * it->second * w;
  }
  return s;
}

std::vector<Poly> harmonic_decomposition(const Poly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("harmonic decomposition needs a homogeneous polynomial");
  const int n = p.nvars();
  const int d = p.degree();
  if (d <= 1) return {p};
  const std::vector<Poly> g = harmonic_decomposition(p.laplacian());
  std::vector<Poly> h(static_cast<std::size_t>(d / 2 + 1), Poly(n));
  Poly rest = p;
  Poly r2m = Poly::constant(n, 1);
  const Poly r2 = Poly::radius2(n);
  for (int m = 1; m <= d / 2; ++m) {
    r2m = r2m * r2;
    if (static_cast<std::size_t>(m - 1) >= g.size()) break;
    const long scale = 2L * m * (2L * m + n - 2 + 2L * (d - 2 * m));
    h[static_cast<std::size_t>(m)] = g[static_cast<std::size_t>(m - 1)] * mpq_class(1, scale);
    rest -= r2m * h[static_cast<std::size_t>(m)];
  }
  h[0] = rest;
  return h;
}

Poly degree_project(const Poly& p, int k) {
  Poly out(p.nvars());
  const int d = p.degree();
  for (int e = k; e <= d; e += 2) {
    const Poly part = p.homogeneous_part(e);
    if (part.is_zero()) continue;
    out += harmonic_decomposition(part)[static_cast<std::size_t>((e - k) / 2)];
  }
  return out;
}

int sphere_degree(const Poly& p) {
  int best = -1;
  const int d = p.degree();
  for (int e = 0; e <= d; ++e) {
    const Poly part = p.homogeneous_part(e);
    if (part.is_zero() || e <= best) continue;
    const std::vector<Poly> h = harmonic_decomposition(part);
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (!h[j].is_zero()) {
        best = std::max(best, e - 2 * static_cast<int>(j));
        break;
      }
    }
  }
  // parts of equal parity combine on the sphere, so cancellation across degrees is possible
  for (int k = best; k >= 0; --k)
    if (!degree_project(p, k).is_zero()) return k;
  return -1;
}

bool equal_on_sphere(const Poly& p, const Poly& q) { return sphere_degree(p - q) == -1; }

}  // namespace kc::fiber
