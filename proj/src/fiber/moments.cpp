#include <stdexcept>
#include <unordered_map>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

// (e - 1)!! for even e, 0 for odd e
std::uint64_t even_moment_factor(int e) {
  if (e % 2 != 0) return 0;
  std::uint64_t r = 1;
  for (int i = e - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

// n (n+2) ... (n + 2m - 2)
mpz_class moment_denominator(int n, int m) {
  mpz_class r = 1;
  for (int j = 0; j < m; ++j) r *= n + 2 * j;
  return r;
}

std::uint32_t parity(Monomial m, int n) {
  std::uint32_t p = 0;
  for (int i = 0; i < n; ++i)
    if (exponent(m, i) & 1) p |= 1u << i;
  return p;
}

struct IntTerms {
  mpz_class denominator = 1;
  std::unordered_map<std::uint32_t, std::vector<std::pair<Monomial, mpz_class>>> by_parity;
};

IntTerms integer_terms(const Poly& p) {
  IntTerms out;
  for (const auto& [m, c] : p.terms()) out.denominator = lcm(out.denominator, mpz_class(c.get_den()));
  for (const auto& [m, c] : p.terms()) {
    mpz_class v = c.get_num() * (out.denominator / c.get_den());
    out.by_parity[parity(m, p.nvars())].emplace_back(m, std::move(v));
  }
  return out;
}

}  // namespace

mpq_class sphere_moment(int n, const std::vector<int>& alpha) {
  if (n < 1 || static_cast<int>(alpha.size()) != n) throw std::invalid_argument("multi-index has the wrong length");
  mpz_class num = 1;
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2 != 0) return 0;
    for (int i = a - 1; i > 1; i -= 2) num *= i;
    total += a;
  }
  mpq_class r(num, moment_denominator(n, total / 2));
  r.canonicalize();
  return r;
}

mpq_class sphere_integrate(const Poly& p) {
  const int n = p.nvars();
  std::vector<mpq_class> by_degree;
  for (const auto& [m, c] : p.terms()) {
    mpz_class num = 1;
    int total = 0;
    bool odd = false;
    for (int i = 0; i < n && !odd; ++i) {
      const int e = exponent(m, i);
      if (e % 2 != 0) odd = true;
      for (int j = e - 1; j > 1; j -= 2) num *= j;
      total += e;
    }
    if (odd) continue;
    const std::size_t half = static_cast<std::size_t>(total / 2);
    if (by_degree.size() <= half) by_degree.resize(half + 1);
    by_degree[half] += c * num;
  }
  mpq_class s = 0;
  for (std::size_t m = 0; m < by_degree.size(); ++m)
    if (sgn(by_degree[m]) != 0) s += by_degree[m] / moment_denominator(n, static_cast<int>(m));
  s.canonicalize();
  return s;
}

mpq_class integrate_product(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  if (p.nvars() != q.nvars()) throw std::invalid_argument("polynomials in different variable counts");
  const int n = p.nvars();
  const int dp = p.degree(), dq = q.degree();
  // packed exponents add field-wise only while no field can exceed 31; products beyond that
  // (and moment numerators beyond 31!!) take the general path
  if (dp + dq > kMaxExponent) return sphere_integrate(p * q);
  const IntTerms a = integer_terms(p);
  const IntTerms b = integer_terms(q);
  std::vector<std::uint64_t> factor(static_cast<std::size_t>(kMaxExponent + 1));
  for (int e = 0; e <= kMaxExponent; ++e) factor[static_cast<std::size_t>(e)] = even_moment_factor(e);
  std::vector<mpz_class> acc(static_cast<std::size_t>((dp + dq) / 2 + 1));
  mpz_class prod;
  for (const auto& [par, terms_a] : a.by_parity) {
    const auto it = b.by_parity.find(par);
    if (it == b.by_parity.end()) continue;
    for (const auto& [m1, c1] : terms_a) {
      for (const auto& [m2, c2] : it->second) {
        const Monomial g = m1 + m2;
        std::uint64_t w = 1;
        int total = 0;
        for (int i = 0; i < n; ++i) {
          const int e = exponent(g, i);
          w *= factor[static_cast<std::size_t>(e)];
          total += e;
        }
        mpz_mul(prod.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
        mpz_addmul_ui(acc[static_cast<std::size_t>(total / 2)].get_mpz_t(), prod.get_mpz_t(), w);
      }
    }
  }
  mpq_class s = 0;
  for (std::size_t m = 0; m < acc.size(); ++m)
    if (sgn(acc[m]) != 0) {
      mpq_class t(acc[m], moment_denominator(n, static_cast<int>(m)));
      t.canonicalize();
      s += t;
    }
  s /= mpq_class(a.denominator * b.denominator);
  s.canonicalize();
  return s;
}

}  // namespace kc::fiber
