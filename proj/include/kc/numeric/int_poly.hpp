#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace kc::numeric {

/**
 * Univariate polynomial with rational coefficients, low degree first.
 * Trailing zeros are trimmed, so the zero polynomial has no coefficients.
 */
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::vector<mpq_class> coeffs);
  static IntPoly constant(const mpq_class& c) { return IntPoly({c}); }
  /// The monomial c*n^d.
  static IntPoly monomial(const mpq_class& c, int d);
  /// a*n + b
  static IntPoly linear(const mpq_class& a, const mpq_class& b) { return IntPoly({b, a}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scaled(const mpq_class& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly derivative() const;
  /// p(x + a)
  IntPoly taylor_shift(const mpq_class& a) const;
  /// Euclidean division; throws on a zero divisor.
  void divmod(const IntPoly& d, IntPoly& q, IntPoly& r) const;
  IntPoly monic() const;

  std::string to_string(const std::string& var = "n") const;

 private:
  std::vector<mpq_class> c_;
  void trim();
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// p / gcd(p, p'), monic
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<IntPoly> sturm_chain(const IntPoly& p);
/// Number of distinct real roots of p in (a, b], p squarefree or not.
int count_roots(const std::vector<IntPoly>& chain, const mpq_class& a, const mpq_class& b);
/// Number of distinct real roots in (a, +inf).
int count_roots_above(const std::vector<IntPoly>& chain, const mpq_class& a);
/// Upper bound on the absolute value of every complex root (Cauchy).
mpq_class root_bound(const IntPoly& p);

}  // namespace kc::numeric
