#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kc/numeric/dyadic_interval.hpp"

namespace kc::numeric {

/// Raised when a square root of an irrational value is requested.
class NestedRadicalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Squarefree radicand with its prime support (sorted ascending).
struct Radicand {
  mpz_class value;
  std::vector<mpz_class> primes;
};

/**
 * Finite sum of q_i * sqrt(d_i) with rational q_i and distinct squarefree d_i.
 * Terms are kept sorted by d_i; the rational part has d = 1. Zero is the empty sum.
 */
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : ExactScalar(mpq_class(v)) {}
  ExactScalar(long v) : ExactScalar(mpq_class(v)) {}
  ExactScalar(const mpz_class& v) : ExactScalar(mpq_class(v)) {}
  ExactScalar(const mpq_class& q);

  /// sqrt of a nonnegative rational, reduced to squarefree form.
  static ExactScalar sqrt(const mpq_class& q);
  /// Rejects irrational arguments with NestedRadicalError.
  static ExactScalar sqrt(const ExactScalar& x);
  static ExactScalar fraction(long num, long den) { return ExactScalar(mpq_class(num, den)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of sqrt(1).
  mpq_class rational_part() const;
  /// Throws std::domain_error when irrational.
  mpq_class rational_value() const;
  /// (radicand, coefficient) pairs, radicand ascending.
  std::vector<std::pair<mpz_class, mpq_class>> terms() const;
  std::size_t term_count() const { return terms_.size(); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Throws std::domain_error on division by zero.
  ExactScalar& operator/=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  /// Structural equality of canonical forms, which is equality of real values.
  bool operator==(const ExactScalar& o) const;

  DyadicInterval enclose(mpfr_prec_t bits) const;
  double to_double() const;
  /// Exact form, e.g. "3/7 + 2*sqrt(5)".
  std::string to_string() const;
  /// Positional decimal with `digits` significant digits.
  std::string to_decimal(int digits = 12) const;
  int sign() const;

 private:
  struct Term {
    mpq_class coeff;
    std::vector<mpz_class> primes;
  };
  // keyed by squarefree radicand
  std::map<mpz_class, Term> terms_;

  void add_term(const mpz_class& d, const std::vector<mpz_class>& primes, const mpq_class& c);
  ExactScalar conjugate_at(const mpz_class& p) const;
  mpz_class largest_prime() const;
};

enum class Ordering { less, equal, greater };

struct Comparison {
  Ordering verdict;
  int precision_bits;  ///< 0 when decided symbolically
};

/// Sign of a - b. Equality is decided by exact cancellation; otherwise enclosures
/// are refined from 64 bits, doubling, until they exclude zero.
Comparison exact_compare(const ExactScalar& a, const ExactScalar& b);

bool operator<(const ExactScalar& a, const ExactScalar& b);
bool operator>(const ExactScalar& a, const ExactScalar& b);
bool operator<=(const ExactScalar& a, const ExactScalar& b);
bool operator>=(const ExactScalar& a, const ExactScalar& b);

std::string to_string(Ordering o);

/// Squarefree decomposition n = s^2 * r of a positive integer.
struct SquarefreeSplit {
  mpz_class square_root;
  Radicand radicand;
};
SquarefreeSplit squarefree_split(const mpz_class& n);

}  // namespace kc::numeric
