#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace kc::numeric {

/**
 * Closed interval [lo, hi] with MPFR endpoints at a fixed working precision.
 * Every operation rounds lo toward -inf and hi toward +inf, so the result
 * always encloses the exact value of the same expression on exact inputs.
 */
class DyadicInterval {
 public:
  explicit DyadicInterval(mpfr_prec_t bits = 64);
  DyadicInterval(const mpq_class& q, mpfr_prec_t bits);
  DyadicInterval(const DyadicInterval& o);
  DyadicInterval(DyadicInterval&& o) noexcept;
  DyadicInterval& operator=(const DyadicInterval& o);
  DyadicInterval& operator=(DyadicInterval&& o) noexcept;
  ~DyadicInterval();

  mpfr_prec_t precision() const { return bits_; }

  DyadicInterval operator+(const DyadicInterval& o) const;
  DyadicInterval operator-(const DyadicInterval& o) const;
  DyadicInterval operator*(const DyadicInterval& o) const;
  /// Throws std::domain_error if `o` contains zero.
  DyadicInterval operator/(const DyadicInterval& o) const;
  DyadicInterval operator-() const;
  /// Throws std::domain_error if the interval reaches below zero.
  DyadicInterval sqrt() const;

  bool contains(const mpq_class& q) const;
  bool contains(const DyadicInterval& o) const;
  bool positive() const;  ///< lo > 0
  bool negative() const;  ///< hi < 0
  bool contains_zero() const { return !positive() && !negative(); }

  double lower() const;
  double upper() const;
  mpq_class lower_exact() const;
  mpq_class upper_exact() const;
  /// log2 of the width, or a large negative number for a point interval.
  double width_log2() const;
  /// Midpoint rendered with `digits` significant decimal digits.
  std::string midpoint_string(int digits) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  mpfr_prec_t bits_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace kc::numeric
