#include "kc/numeric/dyadic_interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kc::numeric {

DyadicInterval::DyadicInterval(mpfr_prec_t bits) : bits_(bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

DyadicInterval::DyadicInterval(const mpq_class& q, mpfr_prec_t bits) : bits_(bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

DyadicInterval::DyadicInterval(const DyadicInterval& o) : bits_(o.bits_) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(DyadicInterval&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

DyadicInterval& DyadicInterval::operator=(const DyadicInterval& o) {
  if (this == &o) return *this;
  bits_ = o.bits_;
  mpfr_set_prec(lo_, bits_);
  mpfr_set_prec(hi_, bits_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

DyadicInterval& DyadicInterval::operator=(DyadicInterval&& o) noexcept {
  if (this == &o) return *this;
  std::swap(bits_, o.bits_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

DyadicInterval::~DyadicInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
  DyadicInterval r(std::max(bits_, o.bits_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const {
  DyadicInterval r(std::max(bits_, o.bits_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::operator-() const {
  DyadicInterval r(bits_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
  const mpfr_prec_t p = std::max(bits_, o.bits_);
  DyadicInterval r(p);
  // Four endpoint products, each rounded both ways; min of the downs and max of the ups.
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* a[2] = {&lo_, &hi_};
  const mpfr_t* b[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

DyadicInterval DyadicInterval::operator/(const DyadicInterval& o) const {
  if (o.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  const mpfr_prec_t p = std::max(bits_, o.bits_);
  DyadicInterval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* a[2] = {&lo_, &hi_};
  const mpfr_t* b[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_div(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

DyadicInterval DyadicInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of a possibly negative value");
  DyadicInterval r(bits_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool DyadicInterval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool DyadicInterval::contains(const DyadicInterval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

bool DyadicInterval::positive() const { return mpfr_sgn(lo_) > 0; }
bool DyadicInterval::negative() const { return mpfr_sgn(hi_) < 0; }

double DyadicInterval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double DyadicInterval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

static mpq_class exact_of(const mpfr_t x) {
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

mpq_class DyadicInterval::lower_exact() const { return exact_of(lo_); }
mpq_class DyadicInterval::upper_exact() const { return exact_of(hi_); }

double DyadicInterval::width_log2() const {
  mpfr_t w;
  mpfr_init2(w, bits_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double r = -1e9;
  if (mpfr_sgn(w) > 0) r = std::log2(mpfr_get_d(w, MPFR_RNDU));
  mpfr_clear(w);
  return r;
}

std::string DyadicInterval::midpoint_string(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, bits_ + 2);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), mid);
  mpfr_clear(mid);
  return std::string(buf.data());
}

}  // namespace kc::numeric
