#include "kc/numeric/exact_scalar.hpp"

#include <algorithm>
#include <vector>

namespace kc::numeric {

namespace {

constexpr unsigned long kTrialBound = 1000000UL;

std::vector<mpz_class> sym_diff(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SquarefreeSplit squarefree_split(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("squarefree_split needs a positive integer");
  SquarefreeSplit out{1, {1, {}}};
  mpz_class c = n;
  auto take = [&](const mpz_class& p) {
    int e = 0;
    while (mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) {
      c /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) out.square_root *= p;
    if (e % 2 == 1) {
      out.radicand.value *= p;
      out.radicand.primes.push_back(p);
    }
  };
  take(2);
  for (unsigned long d = 3; d <= kTrialBound; d += 2) {
    if (mpz_class(d) * d > c) break;
    take(mpz_class(d));
  }
  if (c > 1) {
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      mpz_class r = sqrt(c);
      out.square_root *= r;
    } else if (c <= mpz_class(kTrialBound) * kTrialBound ||
               mpz_probab_prime_p(c.get_mpz_t(), 40) == 2) {
      out.radicand.value *= c;
      out.radicand.primes.push_back(c);
    } else {
      throw std::domain_error("radicand too large to factor: " + c.get_str());
    }
  }
  std::sort(out.radicand.primes.begin(), out.radicand.primes.end());
  return out;
}

ExactScalar::ExactScalar(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c != 0) terms_.emplace(mpz_class(1), Term{c, {}});
}

ExactScalar ExactScalar::sqrt(const mpq_class& q) {
  if (q < 0) throw std::domain_error("sqrt of a negative rational");
  if (q == 0) return ExactScalar();
  // sqrt(a/b) = sqrt(a*b)/b
  const mpz_class ab = q.get_num() * q.get_den();
  SquarefreeSplit s = squarefree_split(ab);
  ExactScalar r;
  r.add_term(s.radicand.value, s.radicand.primes, mpq_class(s.square_root, q.get_den()));
  return r;
}

ExactScalar ExactScalar::sqrt(const ExactScalar& x) {
  if (!x.is_rational()) throw NestedRadicalError("nested radicals are not representable");
  return sqrt(x.rational_part());
}

void ExactScalar::add_term(const mpz_class& d, const std::vector<mpz_class>& primes, const mpq_class& c0) {
  mpq_class c = c0;
  c.canonicalize();
  if (c == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, Term{c, primes});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

bool ExactScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

mpq_class ExactScalar::rational_part() const {
  auto it = terms_.find(mpz_class(1));
  return it == terms_.end() ? mpq_class(0) : it->second.coeff;
}

mpq_class ExactScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is irrational: " + to_string());
  return rational_part();
}

std::vector<std::pair<mpz_class, mpq_class>> ExactScalar::terms() const {
  std::vector<std::pair<mpz_class, mpq_class>> out;
  for (const auto& [d, t] : terms_) out.emplace_back(d, t.coeff);
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& [d, t] : r.terms_) t.coeff = -t.coeff;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [d, t] : o.terms_) add_term(d, t.primes, t.coeff);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [d, t] : o.terms_) add_term(d, t.primes, -t.coeff);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  ExactScalar r;
  for (const auto& [d1, t1] : terms_) {
    for (const auto& [d2, t2] : o.terms_) {
      mpz_class g = gcd(d1, d2);
      mpz_class d = (d1 / g) * (d2 / g);
      r.add_term(d, sym_diff(t1.primes, t2.primes), t1.coeff * t2.coeff * g);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

mpz_class ExactScalar::largest_prime() const {
  mpz_class best = 0;
  for (const auto& [d, t] : terms_) {
    if (!t.primes.empty() && t.primes.back() > best) best = t.primes.back();
  }
  return best;
}

ExactScalar ExactScalar::conjugate_at(const mpz_class& p) const {
  ExactScalar r = *this;
  for (auto& [d, t] : r.terms_) {
    if (std::binary_search(t.primes.begin(), t.primes.end(), p)) t.coeff = -t.coeff;
  }
  return r;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  ExactScalar num = *this;
  ExactScalar den = o;
  // Multiply through by the conjugate in the largest prime until the denominator is rational.
  while (!den.is_rational()) {
    const mpz_class p = den.largest_prime();
    const ExactScalar c = den.conjugate_at(p);
    num *= c;
    den *= c;
  }
  const mpq_class q = den.rational_part();
  for (auto& [d, t] : num.terms_) t.coeff /= q;
  terms_ = std::move(num.terms_);
  return *this;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
  }
  return true;
}

DyadicInterval ExactScalar::enclose(mpfr_prec_t bits) const {
  DyadicInterval acc(mpq_class(0), bits);
  for (const auto& [d, t] : terms_) {
    DyadicInterval c(t.coeff, bits);
    if (d == 1) {
      acc = acc + c;
    } else {
      acc = acc + c * DyadicInterval(mpq_class(d), bits).sqrt();
    }
  }
  return acc;
}

double ExactScalar::to_double() const {
  const DyadicInterval e = enclose(128);
  return 0.5 * (e.lower() + e.upper());
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, t] : terms_) {
    mpq_class c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (d == 1) {
      out += c.get_str();
    } else if (c == 1) {
      out += "sqrt(" + d.get_str() + ")";
    } else {
      out += c.get_str() + "*sqrt(" + d.get_str() + ")";
    }
  }
  return out;
}

std::string ExactScalar::to_decimal(int digits) const {
  if (terms_.empty()) return "0";
  const DyadicInterval e = enclose(static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_t mid;
  mpfr_init2(mid, digits * 4 + 66);
  mpfr_add(mid, e.lo(), e.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_exp_t ex = 0;
  char* raw = mpfr_get_str(nullptr, &ex, 10, static_cast<std::size_t>(digits), mid, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  mpfr_clear(mid);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^ex
  std::string out;
  if (ex <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-ex), '0') + mant;
  } else if (static_cast<std::size_t>(ex) < mant.size()) {
    out = mant.substr(0, static_cast<std::size_t>(ex)) + "." + mant.substr(static_cast<std::size_t>(ex));
  } else {
    out = mant + std::string(static_cast<std::size_t>(ex) - mant.size(), '0');
  }
  return sign + out;
}

int ExactScalar::sign() const {
  const Comparison c = exact_compare(*this, ExactScalar());
  return c.verdict == Ordering::less ? -1 : (c.verdict == Ordering::equal ? 0 : 1);
}

Comparison exact_compare(const ExactScalar& a, const ExactScalar& b) {
  const ExactScalar d = a - b;
  if (d.is_zero()) return {Ordering::equal, 0};
  if (d.is_rational()) return {d.rational_part() > 0 ? Ordering::greater : Ordering::less, 0};
  for (mpfr_prec_t bits = 64;; bits *= 2) {
    const DyadicInterval e = d.enclose(bits);
    if (e.positive()) return {Ordering::greater, static_cast<int>(bits)};
    if (e.negative()) return {Ordering::less, static_cast<int>(bits)};
    if (bits > (mpfr_prec_t{1} << 24)) throw std::logic_error("comparison did not separate from zero");
  }
}

bool operator<(const ExactScalar& a, const ExactScalar& b) { return exact_compare(a, b).verdict == Ordering::less; }
bool operator>(const ExactScalar& a, const ExactScalar& b) { return exact_compare(a, b).verdict == Ordering::greater; }
bool operator<=(const ExactScalar& a, const ExactScalar& b) { return exact_compare(a, b).verdict != Ordering::greater; }
bool operator>=(const ExactScalar& a, const ExactScalar& b) { return exact_compare(a, b).verdict != Ordering::less; }

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

}  // namespace kc::numeric
