#include "kc/numeric/int_poly.hpp"

#include <stdexcept>

namespace kc::numeric {

IntPoly::IntPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const mpq_class& c, int d) {
  std::vector<mpq_class> v(static_cast<std::size_t>(d) + 1, mpq_class(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

mpq_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const { return sgn((*this)(x)); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const { return scaled(-1); }
IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> v = c_;
  for (auto& x : v) x *= s;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::taylor_shift(const mpq_class& a) const {
  // Horner in the ring: acc = acc*(x + a) + c_i
  IntPoly acc;
  const IntPoly xa = IntPoly::linear(1, a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + IntPoly::constant(*it);
  return acc;
}

void IntPoly::divmod(const IntPoly& d, IntPoly& q, IntPoly& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  const int dd = d.degree();
  std::vector<mpq_class> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, mpq_class(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const mpq_class f = rem[static_cast<std::size_t>(i)] / d.c_.back();
    if (f == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  q = IntPoly(std::move(quo));
  r = IntPoly(std::move(rem));
}

IntPoly IntPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / c_.back());
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i > 0 && a != 1) out += "*";
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a, y = b;
  while (!y.is_zero()) {
    IntPoly q, r;
    x.divmod(y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.monic();
  IntPoly g = gcd(p, p.derivative());
  IntPoly q, r;
  p.divmod(g, q, r);
  return q.monic();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    IntPoly q, r;
    chain[chain.size() - 2].divmod(chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<IntPoly>& chain, const mpq_class& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(p.sign_at(x));
  return variations(s);
}

int variations_at_infinity(const std::vector<IntPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sgn(p.leading()));
  return variations(s);
}

}  // namespace

int count_roots(const std::vector<IntPoly>& chain, const mpq_class& a, const mpq_class& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_roots_above(const std::vector<IntPoly>& chain, const mpq_class& a) {
  return variations_at(chain, a) - variations_at_infinity(chain);
}

mpq_class root_bound(const IntPoly& p) {
  if (p.degree() <= 0) return 1;
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace kc::numeric
