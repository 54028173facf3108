#include "kc/thresholds/thresholds.hpp"

namespace kc::thresholds {

PestovConstants pestov_constants(int n, int k) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("n must be an even integer >= 4");
  if (k < 1) throw std::domain_error("k must be >= 1");
  PestovConstants c;
  c.n = n;
  c.k = k;
  const long a = static_cast<long>(k) * (n + k - 2);
  c.alpha = ExactScalar(a);
  c.beta = ExactScalar::sqrt(mpq_class(mpz_class(a) * (n - 1)));
  c.delta = ExactScalar(static_cast<long>(n + 2 * k - 4));
  if (k >= 2) {
    const mpz_class num = mpz_class(n + k - 2) * (n + 2 * k - 4) * k;
    const mpz_class den = mpz_class(n + k - 3) * (n + 2 * k - 2) * (k - 1);
    c.gamma = ExactScalar(mpq_class(num, den));
    c.has_gamma = true;
  }
  return c;
}

ExactScalar AffineInLambda::root() const {
  if (c1.is_zero()) throw std::domain_error("affine function has no lambda dependence");
  return -c0 / c1;
}

std::string AffineInLambda::to_string() const {
  return "(" + c0.to_string() + ") + (" + c1.to_string() + ")*lambda";
}

}  // namespace kc::thresholds
