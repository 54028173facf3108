#include <cmath>
#include <random>
#include <stdexcept>

#include "kc/curvature/curvature.hpp"

namespace kc::curvature {

ComplexStructure ComplexStructure::canonical(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("complex structure needs an even dimension");
  ComplexStructure c;
  c.J = Mat::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) {
    c.J(2 * i + 1, 2 * i) = 1.0;
    c.J(2 * i, 2 * i + 1) = -1.0;
  }
  return c;
}

ComplexStructure ComplexStructure::random(int n, std::uint64_t seed) {
  ComplexStructure c = canonical(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  const Mat q = Eigen::HouseholderQR<Mat>(a).householderQ();
  c.J = q * c.J * q.transpose();
  return c;
}

bool ComplexStructure::valid(double tol) const {
  const int n = dim();
  if (n % 2 != 0 || J.cols() != n) return false;
  const Mat id = Mat::Identity(n, n);
  return (J * J + id).cwiseAbs().maxCoeff() <= tol && (J.transpose() * J - id).cwiseAbs().maxCoeff() <= tol;
}

std::vector<std::vector<int>> ComplexStructure::integer_form() const {
  const int n = dim();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = J(i, j);
      const double r = std::round(v);
      if (v != r || std::abs(r) > 1) throw std::domain_error("complex structure is not an integer matrix");
      out[i][j] = static_cast<int>(r);
    }
  }
  return out;
}

}  // namespace kc::curvature
