#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "kc/curvature/curvature.hpp"

namespace kc::curvature {

CurvatureTensor project_pair_symmetric(const CurvatureTensor& R) {
  const int n = R.dim();
  CurvatureTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = 0.125 * (R(i, j, k, l) - R(j, i, k, l) - R(i, j, l, k) + R(j, i, l, k) + R(k, l, i, j) -
                                     R(l, k, i, j) - R(k, l, j, i) + R(l, k, j, i));
  out.kahler = R.kahler;
  return out;
}

CurvatureTensor project_bianchi(const CurvatureTensor& R) {
  // R - b(R) with b the cyclic average over the first three slots; on S^2(Lambda^2) this is
  // the orthogonal projection onto the kernel of b.
  const int n = R.dim();
  CurvatureTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i, j, k, l) = R(i, j, k, l) - (R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)) / 3.0;
  return out;
}

CurvatureTensor project_kahler(const CurvatureTensor& R, const Mat& J) {
  // average over J acting on the first pair, the second pair, and both
  const int n = R.dim();
  CurvatureTensor first(n), both(n), second(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          for (int a = 0; a < n; ++a) {
            if (J(a, i) == 0.0) continue;
            for (int b = 0; b < n; ++b)
              if (J(b, j) != 0.0) v += J(a, i) * J(b, j) * R(a, b, k, l);
          }
          first(i, j, k, l) = v;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0, w = 0.0;
          for (int a = 0; a < n; ++a) {
            if (J(a, k) == 0.0) continue;
            for (int b = 0; b < n; ++b)
              if (J(b, l) != 0.0) {
                v += J(a, k) * J(b, l) * R(i, j, a, b);
                w += J(a, k) * J(b, l) * first(i, j, a, b);
              }
          }
          second(i, j, k, l) = v;
          both(i, j, k, l) = w;
        }
  CurvatureTensor out = (R + first + second + both) * 0.25;
  out.kahler = true;
  return out;
}

GeneratedTensor random_pinched_kahler(int n, double lambda, std::uint64_t seed, int restarts) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("n must be an even integer >= 4");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in (0, 1]");
  GeneratedTensor out;
  out.J = ComplexStructure::canonical(n);
  out.lambda = lambda;
  const CurvatureTensor G = complex_hyperbolic_g(out.J);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  CurvatureTensor R(n);
  for (auto& v : R.data()) v = gauss(rng);
  R = project_pair_symmetric(R);
  for (out.projection_sweeps = 0; out.projection_sweeps < 500; ++out.projection_sweeps) {
    const CurvatureTensor next = project_kahler(project_bianchi(R), out.J.J);
    const double change = (next - R).norm();
    R = next;
    if (change <= 1e-13 * std::max(1.0, R.norm())) break;
  }
  R.kahler = true;
  out.projection_residual = std::max({R.symmetry_residual(), R.bianchi_residual(), R.kahler_residual(out.J.J)});

  const Extrema h = holomorphic_extrema(R, out.J.J, restarts, seed ^ 0x9e3779b97f4a7c15ULL);
  const double spread = h.max.value - h.min.value;
  if (!(spread > 1e-9 * std::max(1.0, R.norm())))
    throw std::runtime_error("random part is proportional to G; choose another seed");
  // H(aR' + bG) = a H' - b; send [H'min, H'max] to [-1, -lambda]
  out.scale = (1.0 - lambda) / spread;
  out.shift = out.scale * h.min.value + 1.0;
  out.R = R * out.scale + G * out.shift;
  out.R.kahler = true;

  const Extrema again = holomorphic_extrema(out.R, out.J.J, restarts, seed + 7);
  out.h_min = again.min.value;
  out.h_max = again.max.value;
  return out;
}

}  // namespace kc::curvature
