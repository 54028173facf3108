#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "kc/curvature/curvature.hpp"

namespace kc::curvature {

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(int idx, int n, int p) {
  std::vector<int> d(static_cast<std::size_t>(p));
  for (int s = p - 1; s >= 0; --s) {
    d[static_cast<std::size_t>(s)] = idx % n;
    idx /= n;
  }
  return d;
}

int flatten(const std::vector<int>& d, int n) {
  int idx = 0;
  for (int v : d) idx = idx * n + v;
  return idx;
}

int perm_sign(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
  return s;
}

// Orthonormal basis of Lambda^p or S^p inside V^{(x)p}: (anti)symmetrized sorted multi-indices.
Mat subspace_basis(int n, int p, TensorSpace space) {
  const int N = ipow(n, p);
  std::vector<Vec> cols;
  for (int idx = 0; idx < N; ++idx) {
    const std::vector<int> d = digits(idx, n, p);
    bool sorted = true;
    for (int s = 1; s < p; ++s) {
      if (space == TensorSpace::exterior ? d[s - 1] >= d[s] : d[s - 1] > d[s]) sorted = false;
    }
    if (!sorted) continue;
    Vec v = Vec::Zero(N);
    std::vector<int> perm(d.begin(), d.end());
    std::vector<int> order(static_cast<std::size_t>(p));
    for (int s = 0; s < p; ++s) order[static_cast<std::size_t>(s)] = s;
    do {
      std::vector<int> img(static_cast<std::size_t>(p));
      for (int s = 0; s < p; ++s) img[static_cast<std::size_t>(s)] = d[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])];
      v(flatten(img, n)) += space == TensorSpace::exterior ? perm_sign(order) : 1;
    } while (std::next_permutation(order.begin(), order.end()));
    cols.push_back(v.normalized());
  }
  Mat B(N, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) B.col(static_cast<int>(c)) = cols[c];
  return B;
}

Mat derivation_matrix(const Mat& A, int n, int p) {
  const int N = ipow(n, p);
  Mat D = Mat::Zero(N, N);
  for (int col = 0; col < N; ++col) {
    const std::vector<int> d = digits(col, n, p);
    for (int s = 0; s < p; ++s) {
      std::vector<int> e = d;
      for (int a = 0; a < n; ++a) {
        const double v = A(a, d[static_cast<std::size_t>(s)]);
        if (v == 0.0) continue;
        e[static_cast<std::size_t>(s)] = a;
        D(flatten(e, n), col) += v;
      }
    }
  }
  return D;
}

Vec random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

}  // namespace

std::string to_string(TensorSpace s) { return s == TensorSpace::exterior ? "exterior" : "symmetric"; }

DerivationAction::DerivationAction(const CurvatureTensor& R, int p, TensorSpace space)
    : R_(&R), n_(R.dim()), p_(p), space_(space) {
  if (p < 1 || p > 3) throw std::domain_error("p must lie in [1, 3]");
  basis_ = subspace_basis(n_, p_, space_);
}

Vec DerivationAction::apply_endomorphism(const Mat& A, const Vec& omega) const {
  const int N = ipow(n_, p_);
  if (omega.size() != N) throw std::invalid_argument("tensor has the wrong size");
  Vec out = Vec::Zero(N);
  for (int idx = 0; idx < N; ++idx) {
    const double w = omega(idx);
    if (w == 0.0) continue;
    const std::vector<int> d = digits(idx, n_, p_);
    for (int s = 0; s < p_; ++s) {
      std::vector<int> e = d;
      for (int a = 0; a < n_; ++a) {
        e[static_cast<std::size_t>(s)] = a;
        out(flatten(e, n_)) += A(a, d[static_cast<std::size_t>(s)]) * w;
      }
    }
  }
  return out;
}

Vec DerivationAction::apply(const Vec& x, const Vec& y, const Vec& omega) const {
  return apply_endomorphism(R_->endomorphism(x, y), omega);
}

double DerivationAction::pairing(const Vec& x, const Vec& y, const Vec& omega, const Vec& eta) const {
  return apply(x, y, omega).dot(eta);
}

double DerivationAction::operator_norm(const Vec& x, const Vec& y) const {
  const Mat D = derivation_matrix(R_->endomorphism(x, y), n_, p_);
  const Mat M = basis_.transpose() * D * basis_;
  return Eigen::JacobiSVD<Mat>(M).singularValues()(0);
}

Vec DerivationAction::project(const Vec& omega) const { return basis_ * (basis_.transpose() * omega); }

DerivationAction derivation_extend(const CurvatureTensor& R, int p, TensorSpace space) {
  return DerivationAction(R, p, space);
}

Certificate verify_derivation_bound(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int p,
                                    TensorSpace space, int samples, double tol, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "curvature.derivation_bound";
  c.anchor = "trace-free curvature acting as a derivation on exterior or symmetric powers";
  c.params = {{"n", R.dim()}, {"lambda", lambda}, {"p", p}, {"space", to_string(space)}, {"samples", samples},
              {"tol", tol}};
  c.seed = seed;
  const int n = R.dim();
  const CurvatureTensor r0 = r0_decompose(R, lambda, J);
  const DerivationAction act(r0, p, space);
  const DerivationAction base(r0, 1, TensorSpace::exterior);
  std::mt19937_64 rng(seed);
  const double bound = 4.0 * p / 3.0 * (1.0 - lambda);
  double worst = 0.0, identity_residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = random_unit(rng, n);
    Vec y = random_unit(rng, n);
    // every fourth sample sits on the holomorphic stratum, where the bound is tight
    y = (i % 4 == 0) ? Vec(J.J * x) : Vec((y - y.dot(x) * x).normalized());
    const Mat A = r0.endomorphism(x, y);

    const Vec w = random_unit(rng, n);
    identity_residual = std::max(identity_residual, (base.apply(x, y, w) - A * w).cwiseAbs().maxCoeff());
    if (p == 2) {
      const Vec u = act.project(random_unit(rng, n * n));
      Mat um(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) um(a, b) = u(a * n + b);
      const Mat comm = A * um - um * A;
      const Vec du = act.apply(x, y, u);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) identity_residual = std::max(identity_residual, std::abs(du(a * n + b) - comm(a, b)));
    }
    const double norm = act.operator_norm(x, y);
    if (norm > worst) {
      worst = norm;
      c.witnesses["worst_X"] = std::vector<double>(x.data(), x.data() + n);
      c.witnesses["worst_Y"] = std::vector<double>(y.data(), y.data() + n);
    }
  }
  c.witnesses["max_operator_norm"] = worst;
  c.witnesses["bound"] = bound;
  c.witnesses["identity_residual"] = identity_residual;
  if (identity_residual > 1e-12) c.fail("derivation identity residual too large", identity_residual);
  if (worst > bound + tol) c.fail("derivation bound exceeded", {{"norm", worst}, {"bound", bound}});
  c.precision_bits = 53;
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace kc::curvature
