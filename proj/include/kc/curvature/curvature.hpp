#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "kc/numeric/certificate.hpp"

namespace kc::curvature {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using QVec = std::vector<mpq_class>;

/// Orthogonal J with J^2 = -Id on R^n.
struct ComplexStructure {
  Mat J;

  /// J e_{2i} = e_{2i+1}, J e_{2i+1} = -e_{2i}.
  static ComplexStructure canonical(int n);
  /// Q J0 Q^T for a seeded random orthogonal Q.
  static ComplexStructure random(int n, std::uint64_t seed);
  int dim() const { return static_cast<int>(J.rows()); }
  bool valid(double tol = 1e-12) const;
  /// Integer entries of J; throws std::domain_error unless every entry is in {-1, 0, 1}.
  std::vector<std::vector<int>> integer_form() const;
};

/// Dense (4,0)-tensor on R^n with float components.
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k, int l) { return c_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return c_[index(i, j, k, l)]; }
  const std::vector<double>& data() const { return c_; }
  std::vector<double>& data() { return c_; }

  bool kahler = false;

  double eval(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const;
  /// Vector v with <v, e> = R(...) where e fills slot `slot` (0..3) and a, b, c the others in order.
  Vec partial(int slot, const Vec& a, const Vec& b, const Vec& c) const;
  /// R(X,Y) as an endomorphism: <R(X,Y)Z, W> = R(X,Y,Z,W).
  Mat endomorphism(const Vec& x, const Vec& y) const;
  /// R(X,Y,Y,X); the sectional curvature on orthonormal pairs.
  double sec(const Vec& x, const Vec& y) const { return eval(x, y, y, x); }
  double holomorphic(const Vec& x, const Mat& J) const {
    const Vec jx = J * x;
    return eval(x, jx, jx, x);
  }

  /// Largest violation of the pair antisymmetries and pair symmetry.
  double symmetry_residual() const;
  double bianchi_residual() const;
  /// max |R(Je_i,Je_j,e_k,e_l) - R(e_i,e_j,e_k,e_l)|
  double kahler_residual(const Mat& J) const;
  double norm() const;

  CurvatureTensor operator+(const CurvatureTensor& o) const;
  CurvatureTensor operator-(const CurvatureTensor& o) const;
  CurvatureTensor operator*(double s) const;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<double> c_;
};

/// Rational-valued counterpart used where identities are claimed exactly.
class ExactCurvatureTensor {
 public:
  ExactCurvatureTensor() = default;
  explicit ExactCurvatureTensor(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n * n) {}

  int dim() const { return n_; }
  mpq_class& operator()(int i, int j, int k, int l) { return c_[index(i, j, k, l)]; }
  const mpq_class& operator()(int i, int j, int k, int l) const { return c_[index(i, j, k, l)]; }

  bool kahler = false;

  mpq_class eval(const QVec& x, const QVec& y, const QVec& z, const QVec& w) const;
  /// Exact zero means the identity holds.
  mpq_class symmetry_residual() const;
  mpq_class bianchi_residual() const;
  mpq_class kahler_residual(const std::vector<std::vector<int>>& J) const;
  bool operator==(const ExactCurvatureTensor& o) const { return n_ == o.n_ && c_ == o.c_; }
  CurvatureTensor to_float() const;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<mpq_class> c_;
};

/// g(X,Z)g(Y,W) - g(X,W)g(Y,Z), stored with this sign: it is -1 on orthonormal (X,Y,Y,X).
ExactCurvatureTensor g_wedge_g_exact(int n);
CurvatureTensor g_wedge_g(int n);

/// 4G = g^g(X,Y,Z,W) + g^g(X,Y,JZ,JW) + 2 g(X,JY) g(Z,JW), from components.
ExactCurvatureTensor complex_hyperbolic_g_exact(const std::vector<std::vector<int>>& J);
/// Same tensor from 4G(X,Y) = X^Y + JX^JY - 2<X,JY>J with (X^Y)Z = g(X,Z)Y - g(Y,Z)X.
ExactCurvatureTensor complex_hyperbolic_g_exact_endomorphism(const std::vector<std::vector<int>>& J);
CurvatureTensor complex_hyperbolic_g(const ComplexStructure& J);
CurvatureTensor complex_hyperbolic_g_endomorphism(const ComplexStructure& J);

/// R - (1+lambda)/2 G. Throws std::invalid_argument on a dimension mismatch or a non-Kahler R.
CurvatureTensor r0_decompose(const CurvatureTensor& R, double lambda, const ComplexStructure& J);

// ---- optimization on constraint manifolds ----

/// Smooth objective on R^d restricted to {h(x) = 0}, with a retraction back onto it.
struct ManifoldProblem {
  std::function<double(const Vec&)> f;
  std::function<Vec(const Vec&)> grad;
  /// Rows are the gradients of the constraints at x.
  std::function<Mat(const Vec&)> constraint_jacobian;
  std::function<Vec(const Vec&)> retract;
};

struct OptimResult {
  Vec x;
  double value = 0.0;
  double projected_grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Gradient projected onto the tangent space (kernel of the constraint jacobian).
Vec project_gradient(const ManifoldProblem& p, const Vec& x);
/// Projected gradient ascent with Armijo backtracking. Minimize by negating f and grad.
OptimResult maximize(const ManifoldProblem& p, const Vec& x0, double grad_tol = 1e-9, int max_iter = 2000);

/// Problem builders. Points are stacked vectors (X) or (X, Z) / (X, Y).
ManifoldProblem holomorphic_problem(const CurvatureTensor& R, const Mat& J, bool maximize_it);
/// Y = -cos(theta) JX + sin(theta) Z with |X| = |Z| = 1, Z orthogonal to X and JX.
ManifoldProblem stratum_problem(const CurvatureTensor& R, const Mat& J, double theta, bool maximize_it);
/// Orthonormal pairs (X, Y).
ManifoldProblem stiefel_problem(const CurvatureTensor& R, bool maximize_it);

struct Extremum {
  double value = 0.0;
  Vec x;
  Vec y;
  double projected_grad_norm = 0.0;
  bool converged = false;
};

struct Extrema {
  Extremum min;
  Extremum max;
  int restarts = 0;
};

Extrema holomorphic_extrema(const CurvatureTensor& R, const Mat& J, int restarts, std::uint64_t seed);
Extrema stratum_extrema(const CurvatureTensor& R, const Mat& J, double theta, int restarts, std::uint64_t seed);
Extrema sectional_extrema(const CurvatureTensor& R, int restarts, std::uint64_t seed);

// ---- generator ----

struct GeneratedTensor {
  CurvatureTensor R;
  ComplexStructure J;
  double lambda = 1.0;
  double scale = 0.0;   ///< a in R = a R' + b G
  double shift = 0.0;   ///< b
  int projection_sweeps = 0;
  double projection_residual = 0.0;
  double h_min = 0.0;   ///< re-measured after calibration
  double h_max = 0.0;
};

/// Seeded Kahler curvature tensor with holomorphic curvature in [-1, -lambda] (canonical J).
/// Throws std::runtime_error when the random part is proportional to G.
GeneratedTensor random_pinched_kahler(int n, double lambda, std::uint64_t seed, int restarts = 64);

/// Orthogonal projections used by the generator, exposed for tests.
CurvatureTensor project_pair_symmetric(const CurvatureTensor& R);
CurvatureTensor project_bianchi(const CurvatureTensor& R);
CurvatureTensor project_kahler(const CurvatureTensor& R, const Mat& J);

// ---- pinching verification ----

struct StratumReport {
  double theta = 0.0;
  Extremum min;
  Extremum max;
  double lower_bound = 0.0;  ///< -(1 - 3/4 lambda sin^2)
  double upper_bound = 0.0;  ///< -(3(1+cos^2) lambda - 2)/4
};

struct PinchReport {
  double h_min = 0.0, h_max = 0.0;
  double sec_min = 0.0, sec_max = 0.0;
  Extremum sec_min_witness, sec_max_witness;
  std::vector<StratumReport> strata;
  int restarts = 0;
  bool all_converged = true;
  Certificate certificate;
};

/// Bounds on each stratum theta in {0, pi/8, ..., pi/2}, the theta-free bounds
/// -1 <= sec <= -(3 lambda - 2)/4 and the holomorphic range, all within `tol`.
PinchReport verify_bishop_goldberg(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int restarts,
                                   double tol, std::uint64_t seed);

/// |R0(X,Y,Y,X)| <= 1 - lambda: optimized over orthonormal pairs plus `samples` random pairs.
Certificate verify_r0_bound(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int samples,
                            int restarts, double tol, std::uint64_t seed);

// ---- derivation extension ----

enum class TensorSpace { exterior, symmetric };

/// Action of the skew endomorphisms R(X,Y) on Lambda^p or S^p, realized inside V^{(x)p}.
class DerivationAction {
 public:
  DerivationAction(const CurvatureTensor& R, int p, TensorSpace space);
  int p() const { return p_; }
  TensorSpace space() const { return space_; }
  /// Orthonormal basis of the subspace, as columns of an n^p x dim matrix.
  const Mat& basis() const { return basis_; }
  /// Derivation of the endomorphism A on a tensor in V^{(x)p} (flattened, first index slowest).
  Vec apply_endomorphism(const Mat& A, const Vec& omega) const;
  Vec apply(const Vec& x, const Vec& y, const Vec& omega) const;
  /// <R(X,Y) omega, eta>
  double pairing(const Vec& x, const Vec& y, const Vec& omega, const Vec& eta) const;
  /// Operator norm of the action restricted to the subspace.
  double operator_norm(const Vec& x, const Vec& y) const;
  /// Projection of an arbitrary tensor onto the subspace.
  Vec project(const Vec& omega) const;

 private:
  const CurvatureTensor* R_;
  int n_;
  int p_;
  TensorSpace space_;
  Mat basis_;
};

/// 1 <= p <= 3; throws std::domain_error otherwise.
DerivationAction derivation_extend(const CurvatureTensor& R, int p, TensorSpace space);

/// Commutator identity at p = 2, base case at p = 1, and the bound
/// |(R0)(X,Y,omega,eta)| <= 4p/3 (1 - lambda) on `samples` random unit arguments.
Certificate verify_derivation_bound(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int p,
                                    TensorSpace space, int samples, double tol, std::uint64_t seed);

std::string to_string(TensorSpace s);

}  // namespace kc::curvature
