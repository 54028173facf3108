#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kc/curvature/curvature.hpp"
#include "kc/numeric/certificate.hpp"

namespace kc::fiber {

using IntMat = std::vector<std::vector<int>>;

/// Exponent vector packed 5 bits per variable; at most 12 variables, exponents at most 31.
using Monomial = std::uint64_t;

constexpr int kMaxVars = 12;
constexpr int kMaxExponent = 31;

Monomial make_monomial(const std::vector<int>& exponents);
int exponent(Monomial m, int var);
int monomial_degree(Monomial m, int nvars);

/// Polynomial in v = (v_1, ..., v_n) with exact rational coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars);
  static Poly constant(int nvars, const mpq_class& c);
  static Poly variable(int nvars, int i);
  /// |v|^2
  static Poly radius2(int nvars);

  int nvars() const { return n_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  void add_term(Monomial m, const mpq_class& c);
  mpq_class coeff(const std::vector<int>& exponents) const;
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(int d) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpq_class& s) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Poly mul_var(int i) const;
  Poly diff(int i) const;
  /// Euclidean Laplacian on R^n.
  Poly laplacian() const;
  mpq_class eval(const std::vector<mpq_class>& v) const;
  double eval(const curvature::Vec& v) const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Monomial, mpq_class> terms_;
};

/// Fischer inner product sum_alpha alpha! p_alpha q_alpha; multiplication by v_i is adjoint to d/dv_i.
mpq_class fischer_inner(const Poly& p, const Poly& q);

/// Harmonic decomposition of a homogeneous P of degree d: P = sum_j |v|^{2j} h[j], h[j] harmonic of degree d - 2j.
std::vector<Poly> harmonic_decomposition(const Poly& p);
/// Degree-k spherical harmonic component of the restriction of p to the sphere, as a harmonic homogeneous polynomial.
Poly degree_project(const Poly& p, int k);
/// Largest k with a nonzero degree-k component on the sphere; -1 if p vanishes on the sphere.
int sphere_degree(const Poly& p);
/// True when p and q agree on the sphere.
bool equal_on_sphere(const Poly& p, const Poly& q);

// ---- exact sphere integration, normalized to total mass 1 ----

/// Normalized moment of v^alpha over S^{n-1}.
mpq_class sphere_moment(int n, const std::vector<int>& alpha);
mpq_class sphere_integrate(const Poly& p);
/// Integral of p * q without forming the product.
mpq_class integrate_product(const Poly& p, const Poly& q);

// ---- sections ----

enum class Space { scalar, vector, sym2, matrix };
std::string to_string(Space s);

/// Polynomial section with values in R, V, S^2 V or V (x) V. Matrix-valued sections are stored
/// row-major as n*n components; symmetric ones keep both triangles.
struct PolySection {
  int n = 0;
  Space space = Space::scalar;
  std::vector<Poly> comp;

  PolySection() = default;
  PolySection(int n, Space space);
  static PolySection from_scalar(const Poly& p);

  int size() const { return static_cast<int>(comp.size()); }
  Poly& operator()(int a) { return comp[static_cast<std::size_t>(a)]; }
  const Poly& operator()(int a) const { return comp[static_cast<std::size_t>(a)]; }
  Poly& operator()(int a, int b) { return comp[static_cast<std::size_t>(a * n + b)]; }
  const Poly& operator()(int a, int b) const { return comp[static_cast<std::size_t>(a * n + b)]; }

  bool is_zero() const;
  PolySection operator+(const PolySection& o) const;
  PolySection operator-(const PolySection& o) const;
  PolySection operator*(const mpq_class& s) const;
  bool operator==(const PolySection& o) const { return n == o.n && space == o.space && comp == o.comp; }
};

/// L^2 inner product over the normalized sphere, pointwise Euclidean / Frobenius pairing.
mpq_class l2_inner(const PolySection& f, const PolySection& g);
mpq_class l2_norm2(const PolySection& f);
mpq_class fischer_inner(const PolySection& f, const PolySection& g);

/// Spherical Laplacian with spectrum k(n+k-2) on degree-k harmonics.
Poly vertical_laplacian(const Poly& f);
PolySection vertical_laplacian(const PolySection& f);
/// grad F - (v . grad F) v for the polynomial representative F.
PolySection vertical_gradient(const Poly& f);
/// One vertical gradient per component of f.
std::vector<PolySection> vertical_gradient(const PolySection& f);
/// Contraction of the first slot with v (V -> scalar, matrix -> V).
PolySection iota_v(const PolySection& f);
/// Contraction of the first slot with Jv.
PolySection iota_jv(const PolySection& f, const IntMat& J);
/// J applied to the first slot.
PolySection j_apply(const PolySection& f, const IntMat& J);
/// [J, f] for matrix-valued f.
PolySection j_commutator(const PolySection& f, const IntMat& J);
PolySection degree_project(const PolySection& f, int k);
int sphere_degree(const PolySection& f);
/// Every component harmonic and homogeneous of degree k (or zero).
bool is_harmonic_of_degree(const PolySection& f, int k);

// ---- admissible sections ----

struct Constraints {
  bool iota_v = true;       ///< iota_v f has sphere degree <= k-1
  bool iota_jv = false;     ///< iota_{Jv} f has sphere degree <= k-1 (V-valued only)
  bool iota_vv = false;     ///< degree-k part of iota_v iota_v f vanishes (S^2 only)
  bool commutes_j = false;  ///< [J, f] = 0 (S^2 only)
};

struct SampleResult {
  std::optional<PolySection> section;  ///< empty when the projected sample vanished
  int cg_iterations = 0;
  int domain_terms = 0;
};

/// Seeded element of the kernel of the constraint system inside H_k (x) E. The sample is a sparse
/// random harmonic section projected Fischer-orthogonally onto the kernel by exact conjugate gradients.
SampleResult sample_admissible_section(int n, int k, Space E, const Constraints& c, const IntMat& J,
                                       std::uint64_t seed);
/// Exact kernel dimension by rational elimination; throws std::length_error if the system exceeds `max_unknowns`.
int admissible_kernel_dimension(int n, int k, Space E, const Constraints& c, const IntMat& J,
                                int max_unknowns = 4000);

// ---- witnesses and identities ----

/// A with A^2 = -Id, orthogonal, AJ = -JA for the canonical J; n divisible by 4.
IntMat quaternionic_a(int n);
/// pi(v) = (Av)(Av)^T + (JAv)(JAv)^T as a homogeneous quadratic S^2 V section.
PolySection quaternionic_projector(int n);
/// pi - (2/n)|v|^2 Id, the pure degree-2 part of the projector.
PolySection quaternionic_trace_free(int n);

struct IdentitySides {
  mpq_class lhs;
  mpq_class rhs;
};

/// Left and right sides of the TM identity for the complex hyperbolic G; no precondition checks.
IdentitySides g_identity_tm_sides(const PolySection& f, int k, const IntMat& J);
/// Left and right sides of the S^2 TM identity; no precondition checks.
IdentitySides g_identity_s2_sides(const PolySection& f, int k, const IntMat& J);

Certificate verify_g_identity_tm(int n, const IntMat& J, const PolySection& f, int k);
Certificate verify_g_identity_s2(int n, const IntMat& J, const PolySection& f, int k);
/// |iota_v u|^2 / |u|^2 == 2/(n(n-2)) for the quaternionic witness.
Certificate verify_projector_norm_ratio(int n);

/// Exact fiber integrals I_ijkl = sum_alpha int (grad_V f_alpha)_i v_j v_k (grad_V f_alpha)_l.
std::vector<mpq_class> pairing_moments(const PolySection& f);

struct PairingBound {
  double lhs = 0.0;
  double rhs = 0.0;
};
PairingBound curvature_pairing_sides(const curvature::CurvatureTensor& R, const PolySection& f, int k,
                                     double lambda, const IntMat& J);
/// Exact sides for R = G.
IdentitySides curvature_pairing_sides_exact_g(const PolySection& f, int k, const IntMat& J);
/// <R grad_V f, grad_V f> <= -(3 lambda - 2)/4 k(n+k-2) |f|^2 - 3 lambda/4 int sum <v, J grad_V f_alpha>^2
/// on `trials` seeded pinched tensors and sections in H_k (x) E.
Certificate verify_curvature_pairing_bound(int n, int k, Space E, double lambda, int trials, double tol,
                                           std::uint64_t seed);

}  // namespace kc::fiber
