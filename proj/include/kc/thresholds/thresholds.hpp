#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kc/numeric/certificate.hpp"
#include "kc/numeric/exact_scalar.hpp"
#include "kc/numeric/int_poly.hpp"

namespace kc::thresholds {

using numeric::ExactScalar;

/// alpha, beta, gamma, delta at real dimension n and Fourier degree k.
struct PestovConstants {
  int n = 0;
  int k = 0;
  ExactScalar alpha;  ///< k(n+k-2)
  ExactScalar beta;   ///< sqrt(k(n+k-2)(n-1))
  ExactScalar gamma;  ///< zero when k < 2 (undefined there)
  ExactScalar delta;  ///< n+2k-4
  bool has_gamma = false;
};

/// Throws std::domain_error unless n >= 4 is even and k >= 1.
PestovConstants pestov_constants(int n, int k);

/// c0 + c1*lambda with exact coefficients.
struct AffineInLambda {
  ExactScalar c0;
  ExactScalar c1;

  static AffineInLambda constant(const ExactScalar& c) { return {c, ExactScalar()}; }
  static AffineInLambda lambda() { return {ExactScalar(), ExactScalar(1)}; }

  ExactScalar at(const ExactScalar& lam) const { return c0 + c1 * lam; }
  /// -c0/c1; throws std::domain_error when c1 == 0.
  ExactScalar root() const;

  AffineInLambda operator+(const AffineInLambda& o) const { return {c0 + o.c0, c1 + o.c1}; }
  AffineInLambda operator-(const AffineInLambda& o) const { return {c0 - o.c0, c1 - o.c1}; }
  AffineInLambda operator-() const { return {-c0, -c1}; }
  AffineInLambda operator*(const ExactScalar& s) const { return {c0 * s, c1 * s}; }
  bool operator==(const AffineInLambda& o) const { return c0 == o.c0 && c1 == o.c1; }
  std::string to_string() const;
};

inline AffineInLambda operator*(const ExactScalar& s, const AffineInLambda& a) { return a * s; }

AffineInLambda b_coeff(int n, int k);
/// Throws std::domain_error for k < 2.
AffineInLambda c_coeff(int n, int k);
inline AffineInLambda b_plus_half_c(int n, int k) { return b_coeff(n, k) + c_coeff(n, k) * ExactScalar::fraction(1, 2); }

/// Closed forms as printed; tests compare them with the roots above.
ExactScalar lambda1(int n, int k);
ExactScalar lambda2(int n, int k);
/// (6n + 16s + 6n/(n+2)) / (9n + 16s - 6n/(n+2)), s = sqrt(2n(n-1)).
ExactScalar lambda3(int n);
/// Root of the degree-2 inequality as it reads after the ratio substitution,
/// which carries (1+lambda)/2 * (n-2)/(n+2) in place of (1+lambda) n/(n+2).
ExactScalar lambda3_substituted_display_root(int n);

/// Raised by assemble_bc when a re-derived coefficient differs from the closed form.
class AssemblyMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Derivation {
  AffineInLambda B;
  AffineInLambda C;
  /// Intermediate quantities, for reports.
  std::vector<std::pair<std::string, std::string>> steps;
};

/// Rebuilds B and C from the constituent bounds (curvature pairing, trace-free
/// pairing with p = 2, the G pairing on S^2, and the lower bound for the X_- term
/// obtained from the degree k-1 estimate for X_+ with p = 1).
Derivation derive_bc(int n, int k);
/// derive_bc, then asserts equality with (b_coeff, c_coeff).
std::pair<AffineInLambda, AffineInLambda> assemble_bc(int n, int k);

/// Degree-2 inequality B_{n,2} - (1+l)/2 * delta_{n,2} * rho with rho = (n-2)/(n(n+2)).
AffineInLambda assemble_k2(int n);

ExactScalar lambda0(int m);
/// (308m+131)/(336m+105)
ExactScalar lambda_final(int m);

struct ThresholdRow {
  int m = 0;
  int n = 0;
  ExactScalar lambda1;
  ExactScalar lambda2;
  ExactScalar lambda3;
  ExactScalar lambda0;
  ExactScalar lambda_final;
  /// lambda0 < lambda_final
  Verdict verdict = Verdict::holds;
  /// "lambda1" | "lambda2" | "lambda3" (first maximizer)
  std::string dominant;
};

ThresholdRow threshold_row(int m);

struct ThresholdTable {
  std::vector<ThresholdRow> rows;
  Certificate certificate;
};

/// Rows for even m in [m_min, m_max], sorted by m. `workers` threads share the rows.
ThresholdTable verify_threshold_table(int m_min, int m_max, int workers = 1);

/// Which of lambda1(2m,4), lambda2(2m,4), lambda3(2m) is largest for every m in range.
Certificate dominance_scan(int m_min, int m_max);

Certificate verify_monotonicity(int n, int k_max);

/// Ray certificates for the two cross-multiplied chain inequalities on n >= n0,
/// plus an exact sweep of the per-threshold lower bounds on [n_min, n_max].
Certificate verify_chain(int n_min = 10, int n_max = 1000);

/// 16 sqrt2 < 68/3, 64/sqrt3 < 37, sqrt((n+2)(n-1)) < n + 1/2.
Certificate verify_side_claims();

/// 4n/(3(n+1)) < gamma_{n,4} < 4/3 on n >= 3, with an exact sweep on [3, n_max].
Certificate verify_gamma_bracket(int n_max = 1000);

/// 2r/(n(n-2r)) <= (n-4)/(n(n+4)) <= (n-2)/(n(n+2)) for even n in [8, n_max], 1 <= 2r <= n/2-2.
Certificate verify_rank_ratio_bound(int n_max = 400);

/// Root consistency of lambda1, lambda2 and the assembly on even n in [n_min, n_max], k in [k_min, k_max].
Certificate verify_roots(int n_min, int n_max, int k_min, int k_max);

/// lambda(m) decreasing on even m in range, lambda(6) = 1979/2121, lambda(m) > 11/12 with shrinking gap.
Certificate verify_final_constants(int m_min = 6, int m_max = 200);

}  // namespace kc::thresholds
