#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kc/numeric/certificate.hpp"

namespace kc::lie {

/// Coefficients over the fundamental weights (Dynkin labels).
using Weight = std::vector<int>;
/// Coefficients over the simple roots.
using RootVec = std::vector<int>;

enum class Algebra { g2, f4, e6, e7, e8 };

std::string to_string(Algebra a);
Algebra algebra_from_string(const std::string& s);
const std::vector<Algebra>& exceptional_algebras();

/// Root data of an exceptional simple Lie algebra, Bourbaki numbering.
class WeightLattice {
 public:
  explicit WeightLattice(Algebra a);

  Algebra algebra() const { return algebra_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  /// cartan()[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots, scaled so short roots have squared length 2 (g2, f4 long roots 6, 4).
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  /// Positive roots in simple-root coordinates, ordered by height.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  /// Weyl vector: all Dynkin labels 1.
  Weight rho() const { return Weight(static_cast<std::size_t>(rank()), 1); }
  int dimension() const { return rank() + 2 * static_cast<int>(positive_.size()); }
  /// Highest weight of the adjoint representation.
  Weight adjoint_weight() const;
  Weight fundamental(int i) const;

  /// Dynkin labels of a root given in simple-root coordinates.
  Weight root_weight(const RootVec& r) const;
  /// <mu, alpha^vee> for a weight and a root.
  mpq_class coroot_pairing(const Weight& mu, const RootVec& alpha) const;
  /// Invariant form on weights in the scale of gram().
  mpq_class inner(const Weight& a, const Weight& b) const;
  mpq_class inner_root(const Weight& mu, const RootVec& alpha) const;
  /// Coordinates of a weight over the simple roots.
  std::vector<mpq_class> root_coordinates(const Weight& mu) const;
  Weight to_dominant(Weight mu) const;
  static bool is_dominant(const Weight& mu);

 private:
  Algebra algebra_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVec> positive_;
  std::vector<std::vector<mpq_class>> inverse_cartan_;
};

/// 8a + 2^b for n = 2^(4a+b) c with c odd and 0 <= b <= 3.
long radon_hurwitz(long n);

/// Exact product formula; throws std::domain_error for a non-dominant weight.
mpz_class weyl_dimension(const WeightLattice& L, const Weight& highest);

struct IrrepRecord {
  Algebra algebra;
  Weight highest;
  mpz_class dimension;
};

/// All irreps of odd dimension d with d_min <= d <= d_max, by a dimension-pruned search.
std::vector<IrrepRecord> odd_irreps_in_window(const WeightLattice& L, long d_min, long d_max);

struct ExclusionRow {
  IrrepRecord irrep;
  long p = 0;
  long rho = 0;
  long required = 0;
  bool survives = false;
};

struct ExclusionTable {
  std::vector<ExclusionRow> candidates;
  std::vector<ExclusionRow> survivors;
  Certificate cert;
};

/// Odd irreps 2p+1 in [7, dim+1] of the five exceptional algebras, filtered by rho(4p+4) >= 4p+3-dim.
ExclusionTable enumerate_exclusion_table(long p_max);

/// Dominant weights with multiplicities.
using DominantCharacter = std::map<Weight, mpz_class>;

/// Multiplicities of the dominant weights of the irrep with the given highest weight.
DominantCharacter freudenthal(const WeightLattice& L, const Weight& highest);
/// Weights of a minuscule irrep, each with multiplicity one.
std::vector<Weight> minuscule_weights(const WeightLattice& L, const Weight& highest);
/// Dominant part of the weight multiset of the r-th symmetric power of a multiplicity-free weight list.
DominantCharacter symmetric_power_dominant(const std::vector<Weight>& weights, int r);
/// Irreducible decomposition of a character given by its dominant weights; throws if the total exceeds guard.
std::map<Weight, mpz_class> decompose(const WeightLattice& L, DominantCharacter ch, const mpz_class& guard);

struct CubicInvariantReport {
  mpz_class trivial_in_cube;
  mpz_class trivial_in_square;
  std::map<Weight, mpz_class> cube;
  std::map<Weight, mpz_class> square;
  Certificate cert;
};

CubicInvariantReport e6_cubic_report();
/// Multiplicity of the trivial representation in S^3 of the 27-dimensional e6 irrep.
int e6_cubic_invariant_dim();

std::string weight_to_string(const Weight& w);

}  // namespace kc::lie
