#include <algorithm>
#include <set>
#include <stdexcept>

#include "kc/lie/lie.hpp"

namespace kc::lie {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// simply-laced Dynkin diagram from an edge list (1-based Bourbaki labels)
IntMatrix simply_laced(int rank, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix g(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (const auto& [a, b] : edges) {
    g[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
    g[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
  }
  return g;
}

IntMatrix gram_of(Algebra a) {
  switch (a) {
    case Algebra::g2:
      return {{2, -3}, {-3, 6}};
    case Algebra::f4:
      return {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case Algebra::e6:
      return simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
    case Algebra::e7:
      return simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}});
    case Algebra::e8:
      return simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
  }
  throw std::invalid_argument("unknown algebra");
}

std::vector<std::vector<mpq_class>> invert(const IntMatrix& m) {
  const std::size_t r = m.size();
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(2 * r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = m[i][j];
    a[i][r + i] = 1;
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < r && sgn(a[piv][c]) == 0) ++piv;
    if (piv == r) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<mpq_class>> out(r, std::vector<mpq_class>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = a[i][r + j];
  return out;
}

}  // namespace

std::string to_string(Algebra a) {
  switch (a) {
    case Algebra::g2: return "g2";
    case Algebra::f4: return "f4";
    case Algebra::e6: return "e6";
    case Algebra::e7: return "e7";
    case Algebra::e8: return "e8";
  }
  return "?";
}

Algebra algebra_from_string(const std::string& s) {
  for (Algebra a : exceptional_algebras())
    if (to_string(a) == s) return a;
  throw std::invalid_argument("unknown algebra: " + s);
}

const std::vector<Algebra>& exceptional_algebras() {
  static const std::vector<Algebra> all{Algebra::g2, Algebra::f4, Algebra::e6, Algebra::e7, Algebra::e8};
  return all;
}

WeightLattice::WeightLattice(Algebra a) : algebra_(a), gram_(gram_of(a)) {
  const std::size_t r = gram_.size();
  cartan_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
  inverse_cartan_ = invert(cartan_);

  // grow by height: beta + alpha_i is a root iff q > 0 in the alpha_i-string through beta
  std::set<RootVec> known;
  std::vector<RootVec> layer;
  for (std::size_t i = 0; i < r; ++i) {
    RootVec e(r, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  while (!layer.empty()) {
    for (const auto& b : layer) {
      positive_.push_back(b);
      known.insert(b);
    }
    std::set<RootVec> next;
    for (const auto& b : layer) {
      const Weight bw = root_weight(b);
      for (std::size_t i = 0; i < r; ++i) {
        int p = 0;
        RootVec down = b;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - bw[i];
        if (q <= 0) continue;
        RootVec up = b;
        ++up[i];
        next.insert(up);
      }
    }
    layer.assign(next.begin(), next.end());
  }
}

Weight WeightLattice::adjoint_weight() const {
  // the highest root has the largest height
  return root_weight(positive_.back());
}

Weight WeightLattice::fundamental(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("fundamental weight index");
  Weight w(static_cast<std::size_t>(rank()), 0);
  w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight WeightLattice::root_weight(const RootVec& r) const {
  Weight w(static_cast<std::size_t>(rank()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] += r[i] * cartan_[i][j];
  return w;
}

mpq_class WeightLattice::inner_root(const Weight& mu, const RootVec& alpha) const {
  mpq_class s = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) s += mpq_class(alpha[j] * mu[j] * gram_[j][j], 2);
  s.canonicalize();
  return s;
}

mpq_class WeightLattice::coroot_pairing(const Weight& mu, const RootVec& alpha) const {
  mpz_class len = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 0; j < alpha.size(); ++j) len += alpha[i] * alpha[j] * gram_[i][j];
  mpq_class r = 2 * inner_root(mu, alpha) / mpq_class(len);
  r.canonicalize();
  return r;
}

std::vector<mpq_class> WeightLattice::root_coordinates(const Weight& mu) const {
  std::vector<mpq_class> x(mu.size(), 0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < mu.size(); ++j) x[i] += mu[j] * inverse_cartan_[j][i];
  return x;
}

mpq_class WeightLattice::inner(const Weight& a, const Weight& b) const {
  const std::vector<mpq_class> x = root_coordinates(a);
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += x[i] * b[i] * gram_[i][i] / 2;
  s.canonicalize();
  return s;
}

bool WeightLattice::is_dominant(const Weight& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; });
}

Weight WeightLattice::to_dominant(Weight mu) const {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] >= 0) continue;
      const int c = mu[i];
      for (std::size_t j = 0; j < mu.size(); ++j) mu[j] -= c * cartan_[i][j];
      changed = true;
    }
  }
  return mu;
}

long radon_hurwitz(long n) {
  if (n < 1) throw std::domain_error("radon_hurwitz needs n >= 1");
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return 8L * (e / 4) + (1L << (e % 4));
}

std::string weight_to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

}  // namespace kc::lie
