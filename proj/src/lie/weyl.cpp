#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "kc/lie/lie.hpp"

namespace kc::lie {

mpz_class weyl_dimension(const WeightLattice& L, const Weight& highest) {
  if (static_cast<int>(highest.size()) != L.rank()) throw std::invalid_argument("weight has the wrong rank");
  if (!WeightLattice::is_dominant(highest)) throw std::domain_error("highest weight must be dominant");
  const auto& g = L.gram();
  mpz_class num = 1, den = 1;
  for (const auto& a : L.positive_roots()) {
    long top = 0, bottom = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      top += static_cast<long>(a[j]) * (highest[j] + 1) * g[j][j];
      bottom += static_cast<long>(a[j]) * g[j][j];
    }
    num *= top;
    den *= bottom;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return num / den;
}

std::vector<IrrepRecord> odd_irreps_in_window(const WeightLattice& L, long d_min, long d_max) {
  std::vector<IrrepRecord> out;
  const int r = L.rank();
  Weight w(static_cast<std::size_t>(r), 0);
  // the dimension grows strictly in every coordinate, so each coordinate loop stops at the first overshoot
  std::function<void(int)> walk = [&](int i) {
    if (i == r) {
      const mpz_class d = weyl_dimension(L, w);
      if (d >= d_min && d <= d_max && d % 2 != 0) out.push_back({L.algebra(), w, d});
      return;
    }
    for (w[static_cast<std::size_t>(i)] = 0;; ++w[static_cast<std::size_t>(i)]) {
      if (weyl_dimension(L, w) > d_max) break;
      walk(i + 1);
    }
    w[static_cast<std::size_t>(i)] = 0;
  };
  walk(0);
  return out;
}

namespace {

// height of top - mu, or -1 when top - mu is not a nonnegative integer root combination
int height_below(const WeightLattice& L, const Weight& top, const Weight& mu) {
  Weight diff = top;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  mpq_class h = 0;
  for (const auto& x : L.root_coordinates(diff)) {
    if (x.get_den() != 1 || sgn(x) < 0) return -1;
    h += x;
  }
  return static_cast<int>(h.get_num().get_si());
}

mpq_class height(const WeightLattice& L, const Weight& mu) {
  mpq_class h = 0;
  for (const auto& x : L.root_coordinates(mu)) h += x;
  return h;
}

}  // namespace

DominantCharacter freudenthal(const WeightLattice& L, const Weight& highest) {
  if (!WeightLattice::is_dominant(highest)) throw std::domain_error("highest weight must be dominant");
  std::vector<Weight> root_weights;
  for (const auto& a : L.positive_roots()) root_weights.push_back(L.root_weight(a));

  // dominant weights below the highest one are connected through dominant weights by positive roots
  std::set<Weight> dominant{highest};
  std::vector<Weight> frontier{highest};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (const auto& rw : root_weights) {
        Weight nu = mu;
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= rw[i];
        if (WeightLattice::is_dominant(nu) && dominant.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }

  std::vector<std::pair<int, Weight>> order;
  for (const auto& mu : dominant) order.emplace_back(height_below(L, highest, mu), mu);
  std::sort(order.begin(), order.end());

  Weight lr = highest;
  for (auto& x : lr) ++x;
  const mpq_class top = L.inner(lr, lr);
  DominantCharacter mult;
  for (const auto& [h, mu] : order) {
    if (h == 0) {
      mult[mu] = 1;
      continue;
    }
    mpq_class sum = 0;
    for (std::size_t ai = 0; ai < root_weights.size(); ++ai) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += root_weights[ai][i];
        const auto it = mult.find(L.to_dominant(nu));
        if (it == mult.end()) break;
        sum += it->second * L.inner_root(nu, L.positive_roots()[ai]);
      }
    }
    Weight mr = mu;
    for (auto& x : mr) ++x;
    const mpq_class m = 2 * sum / (top - L.inner(mr, mr));
    if (m.get_den() != 1) throw std::logic_error("non-integral weight multiplicity");
    mult[mu] = m.get_num();
  }
  return mult;
}

std::vector<Weight> minuscule_weights(const WeightLattice& L, const Weight& highest) {
  std::set<Weight> seen{highest};
  std::vector<Weight> frontier{highest};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) continue;
        if (mu[i] > 1) throw std::domain_error("weight is not minuscule");
        Weight nu = mu;
        for (std::size_t j = 0; j < nu.size(); ++j) nu[j] -= L.cartan()[i][j];
        if (seen.insert(nu).second) next.push_back(nu);
      }
    frontier = std::move(next);
  }
  if (mpz_class(static_cast<long>(seen.size())) != weyl_dimension(L, highest))
    throw std::domain_error("weight is not minuscule");
  return {seen.begin(), seen.end()};
}

DominantCharacter symmetric_power_dominant(const std::vector<Weight>& weights, int r) {
  if (r < 1 || weights.empty()) throw std::invalid_argument("symmetric power needs r >= 1 and a nonempty list");
  DominantCharacter out;
  const std::size_t len = weights.front().size();
  Weight acc(len, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int left) {
    if (left == 0) {
      if (WeightLattice::is_dominant(acc)) out[acc] += 1;
      return;
    }
    for (std::size_t i = from; i < weights.size(); ++i) {
      for (std::size_t j = 0; j < len; ++j) acc[j] += weights[i][j];
      walk(i, left - 1);
      for (std::size_t j = 0; j < len; ++j) acc[j] -= weights[i][j];
    }
  };
  walk(0, r);
  return out;
}

std::map<Weight, mpz_class> decompose(const WeightLattice& L, DominantCharacter ch, const mpz_class& guard) {
  std::map<Weight, mpz_class> out;
  mpz_class total = 0;
  while (true) {
    for (auto it = ch.begin(); it != ch.end();) it = sgn(it->second) == 0 ? ch.erase(it) : std::next(it);
    if (ch.empty()) break;
    // a weight of maximal height above zero is maximal in the dominance order
    const Weight* best = nullptr;
    mpq_class best_h = 0;
    for (const auto& [mu, m] : ch) {
      const mpq_class h = height(L, mu);
      if (best == nullptr || h > best_h) {
        best = &mu;
        best_h = h;
      }
    }
    const Weight top = *best;
    const mpz_class m = ch[top];
    if (sgn(m) < 0) throw std::logic_error("negative multiplicity in decomposition");
    total += m * weyl_dimension(L, top);
    if (total > guard) throw std::runtime_error("decomposition exceeded its dimension guard");
    out[top] += m;
    for (const auto& [mu, k] : freudenthal(L, top)) ch[mu] -= m * k;
  }
  return out;
}

}  // namespace kc::lie
