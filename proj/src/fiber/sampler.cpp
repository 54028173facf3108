#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "kc/fiber/fiber.hpp"

namespace kc::fiber {

namespace {

struct LinearOp {
  std::function<PolySection(const PolySection&)> apply;
  std::function<PolySection(const PolySection&)> adjoint;
};

using Block = std::vector<PolySection>;

struct Problem {
  int n = 0;
  int k = 0;
  Space E = Space::vector;
  Constraints c;
  IntMat J;
  std::vector<LinearOp> ops;
};

PolySection transpose(const PolySection& m) {
  PolySection t = m;
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b) t(a, b) = m(b, a);
  return t;
}

// Frobenius-orthogonal projection of a matrix section onto the domain fibre (S^2 V, optionally J-commuting)
PolySection project_fibre(const PolySection& m, const Problem& p) {
  PolySection s = (m + transpose(m)) * mpq_class(1, 2);
  if (p.c.commutes_j) {
    // S -> -JSJ is an orthogonal involution fixing exactly the J-commuting symmetric matrices
    PolySection minus_jsj(s.n, Space::matrix);
    for (int a = 0; a < s.n; ++a)
      for (int b = 0; b < s.n; ++b)
        for (int c = 0; c < s.n; ++c) {
          if (p.J[a][c] == 0) continue;
          for (int d = 0; d < s.n; ++d)
            if (p.J[d][b] != 0) minus_jsj(a, b) -= s(c, d) * mpq_class(p.J[a][c] * p.J[d][b]);
        }
    s = (s + minus_jsj) * mpq_class(1, 2);
  }
  s.space = Space::sym2;
  return s;
}

PolySection harmonic_part(const PolySection& f, int k) {
  PolySection r = f;
  for (auto& q : r.comp) q = degree_project(q, k);
  return r;
}

Problem build_problem(int n, int k, Space E, const Constraints& c, const IntMat& J) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("n must be even");
  if (k < 0) throw std::domain_error("k must be >= 0");
  Problem p{n, k, E, c, J, {}};
  if (E == Space::vector) {
    if (c.iota_vv || c.commutes_j) throw std::invalid_argument("constraint applies to S^2-valued sections only");
    if (c.iota_v) {
      p.ops.push_back({[k](const PolySection& f) { return harmonic_part(iota_v(f), k + 1); },
                       [n](const PolySection& h) {
                         PolySection g(n, Space::vector);
                         for (int a = 0; a < n; ++a) g(a) = h(0).diff(a);
                         return g;
                       }});
    }
    if (c.iota_jv) {
      p.ops.push_back({[k, J](const PolySection& f) { return harmonic_part(iota_jv(f, J), k + 1); },
                       [n, J](const PolySection& h) {
                         PolySection g(n, Space::vector);
                         for (int a = 0; a < n; ++a)
                           for (int b = 0; b < n; ++b)
                             if (J[a][b] != 0) g(a) += h(0).diff(b) * mpq_class(J[a][b]);
                         return g;
                       }});
    }
  } else if (E == Space::sym2) {
    if (c.iota_jv) throw std::invalid_argument("iota_{Jv} constraint applies to V-valued sections only");
    if (c.iota_v) {
      p.ops.push_back({[k](const PolySection& f) { return harmonic_part(iota_v(f), k + 1); },
                       [n, c, J](const PolySection& h) {
                         PolySection m(n, Space::matrix);
                         for (int a = 0; a < n; ++a)
                           for (int b = 0; b < n; ++b) m(a, b) = h(a).diff(b);
                         Problem q{n, 0, Space::sym2, c, J, {}};
                         return project_fibre(m, q);
                       }});
    }
    if (c.iota_vv) {
      // f -> degree-k part of v^T f v; adjoint h -> pi_k(d_a d_b (|v|^2 h)) / (2(n+2k))
      p.ops.push_back({[k](const PolySection& f) { return harmonic_part(iota_v(iota_v(f)), k); },
                       [n, k, c, J](const PolySection& h) {
                         const Poly r2h = Poly::radius2(n) * h(0);
                         PolySection m(n, Space::matrix);
                         const mpq_class scale(1, 2L * (n + 2L * k));
                         for (int a = 0; a < n; ++a)
                           for (int b = 0; b < n; ++b) m(a, b) = degree_project(r2h.diff(a).diff(b), k) * scale;
                         Problem q{n, 0, Space::sym2, c, J, {}};
                         return project_fibre(m, q);
                       }});
    }
  } else if (E == Space::scalar) {
    if (c.iota_v || c.iota_jv || c.iota_vv || c.commutes_j)
      throw std::invalid_argument("scalar sections carry no constraints");
  } else {
    throw std::invalid_argument("sampler supports scalar, vector and sym2 sections");
  }
  return p;
}

Block apply_all(const Problem& p, const PolySection& f) {
  Block out;
  for (const auto& op : p.ops) out.push_back(op.apply(f));
  return out;
}

PolySection adjoint_all(const Problem& p, const Block& x, const PolySection& zero) {
  PolySection g = zero;
  for (std::size_t i = 0; i < p.ops.size(); ++i) g = g + p.ops[i].adjoint(x[i]);
  return g;
}

mpq_class inner(const Block& x, const Block& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += fischer_inner(x[i], y[i]);
  return s;
}

void axpy(Block& y, const mpq_class& a, const Block& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + x[i] * a;
}

bool block_zero(const Block& x) {
  for (const auto& s : x)
    if (!s.is_zero()) return false;
  return true;
}

Poly random_harmonic(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly p(n);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) ++e[static_cast<std::size_t>(var(rng))];
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(make_monomial(e), c);
  }
  return degree_project(p, k);
}

PolySection random_domain_element(const Problem& p, std::mt19937_64& rng) {
  const int n = p.n;
  if (p.E == Space::scalar) return PolySection::from_scalar(random_harmonic(n, p.k, rng));
  if (p.E == Space::vector) {
    PolySection g(n, Space::vector);
    for (int a = 0; a < n; ++a) g(a) = random_harmonic(n, p.k, rng);
    return g;
  }
  PolySection m(n, Space::matrix);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      m(a, b) = random_harmonic(n, p.k, rng);
      m(b, a) = m(a, b);
    }
  return project_fibre(m, p);
}

void monomials_of_degree(int n, int k, int var, std::vector<int>& e, std::vector<Monomial>& out) {
  if (var == n - 1) {
    e[static_cast<std::size_t>(var)] = k;
    out.push_back(make_monomial(e));
    e[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int d = k; d >= 0; --d) {
    e[static_cast<std::size_t>(var)] = d;
    monomials_of_degree(n, k - d, var + 1, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

using Key = std::tuple<int, int, Monomial>;
using SparseRow = std::map<Key, mpq_class>;

class RankCounter {
 public:
  bool add(SparseRow v) {
    while (!v.empty()) {
      const auto lead = v.begin();
      const auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        const Key key = lead->first;
        const mpq_class inv = 1 / lead->second;
        for (auto& [k, val] : v) val *= inv;
        pivots_.emplace(key, std::move(v));
        return true;
      }
      const mpq_class c = lead->second;
      for (const auto& [key, val] : piv->second) {
        auto [it, inserted] = v.try_emplace(key, 0);
        it->second -= c * val;
        if (sgn(it->second) == 0) v.erase(it);
      }
    }
    return false;
  }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<Key, SparseRow> pivots_;
};

SparseRow flatten(const Block& b) {
  SparseRow row;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int c = 0; c < b[i].size(); ++c)
      for (const auto& [m, v] : b[i](c).terms()) row.emplace(Key{static_cast<int>(i), c, m}, v);
  return row;
}

}  // namespace

SampleResult sample_admissible_section(int n, int k, Space E, const Constraints& c, const IntMat& J,
                                       std::uint64_t seed) {
  const Problem p = build_problem(n, k, E, c, J);
  std::mt19937_64 rng(seed);
  SampleResult out;
  const PolySection g = random_domain_element(p, rng);
  for (const auto& q : g.comp) out.domain_terms += static_cast<int>(q.terms().size());
  if (p.ops.empty()) {
    if (!g.is_zero()) out.section = g;
    return out;
  }
  // minimize |f - g| in the Fischer norm subject to B f = 0: f = g - B^* x with B B^* x = B g
  const Block b = apply_all(p, g);
  Block x;
  for (const auto& s : b) x.push_back(s * mpq_class(0));
  Block r = b;
  Block d = r;
  mpq_class rr = inner(r, r);
  const PolySection zero = g * mpq_class(0);
  while (sgn(rr) != 0) {
    if (++out.cg_iterations > 500) throw std::runtime_error("conjugate gradients did not terminate");
    const Block md = apply_all(p, adjoint_all(p, d, zero));
    const mpq_class alpha = rr / inner(d, md);
    axpy(x, alpha, d);
    axpy(r, -alpha, md);
    const mpq_class rr_next = inner(r, r);
    if (sgn(rr_next) == 0) break;
    const mpq_class beta = rr_next / rr;
    Block dn = r;
    axpy(dn, beta, d);
    d = std::move(dn);
    rr = rr_next;
  }
  const PolySection f = g - adjoint_all(p, x, zero);
  if (!block_zero(apply_all(p, f))) throw std::logic_error("projected sample violates the constraints");
  if (!f.is_zero()) out.section = f;
  return out;
}

int admissible_kernel_dimension(int n, int k, Space E, const Constraints& c, const IntMat& J, int max_unknowns) {
  const Problem p = build_problem(n, k, E, c, J);
  std::vector<Monomial> mons;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  monomials_of_degree(n, k, 0, e, mons);
  std::vector<PolySection> span;
  auto harmonic_monomial = [&](Monomial m) {
    Poly q(n);
    q.add_term(m, 1);
    return degree_project(q, k);
  };
  if (E == Space::scalar || E == Space::vector) {
    const int comps = E == Space::scalar ? 1 : n;
    if (static_cast<long>(comps) * static_cast<long>(mons.size()) > max_unknowns)
      throw std::length_error("kernel system too large");
    for (int a = 0; a < comps; ++a)
      for (Monomial m : mons) {
        PolySection s(n, E);
        s(a) = harmonic_monomial(m);
        span.push_back(std::move(s));
      }
  } else {
    if (static_cast<long>(n) * (n + 1) / 2 * static_cast<long>(mons.size()) > max_unknowns)
      throw std::length_error("kernel system too large");
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (Monomial m : mons) {
          PolySection s(n, Space::matrix);
          s(a, b) = harmonic_monomial(m);
          s(b, a) = s(a, b);
          span.push_back(project_fibre(s, p));
        }
  }
  RankCounter domain, image;
  for (const auto& s : span) {
    domain.add(flatten({s}));
    image.add(flatten(apply_all(p, s)));
  }
  return domain.rank() - image.rank();
}

}  // namespace kc::fiber
