#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "kc/curvature/curvature.hpp"

namespace kc::curvature {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v.normalized();
}

Vec stack(const Vec& a, const Vec& b) {
  Vec x(a.size() + b.size());
  x << a, b;
  return x;
}

nlohmann::json vec_json(const Vec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Vec project_gradient(const ManifoldProblem& p, const Vec& x) {
  const Vec g = p.grad(x);
  const Mat A = p.constraint_jacobian(x);
  const Mat AAt = A * A.transpose();
  const Vec mult = AAt.completeOrthogonalDecomposition().solve(A * g);
  return g - A.transpose() * mult;
}

OptimResult maximize(const ManifoldProblem& p, const Vec& x0, double grad_tol, int max_iter) {
  OptimResult r;
  r.x = p.retract(x0);
  r.value = p.f(r.x);
  Vec g = project_gradient(p, r.x);
  double t = 0.1;
  Vec x_prev, g_prev;
  for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
    const double gn2 = g.squaredNorm();
    r.projected_grad_norm = std::sqrt(gn2);
    if (r.projected_grad_norm <= grad_tol) {
      r.converged = true;
      return r;
    }
    // Barzilai-Borwein guess, then Armijo backtracking along the retraction.
    if (x_prev.size() > 0) {
      const Vec s = r.x - x_prev, y = g - g_prev;
      const double sy = std::abs(s.dot(y));
      if (sy > 1e-300) t = std::clamp(s.squaredNorm() / sy, 1e-6, 1e3);
    }
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      const Vec xn = p.retract(r.x + t * g);
      const double fn = p.f(xn);
      if (fn >= r.value + 1e-4 * t * gn2) {
        x_prev = r.x;
        g_prev = g;
        r.x = xn;
        r.value = fn;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // no ascent direction left at machine precision
    g = project_gradient(p, r.x);
  }
  r.projected_grad_norm = g.norm();
  r.converged = r.projected_grad_norm <= grad_tol;
  return r;
}

ManifoldProblem holomorphic_problem(const CurvatureTensor& R, const Mat& J, bool maximize_it) {
  const double sg = maximize_it ? 1.0 : -1.0;
  ManifoldProblem p;
  p.f = [&R, &J, sg](const Vec& x) { return sg * R.holomorphic(x, J); };
  p.grad = [&R, &J, sg](const Vec& x) {
    const Vec jx = J * x;
    const Vec g = R.partial(0, jx, jx, x) + J.transpose() * R.partial(1, x, jx, x) +
                  J.transpose() * R.partial(2, x, jx, x) + R.partial(3, x, jx, jx);
    return Vec(sg * g);
  };
  p.constraint_jacobian = [](const Vec& x) {
    Mat A(1, x.size());
    A.row(0) = 2.0 * x.transpose();
    return A;
  };
  p.retract = [](const Vec& x) { return Vec(x.normalized()); };
  return p;
}

namespace {

// R(X,Y,Y,X) gradients in X and Y separately.
void sec_partials(const CurvatureTensor& R, const Vec& x, const Vec& y, Vec& gx, Vec& gy) {
  gx = R.partial(0, y, y, x) + R.partial(3, x, y, y);
  gy = R.partial(1, x, y, x) + R.partial(2, x, y, x);
}

}  // namespace

ManifoldProblem stratum_problem(const CurvatureTensor& R, const Mat& J, double theta, bool maximize_it) {
  const double sg = maximize_it ? 1.0 : -1.0;
  const double c = std::cos(theta), s = std::sin(theta);
  const int n = R.dim();
  auto y_of = [&J, c, s, n](const Vec& x) -> Vec { return -c * (J * x.head(n)) + s * x.tail(n); };
  ManifoldProblem p;
  p.f = [&R, y_of, sg, n](const Vec& x) { return sg * R.sec(x.head(n), y_of(x)); };
  p.grad = [&R, &J, y_of, sg, c, s, n](const Vec& x) {
    Vec gx, gy;
    sec_partials(R, x.head(n), y_of(x), gx, gy);
    return Vec(sg * stack(gx + c * (J * gy), s * gy));
  };
  p.constraint_jacobian = [&J, n](const Vec& x) {
    const Vec X = x.head(n), Z = x.tail(n);
    Mat A = Mat::Zero(4, 2 * n);
    A.block(0, 0, 1, n) = 2.0 * X.transpose();
    A.block(1, n, 1, n) = 2.0 * Z.transpose();
    A.block(2, 0, 1, n) = Z.transpose();
    A.block(2, n, 1, n) = X.transpose();
    A.block(3, 0, 1, n) = (-(J * Z)).transpose();
    A.block(3, n, 1, n) = (J * X).transpose();
    return A;
  };
  p.retract = [&J, n](const Vec& x) {
    const Vec X = x.head(n).normalized();
    const Vec jx = J * X;
    Vec Z = x.tail(n);
    Z -= Z.dot(X) * X;
    Z -= Z.dot(jx) * jx;
    return stack(X, Z.normalized());
  };
  return p;
}

ManifoldProblem stiefel_problem(const CurvatureTensor& R, bool maximize_it) {
  const double sg = maximize_it ? 1.0 : -1.0;
  const int n = R.dim();
  ManifoldProblem p;
  p.f = [&R, sg, n](const Vec& x) { return sg * R.sec(x.head(n), x.tail(n)); };
  p.grad = [&R, sg, n](const Vec& x) {
    Vec gx, gy;
    sec_partials(R, x.head(n), x.tail(n), gx, gy);
    return Vec(sg * stack(gx, gy));
  };
  p.constraint_jacobian = [n](const Vec& x) {
    const Vec X = x.head(n), Y = x.tail(n);
    Mat A = Mat::Zero(3, 2 * n);
    A.block(0, 0, 1, n) = 2.0 * X.transpose();
    A.block(1, n, 1, n) = 2.0 * Y.transpose();
    A.block(2, 0, 1, n) = Y.transpose();
    A.block(2, n, 1, n) = X.transpose();
    return A;
  };
  p.retract = [n](const Vec& x) {
    const Vec X = x.head(n).normalized();
    Vec Y = x.tail(n);
    Y -= Y.dot(X) * X;
    return stack(X, Y.normalized());
  };
  return p;
}

namespace {

// Runs both directions from `restarts` random starts; `unpack` maps a point to (X, Y).
template <class MakeProblem, class Start, class Unpack>
Extrema search(MakeProblem make, Start start, Unpack unpack, int restarts, std::uint64_t seed) {
  Extrema e;
  e.restarts = restarts;
  e.max.value = -std::numeric_limits<double>::infinity();
  e.min.value = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  const ManifoldProblem pmax = make(true), pmin = make(false);
  for (int r = 0; r < restarts; ++r) {
    const Vec x0 = start(rng);
    const OptimResult hi = maximize(pmax, x0, 1e-9, 4000);
    if (hi.value > e.max.value) {
      e.max.value = hi.value;
      unpack(hi.x, e.max.x, e.max.y);
      e.max.projected_grad_norm = hi.projected_grad_norm;
      e.max.converged = hi.converged;
    }
    const OptimResult lo = maximize(pmin, x0, 1e-9, 4000);
    if (-lo.value < e.min.value) {
      e.min.value = -lo.value;
      unpack(lo.x, e.min.x, e.min.y);
      e.min.projected_grad_norm = lo.projected_grad_norm;
      e.min.converged = lo.converged;
    }
  }
  return e;
}

}  // namespace

Extrema holomorphic_extrema(const CurvatureTensor& R, const Mat& J, int restarts, std::uint64_t seed) {
  const int n = R.dim();
  return search([&](bool up) { return holomorphic_problem(R, J, up); },
                [n](std::mt19937_64& rng) { return random_unit(rng, n); },
                [&J](const Vec& x, Vec& X, Vec& Y) {
                  X = x;
                  Y = J * x;
                },
                restarts, seed);
}

Extrema stratum_extrema(const CurvatureTensor& R, const Mat& J, double theta, int restarts, std::uint64_t seed) {
  const int n = R.dim();
  const double c = std::cos(theta), s = std::sin(theta);
  return search([&](bool up) { return stratum_problem(R, J, theta, up); },
                [n](std::mt19937_64& rng) { return stack(random_unit(rng, n), random_unit(rng, n)); },
                [&J, c, s, n](const Vec& x, Vec& X, Vec& Y) {
                  X = x.head(n);
                  Y = -c * (J * X) + s * x.tail(n);
                },
                restarts, seed);
}

Extrema sectional_extrema(const CurvatureTensor& R, int restarts, std::uint64_t seed) {
  const int n = R.dim();
  return search([&](bool up) { return stiefel_problem(R, up); },
                [n](std::mt19937_64& rng) { return stack(random_unit(rng, n), random_unit(rng, n)); },
                [n](const Vec& x, Vec& X, Vec& Y) {
                  X = x.head(n);
                  Y = x.tail(n);
                },
                restarts, seed);
}

PinchReport verify_bishop_goldberg(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int restarts,
                                   double tol, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PinchReport rep;
  rep.restarts = restarts;
  Certificate& c = rep.certificate;
  c.claim_id = "curvature.bishop_goldberg";
  c.anchor = "sectional curvature bounds of holomorphically pinched Kahler tensors, per angle stratum";
  c.params = {{"n", R.dim()}, {"lambda", lambda}, {"restarts", restarts}, {"tol", tol}};
  c.seed = seed;
  auto witness = [](const Extremum& e) {
    return nlohmann::json{{"value", e.value}, {"X", vec_json(e.x)}, {"Y", vec_json(e.y)},
                          {"projected_grad_norm", e.projected_grad_norm}};
  };

  const Extrema h = holomorphic_extrema(R, J.J, restarts, seed);
  rep.h_min = h.min.value;
  rep.h_max = h.max.value;
  if (rep.h_min < -1.0 - tol) c.fail("holomorphic curvature below -1", witness(h.min));
  if (rep.h_max > -lambda + tol) c.fail("holomorphic curvature above -lambda", witness(h.max));
  rep.all_converged = h.min.converged && h.max.converged;

  nlohmann::json strata = nlohmann::json::array();
  for (int i = 0; i <= 4; ++i) {
    StratumReport s;
    s.theta = i * kPi / 8.0;
    const double cs = std::cos(s.theta), sn = std::sin(s.theta);
    s.lower_bound = -(1.0 - 0.75 * lambda * sn * sn);
    s.upper_bound = -0.25 * (3.0 * (1.0 + cs * cs) * lambda - 2.0);
    const Extrema e = stratum_extrema(R, J.J, s.theta, restarts, seed + 1 + static_cast<std::uint64_t>(i));
    s.min = e.min;
    s.max = e.max;
    rep.all_converged = rep.all_converged && e.min.converged && e.max.converged;
    const nlohmann::json at{{"theta", s.theta}, {"min", s.min.value}, {"max", s.max.value},
                            {"lower_bound", s.lower_bound}, {"upper_bound", s.upper_bound}};
    strata.push_back(at);
    if (s.min.value < s.lower_bound - tol) c.fail("stratum lower bound violated", {{"stratum", at}, {"witness", witness(s.min)}});
    if (s.max.value > s.upper_bound + tol) c.fail("stratum upper bound violated", {{"stratum", at}, {"witness", witness(s.max)}});
    rep.strata.push_back(s);
  }

  const Extrema sec = sectional_extrema(R, restarts, seed + 100);
  rep.sec_min = sec.min.value;
  rep.sec_max = sec.max.value;
  rep.sec_min_witness = sec.min;
  rep.sec_max_witness = sec.max;
  rep.all_converged = rep.all_converged && sec.min.converged && sec.max.converged;
  const double delta = (3.0 * lambda - 2.0) / 4.0;
  if (rep.sec_min < -1.0 - tol) c.fail("sectional curvature below -1", witness(sec.min));
  if (rep.sec_max > -delta + tol) c.fail("sectional curvature above -(3 lambda - 2)/4", witness(sec.max));

  c.witnesses["strata"] = strata;
  c.witnesses["h_range"] = {rep.h_min, rep.h_max};
  c.witnesses["sec_range"] = {rep.sec_min, rep.sec_max};
  c.witnesses["negative_pinching_delta"] = delta;
  c.witnesses["all_converged"] = rep.all_converged;
  c.precision_bits = 53;
  c.runtime_ms = ms_since(t0);
  return rep;
}

Certificate verify_r0_bound(const CurvatureTensor& R, const ComplexStructure& J, double lambda, int samples,
                            int restarts, double tol, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate c;
  c.claim_id = "curvature.r0_sectional_bound";
  c.anchor = "sectional values of R - (1+lambda)/2 G bounded by 1 - lambda";
  c.params = {{"n", R.dim()}, {"lambda", lambda}, {"samples", samples}, {"restarts", restarts}, {"tol", tol}};
  c.seed = seed;
  const CurvatureTensor r0 = r0_decompose(R, lambda, J);
  const int n = R.dim();
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = random_unit(rng, n);
    Vec y = random_unit(rng, n);
    y = (y - y.dot(x) * x).normalized();
    worst = std::max(worst, std::abs(r0.sec(x, y)));
  }
  const Extrema e = sectional_extrema(r0, restarts, seed + 1);
  const double opt = std::max(std::abs(e.min.value), std::abs(e.max.value));
  c.witnesses["sampled_max"] = worst;
  c.witnesses["optimized_max"] = opt;
  c.witnesses["bound"] = 1.0 - lambda;
  if (std::max(worst, opt) > 1.0 - lambda + tol) {
    const Extremum& w = std::abs(e.min.value) > std::abs(e.max.value) ? e.min : e.max;
    c.fail("bound exceeded", {{"value", w.value}, {"X", vec_json(w.x)}, {"Y", vec_json(w.y)}});
  }
  c.precision_bits = 53;
  c.runtime_ms = ms_since(t0);
  return c;
}

}  // namespace kc::curvature
