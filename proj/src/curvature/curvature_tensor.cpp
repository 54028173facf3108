#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kc/curvature/curvature.hpp"

namespace kc::curvature {

double CurvatureTensor::eval(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
  return partial(3, x, y, z).dot(w);
}

Vec CurvatureTensor::partial(int slot, const Vec& a, const Vec& b, const Vec& c) const {
  const int n = n_;
  Vec out = Vec::Zero(n);
  const double* r = c_.data();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double* row = r + index(i, j, k, 0);
        switch (slot) {
          case 0: out(i) += a(j) * b(k) * c.dot(Eigen::Map<const Vec>(row, n)); break;
          case 1: out(j) += a(i) * b(k) * c.dot(Eigen::Map<const Vec>(row, n)); break;
          case 2: out(k) += a(i) * b(j) * c.dot(Eigen::Map<const Vec>(row, n)); break;
          default: out += (a(i) * b(j) * c(k)) * Eigen::Map<const Vec>(row, n); break;
        }
      }
  return out;
}

Mat CurvatureTensor::endomorphism(const Vec& x, const Vec& y) const {
  const int n = n_;
  Mat A = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double xy = x(i) * y(j);
      if (xy == 0.0) continue;
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) A(w, z) += xy * (*this)(i, j, z, w);
    }
  return A;
}

double CurvatureTensor::symmetry_residual() const {
  double r = 0.0;
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = (*this)(i, j, k, l);
          r = std::max({r, std::abs(v + (*this)(j, i, k, l)), std::abs(v + (*this)(i, j, l, k)),
                        std::abs(v - (*this)(k, l, i, j))});
        }
  return r;
}

double CurvatureTensor::bianchi_residual() const {
  double r = 0.0;
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r = std::max(r, std::abs((*this)(i, j, k, l) + (*this)(k, i, j, l) + (*this)(j, k, i, l)));
  return r;
}

double CurvatureTensor::kahler_residual(const Mat& J) const {
  const int n = n_;
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ji = J.col(i), jj = J.col(j);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          for (int a = 0; a < n; ++a) {
            if (ji(a) == 0.0) continue;
            for (int b = 0; b < n; ++b) v += ji(a) * jj(b) * (*this)(a, b, k, l);
          }
          r = std::max(r, std::abs(v - (*this)(i, j, k, l)));
        }
    }
  return r;
}

double CurvatureTensor::norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

CurvatureTensor CurvatureTensor::operator+(const CurvatureTensor& o) const {
  if (o.n_ != n_) throw std::invalid_argument("dimension mismatch");
  CurvatureTensor r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  r.kahler = kahler && o.kahler;
  return r;
}

CurvatureTensor CurvatureTensor::operator-(const CurvatureTensor& o) const { return *this + o * -1.0; }

CurvatureTensor CurvatureTensor::operator*(double s) const {
  CurvatureTensor r = *this;
  for (double& v : r.c_) v *= s;
  return r;
}

// ---- exact path ----

mpq_class ExactCurvatureTensor::eval(const QVec& x, const QVec& y, const QVec& z, const QVec& w) const {
  mpq_class s = 0;
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (z[k] == 0) continue;
        for (int l = 0; l < n; ++l) {
          const mpq_class& r = (*this)(i, j, k, l);
          if (r != 0 && w[l] != 0) s += r * x[i] * y[j] * z[k] * w[l];
        }
      }
    }
  }
  return s;
}

mpq_class ExactCurvatureTensor::symmetry_residual() const {
  mpq_class r = 0;
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const mpq_class& v = (*this)(i, j, k, l);
          for (const mpq_class d : {mpq_class(v + (*this)(j, i, k, l)), mpq_class(v + (*this)(i, j, l, k)),
                                    mpq_class(v - (*this)(k, l, i, j))})
            if (abs(d) > r) r = abs(d);
        }
  return r;
}

mpq_class ExactCurvatureTensor::bianchi_residual() const {
  mpq_class r = 0;
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const mpq_class d = (*this)(i, j, k, l) + (*this)(k, i, j, l) + (*this)(j, k, i, l);
          if (abs(d) > r) r = abs(d);
        }
  return r;
}

mpq_class ExactCurvatureTensor::kahler_residual(const std::vector<std::vector<int>>& J) const {
  mpq_class r = 0;
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          mpq_class v = 0;
          for (int a = 0; a < n; ++a) {
            if (J[a][i] == 0) continue;
            for (int b = 0; b < n; ++b)
              if (J[b][j] != 0) v += J[a][i] * J[b][j] * (*this)(a, b, k, l);
          }
          const mpq_class d = abs(v - (*this)(i, j, k, l));
          if (d > r) r = d;
        }
  return r;
}

CurvatureTensor ExactCurvatureTensor::to_float() const {
  CurvatureTensor t(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) t.data()[i] = c_[i].get_d();
  t.kahler = kahler;
  return t;
}

// ---- model tensors ----

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

ExactCurvatureTensor g_wedge_g_exact(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  ExactCurvatureTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) t(i, j, k, l) = delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k);
  return t;
}

CurvatureTensor g_wedge_g(int n) { return g_wedge_g_exact(n).to_float(); }

ExactCurvatureTensor complex_hyperbolic_g_exact(const std::vector<std::vector<int>>& J) {
  const int n = static_cast<int>(J.size());
  const ExactCurvatureTensor gg = g_wedge_g_exact(n);
  ExactCurvatureTensor t(n);
  // g^g(e_i, e_j, Je_k, Je_l) = sum_ab J_ak J_bl g^g_ijab
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          mpq_class v = gg(i, j, k, l);
          for (int a = 0; a < n; ++a) {
            if (J[a][k] == 0) continue;
            for (int b = 0; b < n; ++b)
              if (J[b][l] != 0) v += J[a][k] * J[b][l] * gg(i, j, a, b);
          }
          // g(e_i, Je_j) = J_ij
          v += 2 * J[i][j] * J[k][l];
          t(i, j, k, l) = v / 4;
        }
  t.kahler = true;
  return t;
}

ExactCurvatureTensor complex_hyperbolic_g_exact_endomorphism(const std::vector<std::vector<int>>& J) {
  const int n = static_cast<int>(J.size());
  ExactCurvatureTensor t(n);
  std::vector<QVec> e(n, QVec(n, 0)), je(n, QVec(n, 0));
  for (int i = 0; i < n; ++i) {
    e[i][i] = 1;
    for (int a = 0; a < n; ++a) je[i][a] = J[a][i];
  }
  auto dot = [n](const QVec& a, const QVec& b) {
    mpq_class s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  // (X^Y)Z = g(X,Z)Y - g(Y,Z)X
  auto wedge = [&](const QVec& x, const QVec& y, const QVec& z) {
    QVec out(n);
    const mpq_class xz = dot(x, z), yz = dot(y, z);
    for (int a = 0; a < n; ++a) out[a] = xz * y[a] - yz * x[a];
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const mpq_class xjy = dot(e[i], je[j]);
      for (int k = 0; k < n; ++k) {
        const QVec a = wedge(e[i], e[j], e[k]);
        const QVec b = wedge(je[i], je[j], e[k]);
        QVec v(n);
        for (int c = 0; c < n; ++c) v[c] = a[c] + b[c] - 2 * xjy * je[k][c];
        for (int l = 0; l < n; ++l) t(i, j, k, l) = v[l] / 4;
      }
    }
  t.kahler = true;
  return t;
}

CurvatureTensor complex_hyperbolic_g(const ComplexStructure& cs) {
  const int n = cs.dim();
  const Mat& J = cs.J;
  CurvatureTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t(i, j, k, l) = 0.25 * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k) + J(i, k) * J(j, l) -
                                  J(i, l) * J(j, k) + 2.0 * J(i, j) * J(k, l));
  t.kahler = true;
  return t;
}

CurvatureTensor complex_hyperbolic_g_endomorphism(const ComplexStructure& cs) {
  const int n = cs.dim();
  const Mat& J = cs.J;
  CurvatureTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j);
      const Vec jei = J * ei, jej = J * ej;
      const double xjy = ei.dot(jej);
      for (int k = 0; k < n; ++k) {
        const Vec ek = Vec::Unit(n, k);
        const Vec v = ei.dot(ek) * ej - ej.dot(ek) * ei + jei.dot(ek) * jej - jej.dot(ek) * jei - 2.0 * xjy * (J * ek);
        for (int l = 0; l < n; ++l) t(i, j, k, l) = 0.25 * v(l);
      }
    }
  t.kahler = true;
  return t;
}

CurvatureTensor r0_decompose(const CurvatureTensor& R, double lambda, const ComplexStructure& J) {
  if (R.dim() != J.dim()) throw std::invalid_argument("dimension mismatch between R and J");
  if (!R.kahler) throw std::invalid_argument("R is not flagged Kahler");
  CurvatureTensor r0 = R - complex_hyperbolic_g(J) * (0.5 * (1.0 + lambda));
  r0.kahler = true;
  return r0;
}

}  // namespace kc::curvature
