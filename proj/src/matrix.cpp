#include "gskit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gskit/errors.hpp"
#include "gskit/tolerances.hpp"

namespace gskit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ShapeError(what);
}

}  // namespace

RealMatrix::RealMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  a_.assign(size_t(rows) * cols, 0.0);
}

RealMatrix::RealMatrix(int rows, int cols, std::initializer_list<double> entries)
    : RealMatrix(rows, cols) {
  require(int(entries.size()) == rows * cols, "initializer size mismatch");
  std::copy(entries.begin(), entries.end(), a_.begin());
}

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RealMatrix RealMatrix::operator*(const RealMatrix& o) const {
  require(cols_ == o.rows_, "dimension mismatch in product");
  RealMatrix c(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const double t = (*this)(i, k);
      if (t == 0.0) continue;
      for (int j = 0; j < o.cols_; ++j) c(i, j) += t * o(k, j);
    }
  return c;
}

RealMatrix RealMatrix::operator+(const RealMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in sum");
  RealMatrix c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] += o.a_[i];
  return c;
}

RealMatrix RealMatrix::operator-(const RealMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in difference");
  RealMatrix c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] -= o.a_[i];
  return c;
}

RealMatrix RealMatrix::operator*(double s) const {
  RealMatrix c = *this;
  for (double& x : c.a_) x *= s;
  return c;
}

double RealMatrix::max_abs() const {
  double m = 0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

double RealMatrix::frobenius() const {
  double s = 0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

bool RealMatrix::finite() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](double x) { return std::isfinite(x); });
}

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  a_.assign(size_t(rows) * cols, cplx(0, 0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
  return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

// Hot path of the Fock oracle; written over raw doubles so the inner loop
// vectorizes.
ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  require(cols_ == o.rows_, "dimension mismatch in product");
  ComplexMatrix c(rows_, o.cols_);
  const int n = o.cols_;
  for (int i = 0; i < rows_; ++i) {
    double* __restrict ci = reinterpret_cast<double*>(c.row(i));
    for (int k = 0; k < cols_; ++k) {
      const cplx t = (*this)(i, k);
      const double tr = t.real(), ti = t.imag();
      if (tr == 0.0 && ti == 0.0) continue;
      const double* __restrict bk = reinterpret_cast<const double*>(o.row(k));
      for (int j = 0; j < n; ++j) {
        const double br = bk[2 * j], bi = bk[2 * j + 1];
        ci[2 * j] += tr * br - ti * bi;
        ci[2 * j + 1] += tr * bi + ti * br;
      }
    }
  }
  return c;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in sum");
  ComplexMatrix c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] += o.a_[i];
  return c;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "dimension mismatch in difference");
  ComplexMatrix c = *this;
  for (size_t i = 0; i < a_.size(); ++i) c.a_[i] -= o.a_[i];
  return c;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix c = *this;
  for (cplx& x : c.a_) x *= s;
  return c;
}

double ComplexMatrix::max_abs() const {
  double m = 0;
  for (const cplx& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0;
  for (const cplx& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::one_norm() const {
  double best = 0;
  for (int j = 0; j < cols_; ++j) {
    double s = 0;
    for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool ComplexMatrix::finite() const {
  return std::all_of(a_.begin(), a_.end(), [](const cplx& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

namespace {

inline double minor2(const RealMatrix& a, int r0, int r1, int c0, int c1) {
  return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
}

double det_lu(RealMatrix a) {
  const int n = a.rows();
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

}  // namespace

double det(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return minor2(m, 0, 1, 0, 1);
    case 3:
      return m(0, 0) * minor2(m, 1, 2, 1, 2) - m(0, 1) * minor2(m, 1, 2, 0, 2) +
             m(0, 2) * minor2(m, 1, 2, 0, 1);
    case 4:
      // Laplace expansion along the first two rows: exact block structure,
      // no pivoting noise.
      return minor2(m, 0, 1, 0, 1) * minor2(m, 2, 3, 2, 3) -
             minor2(m, 0, 1, 0, 2) * minor2(m, 2, 3, 1, 3) +
             minor2(m, 0, 1, 0, 3) * minor2(m, 2, 3, 1, 2) +
             minor2(m, 0, 1, 1, 2) * minor2(m, 2, 3, 0, 3) -
             minor2(m, 0, 1, 1, 3) * minor2(m, 2, 3, 0, 2) +
             minor2(m, 0, 1, 2, 3) * minor2(m, 2, 3, 0, 1);
    default:
      return det_lu(m);
  }
}

RealMatrix inverse(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const int n = m.rows();
  RealMatrix a = m;
  RealMatrix x = RealMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (a(p, k) == 0.0) throw NumericError("singular matrix in inverse");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(x(p, j), x(k, j));
      }
    const double piv = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= piv;
      x(k, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        x(i, j) -= f * x(k, j);
      }
    }
  }
  return x;
}

ComplexMatrix solve(const ComplexMatrix& a0, const ComplexMatrix& b0) {
  if (a0.rows() != a0.cols() || a0.rows() != b0.rows())
    throw ShapeError("dimension mismatch in solve");
  const int n = a0.rows(), m = b0.cols();
  ComplexMatrix a = a0, b = b0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) == 0.0) throw NumericError("singular system in solve");
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      for (int j = 0; j < m; ++j) std::swap(b(p, j), b(k, j));
    }
    const cplx piv = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a(i, k) / piv;
      if (f == cplx(0, 0)) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
    }
  }
  for (int k = n - 1; k >= 0; --k) {
    for (int j = 0; j < m; ++j) {
      cplx s = b(k, j);
      for (int i = k + 1; i < n; ++i) s -= a(k, i) * b(i, j);
      b(k, j) = s / a(k, k);
    }
  }
  return b;
}

namespace {

// Elementary reflector H = I - tau v v^H with v(0) = 1 such that
// H^H [alpha; x] = [beta; 0], beta real (LAPACK zlarfg).
struct Reflector {
  cplx tau{0, 0};
  double beta = 0;
};

Reflector make_reflector(cplx& alpha, cplx* x, int n) {
  Reflector r;
  double xnorm = 0;
  for (int i = 0; i < n; ++i) xnorm += std::norm(x[i]);
  xnorm = std::sqrt(xnorm);
  if (xnorm == 0.0 && alpha.imag() == 0.0) {
    r.tau = 0;
    r.beta = alpha.real();
    return r;
  }
  const double anorm = std::abs(alpha);
  double beta = std::hypot(anorm, xnorm);
  if (alpha.real() > 0) beta = -beta;
  r.beta = beta;
  r.tau = cplx((beta - alpha.real()) / beta, -alpha.imag() / beta);
  const cplx scale = 1.0 / (alpha - beta);
  for (int i = 0; i < n; ++i) x[i] *= scale;
  alpha = beta;
  return r;
}

// Implicit-shift QL on a real symmetric tridiagonal; rotations optionally
// accumulated into z (n x n, real, stored row-major).
void tqli(std::vector<double>& d, std::vector<double>& e,
          std::vector<double>* z, int n) {
  e.push_back(0.0);  // e[n-1] sentinel
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]));
  // Deflation threshold needs the absolute floor: with clusters of
  // near-zero diagonal entries a purely relative test never fires.
  const double floor_ = std::numeric_limits<double>::epsilon() * anorm;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-17 * dd + floor_) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw NumericError("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double rr = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(rr, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          rr = std::hypot(f, g);
          e[i + 1] = rr;
          if (rr == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / rr;
          c = g / rr;
          g = d[i + 1] - p;
          rr = (d[i] - g) * s + 2.0 * c * b;
          p = s * rr;
          d[i + 1] = g + p;
          g = c * rr - b;
          if (z) {
            double* zz = z->data();
            for (int k = 0; k < n; ++k) {
              f = zz[size_t(k) * n + i + 1];
              zz[size_t(k) * n + i + 1] = s * zz[size_t(k) * n + i] + c * f;
              zz[size_t(k) * n + i] = c * zz[size_t(k) * n + i] - s * f;
            }
          }
        }
        if (rr == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m, bool with_vectors) {
  if (m.rows() != m.cols()) throw ShapeError("hermitian_eig needs a square matrix");
  const int n = m.rows();
  {
    double dev = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    if (dev > tol::hermitian_check)
      throw Error(ErrorCode::numeric,
                  "hermitian_eig: input deviates from Hermitian by " +
                      std::to_string(dev));
  }

  ComplexMatrix a = m;
  std::vector<double> d(n), e(std::max(0, n - 1));
  std::vector<cplx> taus(std::max(0, n - 1));

  // Householder reduction to real symmetric tridiagonal (zhetd2, lower).
  std::vector<cplx> p(n), w(n);
  for (int k = 0; k < n - 1; ++k) {
    cplx alpha = a(k + 1, k);
    std::vector<cplx> xbuf(std::max(0, n - k - 2));
    for (int i = 0; i < int(xbuf.size()); ++i) xbuf[i] = a(k + 2 + i, k);
    Reflector r = make_reflector(alpha, xbuf.data(), int(xbuf.size()));
    e[k] = r.beta;
    taus[k] = r.tau;
    for (int i = 0; i < int(xbuf.size()); ++i) a(k + 2 + i, k) = xbuf[i];
    if (r.tau != cplx(0, 0)) {
      // v lives in a(k+1..n-1, k) with v(0) = 1
      a(k + 1, k) = 1.0;
      const int mlen = n - k - 1;
      // p = tau * A22 * v (use the lower triangle, A22 Hermitian)
      for (int i = 0; i < mlen; ++i) {
        cplx s = 0;
        for (int j = 0; j < mlen; ++j) {
          const cplx aij = (j <= i) ? a(k + 1 + i, k + 1 + j)
                                    : std::conj(a(k + 1 + j, k + 1 + i));
          s += aij * a(k + 1 + j, k);
        }
        p[i] = r.tau * s;
      }
      cplx dot = 0;
      for (int i = 0; i < mlen; ++i) dot += std::conj(p[i]) * a(k + 1 + i, k);
      const cplx half = -0.5 * r.tau * dot;
      for (int i = 0; i < mlen; ++i) w[i] = p[i] + half * a(k + 1 + i, k);
      // A22 -= v w^H + w v^H (lower triangle only)
      for (int i = 0; i < mlen; ++i) {
        const cplx vi = a(k + 1 + i, k);
        for (int j = 0; j <= i; ++j) {
          a(k + 1 + i, k + 1 + j) -= vi * std::conj(w[j]) +
                                     w[i] * std::conj(a(k + 1 + j, k));
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real();

  HermitianEig out;
  if (!with_vectors) {
    tqli(d, e, nullptr, n);
    std::sort(d.begin(), d.end());
    out.values = std::move(d);
    return out;
  }

  // Form Q from the stored reflectors (reverse application to identity).
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (int k = n - 2; k >= 0; --k) {
    if (taus[k] == cplx(0, 0)) continue;
    const int mlen = n - k - 1;
    // v = [1, a(k+2.., k)]
    for (int j = k + 1; j < n; ++j) {
      cplx s = q(k + 1, j);
      for (int i = 1; i < mlen; ++i)
        s += std::conj(a(k + 1 + i, k)) * q(k + 1 + i, j);
      const cplx f = taus[k] * s;
      q(k + 1, j) -= f;
      for (int i = 1; i < mlen; ++i) q(k + 1 + i, j) -= a(k + 1 + i, k) * f;
    }
  }

  std::vector<double> z(size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[size_t(i) * n + i] = 1.0;
  tqli(d, e, &z, n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });

  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int c = 0; c < n; ++c) {
    const int src = order[c];
    out.values[c] = d[src];
    for (int i = 0; i < n; ++i) {
      cplx s = 0;
      for (int k = 0; k < n; ++k) s += q(i, k) * z[size_t(k) * n + src];
      out.vectors(i, c) = s;
    }
  }
  return out;
}

namespace {

cplx poly_eval(const std::vector<cplx>& b, cplx x) {
  // monic: x^n + b[0] x^(n-1) + ... + b[n-1]
  cplx v = 1;
  for (const cplx& c : b) v = v * x + c;
  return v;
}

cplx poly_deriv(const std::vector<cplx>& b, cplx x) {
  const int n = int(b.size());
  cplx v = cplx(double(n), 0);
  for (int i = 0; i < n - 1; ++i) v = v * x + cplx(double(n - 1 - i), 0) * b[i];
  return v;
}

}  // namespace

std::vector<cplx> complex_eigvals(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("complex_eigvals needs a square matrix");
  const int n = m.rows();
  if (n > 4)
    throw UnsupportedError("complex_eigvals supports sizes up to 4");

  // Characteristic polynomial by Faddeev-LeVerrier.
  std::vector<cplx> b(n);
  ComplexMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    cplx tr = 0;
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    b[k - 1] = -tr / double(k);
    if (k < n) {
      ComplexMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted(i, i) += b[k - 1];
      mk = m * shifted;
    }
  }

  // Durand-Kerner with Newton polishing.
  double scale = 1.0;
  for (const cplx& c : b) scale = std::max(scale, std::abs(c));
  std::vector<cplx> roots(n);
  const cplx seed(0.4, 0.9);
  cplx g = 1;
  for (int i = 0; i < n; ++i) {
    g *= seed;
    roots[i] = g * (1.0 + scale);
  }
  for (int it = 0; it < 500; ++it) {
    double shift = 0;
    for (int i = 0; i < n; ++i) {
      cplx denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) == 0.0) denom = 1e-30;
      const cplx dz = poly_eval(b, roots[i]) / denom;
      roots[i] -= dz;
      shift = std::max(shift, std::abs(dz));
    }
    if (shift < 1e-15 * (1.0 + scale)) break;
  }
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 5; ++it) {
      const cplx dp = poly_deriv(b, roots[i]);
      if (std::abs(dp) < 1e-300) break;
      roots[i] -= poly_eval(b, roots[i]) / dp;
    }
  }

  // Multiple roots scatter like eps^(1/m) around the true value. Collapse
  // each cluster to a derivative-based multiple-root estimate, accepted
  // only when the polynomial residual stays at the evaluation noise floor
  // (so genuinely separate roots are never merged).
  std::vector<cplx> coef(n + 1);
  coef[0] = 1;
  for (int i = 0; i < n; ++i) coef[i + 1] = b[i];
  const auto deriv_eval = [&](cplx x, int k) {
    cplx v = 0;
    for (int i = 0; i <= n - k; ++i) {
      double f = 1;
      for (int t = 0; t < k; ++t) f *= double(n - i - t);
      v = v * x + coef[i] * f;
    }
    return v;
  };
  double rscale = 0;
  for (const cplx& r : roots) rscale = std::max(rscale, std::abs(r));
  const double tau = 0.02 * rscale + 1e-12;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<int> cluster{i};
    for (size_t q = 0; q < cluster.size(); ++q)
      for (int j = 0; j < n; ++j)
        if (!used[j] && std::abs(roots[j] - roots[cluster[q]]) <= tau) {
          used[j] = true;
          cluster.push_back(j);
        }
    const int mult = int(cluster.size());
    if (mult < 2) continue;

    cplx c = 0;
    for (int j : cluster) c += roots[j];
    c /= double(mult);
    for (int it = 0; it < 3; ++it) {
      const cplx dm = deriv_eval(c, mult);
      if (std::abs(dm) < 1e-300) break;
      c -= deriv_eval(c, mult - 1) / dm;  // p(z) ~ q(t) (z - t)^mult
    }
    double noise = 0;
    for (int k = 0; k <= n; ++k)
      noise = noise * std::abs(c) + std::abs(coef[k]);
    if (std::abs(poly_eval(b, c)) <= 2.5e-13 * std::max(noise, 1.0))
      for (int j : cluster) roots[j] = c;
  }
  return roots;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("expm needs a square matrix");
  if (!m.finite())
    throw Error(ErrorCode::numeric, "expm: non-finite entries");
  const int n = m.rows();

  static const double pade[] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const double theta13 = 5.371920351148152;

  const double nrm = m.one_norm();
  int s = 0;
  if (nrm > theta13)
    s = int(std::ceil(std::log2(nrm / theta13)));
  ComplexMatrix a = m * cplx(std::ldexp(1.0, -s), 0);

  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  ComplexMatrix u_inner = a6 * pade[13] + a4 * pade[11] + a2 * pade[9];
  ComplexMatrix u =
      a * (a6 * u_inner + a6 * pade[7] + a4 * pade[5] + a2 * pade[3] +
           eye * pade[1]);
  ComplexMatrix v_inner = a6 * pade[12] + a4 * pade[10] + a2 * pade[8];
  ComplexMatrix v =
      a6 * v_inner + a6 * pade[6] + a4 * pade[4] + a2 * pade[2] + eye * pade[0];

  ComplexMatrix r = solve(v - u, v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx f = a(i, j);
      if (f == cplx(0, 0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return c;
}

}  // namespace gskit
