#include "gskit/gaussian.hpp"

#include <cmath>
#include <string>

#include "gskit/errors.hpp"
#include "gskit/tolerances.hpp"

namespace gskit {

namespace {

constexpr double kPi = 3.14159265358979323846;

RealMatrix block_diag2(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i + 2, j + 2) = b(i, j);
    }
  return m;
}

RealMatrix congruence(const RealMatrix& s, const RealMatrix& sigma) {
  return s.transpose() * sigma * s;
}

// Closed-form square root of a symmetric positive definite 2x2 matrix.
RealMatrix sqrtm2(const RealMatrix& m) {
  const double d = det(m);
  if (d <= 0) throw NumericError("sqrtm2: matrix not positive definite");
  const double sd = std::sqrt(d);
  const double t = std::sqrt(m(0, 0) + m(1, 1) + 2.0 * sd);
  RealMatrix r = m;
  r(0, 0) += sd;
  r(1, 1) += sd;
  return r * (1.0 / t);
}

SymplecticSpectrum spectrum_of_matrix(const RealMatrix& sigma) {
  RealMatrix alpha(2, 2), beta(2, 2), gamma(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      alpha(i, j) = sigma(i, j);
      beta(i, j) = sigma(i + 2, j + 2);
      gamma(i, j) = sigma(i, j + 2);
    }
  const double delta = det(alpha) + det(beta) + 2.0 * det(gamma);
  const double d = det(sigma);
  double disc = delta * delta - 4.0 * d;
  if (disc < -tol::discriminant_clamp)
    throw NumericError("symplectic spectrum: negative discriminant " +
                       std::to_string(disc));
  // The subtraction cancels completely for degenerate spectra (pure and
  // symmetric states); round-off leaves noise of order eps * (entry
  // magnitude)^4, which the square root would amplify to a spurious 1e-8
  // splitting. Snap to the exactly degenerate spectrum inside that floor.
  const double mag2 = sigma.max_abs() * sigma.max_abs();
  const double scale = std::max(std::abs(delta), mag2);
  if (disc < 1e-13 * scale * scale) disc = 0;
  const double root = std::sqrt(disc);
  SymplecticSpectrum sp;
  sp.n_minus = std::sqrt(std::max(0.0, (delta - root) / 2.0));
  sp.n_plus = std::sqrt((delta + root) / 2.0);
  return sp;
}

}  // namespace

RealMatrix symplectic_form() {
  return RealMatrix(4, 4,
                    {0, 1, 0, 0,   //
                     -1, 0, 0, 0,  //
                     0, 0, 0, 1,   //
                     0, 0, -1, 0});
}

double heisenberg_min_eig(const RealMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw ShapeError("covariance matrix must be 4x4");
  const RealMatrix omega = symplectic_form();
  ComplexMatrix h = ComplexMatrix::from_real(m);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) += cplx(0, 0.5 * omega(i, j));
  return hermitian_eig(h, false).values.front();
}

TwoModeCov validate(const RealMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw ShapeError("covariance matrix must be 4x4");
  if (!m.finite()) throw ShapeError("covariance matrix has non-finite entries");
  double asym = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
  if (asym > tol::symmetry)
    throw ShapeError("covariance matrix asymmetric by " + std::to_string(asym));

  const double min_eig = heisenberg_min_eig(m);
  if (min_eig < -tol::heisenberg)
    throw UnphysicalError(
        "Heisenberg violation: min eig of sigma + (i/2) Omega = " +
            std::to_string(min_eig),
        min_eig);

  // sigma itself must be positive definite.
  const auto eig = hermitian_eig(ComplexMatrix::from_real(m), false);
  if (eig.values.front() <= 0)
    throw UnphysicalError("covariance matrix not positive definite", min_eig);
  return TwoModeCov(m);
}

Blocks blocks(const TwoModeCov& sigma) {
  Blocks b{RealMatrix(2, 2), RealMatrix(2, 2), RealMatrix(2, 2),
           RealMatrix(2, 2), RealMatrix(2, 2)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b.alpha(i, j) = sigma(i, j);
      b.beta(i, j) = sigma(i + 2, j + 2);
      b.gamma(i, j) = sigma(i, j + 2);
    }
  // delta from rows/cols (1,3), epsilon from (2,4) in 1-based indexing
  const int didx[2] = {0, 2}, eidx[2] = {1, 3};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b.delta(i, j) = sigma(didx[i], didx[j]);
      b.epsilon(i, j) = sigma(eidx[i], eidx[j]);
    }
  return b;
}

double delta_invariant(const TwoModeCov& sigma) {
  const Blocks b = blocks(sigma);
  return det(b.alpha) + det(b.beta) + 2.0 * det(b.gamma);
}

SymplecticSpectrum symplectic_eigenvalues(const TwoModeCov& sigma) {
  return spectrum_of_matrix(sigma.m());
}

SymplecticSpectrum spectrum_oracle(const TwoModeCov& sigma) {
  // Eigenvalues of i Omega sigma; spectrum is symmetric under negation.
  const RealMatrix os = symplectic_form() * sigma.m();
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cplx(0, os(i, j));
  std::vector<cplx> ev = complex_eigvals(m);

  double scale = 0;
  for (const cplx& z : ev) scale = std::max(scale, std::abs(z));
  // pair ev[0] with its negative, the remaining two with each other
  int mate = 1;
  double best = std::abs(ev[0] + ev[1]);
  for (int j = 2; j < 4; ++j) {
    const double g = std::abs(ev[0] + ev[j]);
    if (g < best) {
      best = g;
      mate = j;
    }
  }
  int rest[2], k = 0;
  for (int j = 1; j < 4; ++j)
    if (j != mate) rest[k++] = j;
  const double pair_gap =
      std::max(best, std::abs(ev[rest[0]] + ev[rest[1]]));
  if (pair_gap > 1e-8 * std::max(1.0, scale))
    throw NumericError("spectrum oracle: eigenvalues do not form -/+ pairs");

  const double m1 = 0.5 * (std::abs(ev[0]) + std::abs(ev[mate]));
  const double m2 = 0.5 * (std::abs(ev[rest[0]]) + std::abs(ev[rest[1]]));
  SymplecticSpectrum sp;
  sp.n_minus = std::min(m1, m2);
  sp.n_plus = std::max(m1, m2);
  return sp;
}

StandardFormParams standard_form(const TwoModeCov& sigma) {
  const Blocks b = blocks(sigma);
  const double a = std::sqrt(det(b.alpha));
  const double bb = std::sqrt(det(b.beta));
  const double i3 = det(b.gamma);
  const double i4 = det(sigma.m());
  const double ab = a * bb;
  // c1^2, c2^2 are the roots of t^2 - s t + i3^2 with s = ((ab)^2+i3^2-i4)/ab
  const double s = (ab * ab + i3 * i3 - i4) / ab;
  double disc = s * s - 4.0 * i3 * i3;
  if (disc < 0) {
    if (disc < -1e-10)
      throw NumericError("standard form: invariants inconsistent, disc = " +
                         std::to_string(disc));
    disc = 0;
  }
  const double root = std::sqrt(disc);
  const double t_hi = std::max(0.0, (s + root) / 2.0);
  const double t_lo = std::max(0.0, (s - root) / 2.0);
  StandardFormParams p;
  p.a = a;
  p.b = bb;
  p.c1 = std::sqrt(t_hi);
  p.c2 = (i3 > 0 ? 1.0 : (i3 < 0 ? -1.0 : 0.0)) * std::sqrt(t_lo);
  return p;
}

bool is_symplectic(const RealMatrix& s, double tolerance) {
  if (s.rows() != 4 || s.cols() != 4) return false;
  const RealMatrix omega = symplectic_form();
  return (s.transpose() * omega * s - omega).frobenius() <= tolerance;
}

SymplecticTransform rotation(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {RealMatrix(4, 4,
                     {c, 0, -s, 0,  //
                      0, c, 0, -s,  //
                      s, 0, c, 0,   //
                      0, s, 0, c})};
}

SymplecticTransform two_mode_squeeze(double r) {
  return local_squeeze(r, -r);
}

SymplecticTransform local_squeeze(double r1, double r2) {
  if (!std::isfinite(r1) || !std::isfinite(r2))
    throw ParamError("squeezing parameters must be finite");
  RealMatrix m(4, 4);
  m(0, 0) = std::exp(r1);
  m(1, 1) = std::exp(-r1);
  m(2, 2) = std::exp(r2);
  m(3, 3) = std::exp(-r2);
  return {m};
}

RealMatrix rotation2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return RealMatrix(2, 2, {c, -s, s, c});
}

RealMatrix squeeze2(double r) {
  RealMatrix m(2, 2);
  m(0, 0) = std::exp(r);
  m(1, 1) = std::exp(-r);
  return m;
}

TwoModeCov apply(const SymplecticTransform& s, const TwoModeCov& sigma) {
  if (!is_symplectic(s.s, tol::symplectic_check))
    throw Error(ErrorCode::numeric, "apply: transform is not symplectic");
  return validate(congruence(s.s, sigma.m()));
}

StandardFormReduction standard_form_transform(const TwoModeCov& sigma) {
  const Blocks b = blocks(sigma);
  const StandardFormParams target = standard_form(sigma);

  // Per-mode Williamson: S_i = sqrt(a_i) alpha_i^{-1/2} maps alpha_i to a_i I.
  const RealMatrix s1 = inverse(sqrtm2(b.alpha)) * std::sqrt(target.a);
  const RealMatrix s2 = inverse(sqrtm2(b.beta)) * std::sqrt(target.b);
  RealMatrix s_loc = block_diag2(s1, s2);
  RealMatrix sig1 = congruence(s_loc, sigma.m());

  // Two-sided rotation diagonalization of the transformed gamma block:
  // first a rotation making it symmetric, then a shared Jacobi angle.
  const double w = sig1(0, 2), x = sig1(0, 3), y = sig1(1, 2), z = sig1(1, 3);
  double theta1 = 0, theta2 = 0;
  if (std::abs(x - y) > 0 || std::abs(w + z) > 0)
    theta1 = std::atan2(y - x, w + z);
  {
    const RealMatrix g(2, 2, {w, x, y, z});
    const RealMatrix gs = rotation2(theta1).transpose() * g;
    const double psi =
        0.5 * std::atan2(2.0 * gs(0, 1), gs(0, 0) - gs(1, 1));
    theta1 += psi;
    theta2 = psi;
  }

  // Finite fix-up: quarter-turn local rotations select the sign/order
  // convention (c1 >= |c2|, c1 >= 0) matching standard_form().
  const double quarter[4] = {0, kPi / 2, kPi, 3 * kPi / 2};
  double best_err = 1e300;
  RealMatrix best_s = s_loc;
  RealMatrix best_sf = sig1;
  for (double qa : quarter)
    for (double qb : quarter) {
      const RealMatrix rot =
          block_diag2(rotation2(theta1 + qa), rotation2(theta2 + qb));
      const RealMatrix cand_s = s_loc * rot;
      const RealMatrix sf = congruence(cand_s, sigma.m());
      double err = std::abs(sf(0, 0) - target.a) +
                   std::abs(sf(2, 2) - target.b) +
                   std::abs(sf(0, 2) - target.c1) +
                   std::abs(sf(1, 3) - target.c2) + std::abs(sf(0, 1)) +
                   std::abs(sf(0, 3)) + std::abs(sf(1, 2));
      if (err < best_err) {
        best_err = err;
        best_s = cand_s;
        best_sf = sf;
      }
    }
  if (best_err > 100 * tol::standard_form_entry)
    throw NumericError("standard form reduction failed, residual = " +
                       std::to_string(best_err));

  // Symmetrize round-off before revalidation.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double v = 0.5 * (best_sf(i, j) + best_sf(j, i));
      best_sf(i, j) = v;
      best_sf(j, i) = v;
    }
  return {{best_s}, validate(best_sf)};
}

namespace {

// sigma2(eta, r) = S_tm(-r) R(eta) sigma_sf R(eta)^T S_tm(-r): the state
// after undoing the rotated two-mode squeezing.
RealMatrix stage2(const RealMatrix& sigma_sf, double eta, double r) {
  const RealMatrix rot = rotation(eta).s;
  const RealMatrix sq = two_mode_squeeze(-r).s;
  return sq * (rot * sigma_sf * rot.transpose()) * sq;
}

void stage2_residual(const RealMatrix& sigma_sf, double eta, double r,
                     double* f1, double* f2) {
  const RealMatrix m = stage2(sigma_sf, eta, r);
  *f1 = m(0, 2);
  *f2 = m(0, 0) - m(2, 2);
}

}  // namespace

Lemma1Factors lemma1_factor(const TwoModeCov& sigma) {
  const StandardFormReduction red = standard_form_transform(sigma);
  const RealMatrix& sf = red.sigma_sf.m();
  Lemma1Factors f{{inverse(red.s_l.s)}, 0, 0, 0, 0, 0, 0, 0};

  if (std::abs(sf(0, 2)) < 1e-12 && std::abs(sf(1, 3)) < 1e-12) {
    // thermal product: nothing to disentangle
    f.nu1 = sf(0, 0);
    f.nu2 = sf(2, 2);
    return f;
  }

  // Solve for (eta, r) zeroing the x-x coupling and equalizing the x
  // variances (2-d Newton with finite-difference Jacobian).
  const double h = 1e-7;
  bool converged = false;
  double eta = 0, r = 0;
  int iters_left = tol::lemma1_max_iter;
  double res = 1e300;
  const double starts[][2] = {{0.0, 0.0},   {0.6, 0.0},  {1.2, 0.0},
                              {-0.6, 0.0},  {0.3, 0.3},  {0.9, -0.3},
                              {1.5, 0.2},   {-1.2, -0.2}};
  for (const auto& st : starts) {
    eta = st[0];
    r = st[1];
    for (; iters_left > 0; --iters_left) {
      double f1, f2;
      stage2_residual(sf, eta, r, &f1, &f2);
      res = std::max(std::abs(f1), std::abs(f2));
      if (res < tol::lemma1_solver) {
        converged = true;
        break;
      }
      double f1e, f2e, f1r, f2r;
      stage2_residual(sf, eta + h, r, &f1e, &f2e);
      stage2_residual(sf, eta, r + h, &f1r, &f2r);
      const double j11 = (f1e - f1) / h, j12 = (f1r - f1) / h;
      const double j21 = (f2e - f2) / h, j22 = (f2r - f2) / h;
      const double dj = j11 * j22 - j12 * j21;
      if (std::abs(dj) < 1e-14) break;  // singular Jacobian, restart
      double de = (-f1 * j22 + f2 * j12) / dj;
      double dr = (-f2 * j11 + f1 * j21) / dj;
      const double step = std::max(std::abs(de), std::abs(dr));
      if (step > 0.7) {  // damp long steps
        de *= 0.7 / step;
        dr *= 0.7 / step;
      }
      eta += de;
      r += dr;
    }
    if (converged || iters_left <= 0) break;
  }
  if (!converged)
    throw NumericError(
        "lemma1_factor: root finder did not converge, residual = " +
        std::to_string(res));

  const RealMatrix sig2 = stage2(sf, eta, r);
  const double s = sig2(0, 0);

  // Jacobi angle on the p-p submatrix: zero the remaining coupling.
  const double a0 = sig2(1, 3);
  const double b0 =
      (rotation(kPi / 4).s * sig2 * rotation(kPi / 4).s.transpose())(1, 3);
  const double xi = (std::abs(a0) < 1e-15 && std::abs(b0) < 1e-15)
                        ? 0.0
                        : 0.5 * std::atan2(-a0, b0);
  const RealMatrix rxi = rotation(xi).s;
  const RealMatrix sig3 = rxi * sig2 * rxi.transpose();
  if (std::abs(sig3(1, 3)) > 1e-8)
    throw NumericError("lemma1_factor: residual x-p coupling after rotation");

  const double m1 = sig3(1, 1), m2 = sig3(3, 3);
  f.eta = eta;
  f.xi = xi;
  f.r = r;
  f.r1 = 0.25 * std::log(s / m1);
  f.r2 = 0.25 * std::log(s / m2);
  f.nu1 = std::sqrt(s * m1);
  f.nu2 = std::sqrt(s * m2);
  return f;
}

RealMatrix lemma1_compose(const Lemma1Factors& f) {
  return local_squeeze(f.r1, f.r2).s * rotation(f.xi).s *
         two_mode_squeeze(f.r).s * rotation(f.eta).s * f.s_l.s;
}

Williamson williamson(const TwoModeCov& sigma) {
  const Lemma1Factors f = lemma1_factor(sigma);
  RealMatrix a = lemma1_compose(f);
  double lo = f.nu1, hi = f.nu2;
  if (lo > hi) {
    std::swap(lo, hi);
    // symplectic mode swap reorders the thermal diagonal
    const RealMatrix p(4, 4,
                       {0, 0, 1, 0,  //
                        0, 0, 0, 1,  //
                        1, 0, 0, 0,  //
                        0, 1, 0, 0});
    a = p * a;
  }
  RealMatrix nu(4, 4);
  nu(0, 0) = nu(1, 1) = lo;
  nu(2, 2) = nu(3, 3) = hi;
  return {{a}, nu};
}

RealMatrix partial_transpose(const TwoModeCov& sigma) {
  RealMatrix m = sigma.m();
  for (int i = 0; i < 4; ++i) {
    m(i, 3) = -m(i, 3);
    m(3, i) = -m(3, i);
  }
  return m;
}

SymplecticSpectrum pt_spectrum(const TwoModeCov& sigma) {
  return spectrum_of_matrix(partial_transpose(sigma));
}

double wigner_at(const TwoModeCov& sigma, const std::array<double, 4>& x) {
  const RealMatrix inv = inverse(sigma.m());
  double q = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q += x[i] * inv(i, j) * x[j];
  const double d = det(sigma.m());
  return std::exp(-0.5 * q) / (kPi * kPi * std::sqrt(d));
}

}  // namespace gskit
