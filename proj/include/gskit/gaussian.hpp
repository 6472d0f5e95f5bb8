#pragma once

#include <array>

#include "gskit/matrix.hpp"

// Covariance-matrix algebra for two-mode Gaussian states.
//
// Conventions, fixed once for the whole toolkit: hbar = 1, [x,p] = i,
// quadrature ordering (x1, p1, x2, p2), vacuum covariance I/2. A matrix is
// a physical state iff sigma + (i/2) Omega >= 0, equivalently iff its
// smallest symplectic eigenvalue is >= 1/2.

namespace gskit {

// The symplectic form Omega = diag(omega, omega), omega = [[0,1],[-1,0]].
RealMatrix symplectic_form();

// Validated 4x4 covariance matrix. Construct through validate().
class TwoModeCov {
 public:
  const RealMatrix& m() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  friend TwoModeCov validate(const RealMatrix& m);
  explicit TwoModeCov(RealMatrix m) : m_(std::move(m)) {}
  RealMatrix m_;
};

// Accepts iff symmetric, positive definite and min eig(sigma + i/2 Omega)
// >= -tol::heisenberg. Throws ShapeError / UnphysicalError otherwise.
TwoModeCov validate(const RealMatrix& m);

// Minimum eigenvalue of the Hermitian matrix sigma + (i/2) Omega; the
// quantity reported when validation rejects a matrix.
double heisenberg_min_eig(const RealMatrix& m);

struct Blocks {
  RealMatrix alpha, beta, gamma;  // sigma = [[alpha, gamma], [gamma^T, beta]]
  RealMatrix delta, epsilon;      // x-x and p-p submatrices across the modes
};
Blocks blocks(const TwoModeCov& sigma);

// Delta(sigma) = Det alpha + Det beta + 2 Det gamma.
double delta_invariant(const TwoModeCov& sigma);

struct SymplecticSpectrum {
  double n_minus, n_plus;  // n_minus <= n_plus
};

// Closed form n_mp = sqrt((Delta -/+ sqrt(Delta^2 - 4 Det sigma)) / 2).
SymplecticSpectrum symplectic_eigenvalues(const TwoModeCov& sigma);

// Independent route: magnitudes of the eigenvalues of i Omega sigma, which
// come in -/+ pairs. Cross-checks the closed form.
SymplecticSpectrum spectrum_oracle(const TwoModeCov& sigma);

struct StandardFormParams {
  double a, b, c1, c2;  // normalization: c1 >= |c2|, c1 >= 0
};

// Standard-form parameters from the four local symplectic invariants.
StandardFormParams standard_form(const TwoModeCov& sigma);

struct SymplecticTransform {
  RealMatrix s;  // satisfies S^T Omega S = Omega
};

bool is_symplectic(const RealMatrix& s, double tolerance);

// Elementary symplectic factors.
SymplecticTransform rotation(double phi);                    // nonlocal two-mode rotation
SymplecticTransform two_mode_squeeze(double r);              // diag(e^r, e^-r, e^-r, e^r)
SymplecticTransform local_squeeze(double r1, double r2);     // diag(e^r1, e^-r1, e^r2, e^-r2)
RealMatrix rotation2(double theta);                          // 2x2 single-mode rotation
RealMatrix squeeze2(double r);                               // 2x2 diag(e^r, e^-r)

// sigma -> S^T sigma S, revalidated. Throws if S is not symplectic.
TwoModeCov apply(const SymplecticTransform& s, const TwoModeCov& sigma);

// Local operation bringing sigma to standard form: S_l^T sigma S_l = sigma_sf.
struct StandardFormReduction {
  SymplecticTransform s_l;
  TwoModeCov sigma_sf;
};
StandardFormReduction standard_form_transform(const TwoModeCov& sigma);

// Factorization sigma = A^T nu A with A = S_loc(r1,r2) R(xi) S_tm(r) R(eta) S_l
// and nu = diag(nu1, nu1, nu2, nu2) thermal. nu1/nu2 follow the mode order
// produced by the construction and are not sorted.
struct Lemma1Factors {
  SymplecticTransform s_l;
  double eta, xi;    // two-mode rotation angles
  double r;          // two-mode squeezing
  double r1, r2;     // local squeezings
  double nu1, nu2;   // thermal diagonal per mode
};
Lemma1Factors lemma1_factor(const TwoModeCov& sigma);

// Recompose A from the factors.
RealMatrix lemma1_compose(const Lemma1Factors& f);

// Williamson normal form: S^T nu S = sigma, nu = diag(n-, n-, n+, n+).
struct Williamson {
  SymplecticTransform s;
  RealMatrix nu;
};
Williamson williamson(const TwoModeCov& sigma);

// Momentum sign flip on mode 2 (Lambda sigma Lambda, Lambda = diag(1,1,1,-1)).
// The result need not be a physical state.
RealMatrix partial_transpose(const TwoModeCov& sigma);

// Symplectic spectrum of the partial transpose (works on the unvalidated
// matrix; uses the same invariant formulas).
SymplecticSpectrum pt_spectrum(const TwoModeCov& sigma);

// W(X) = exp(-1/2 X sigma^-1 X^T) / (pi^2 sqrt(Det sigma)).
double wigner_at(const TwoModeCov& sigma, const std::array<double, 4>& x);

}  // namespace gskit
