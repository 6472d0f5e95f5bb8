#include "gskit/fock.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gskit/errors.hpp"
#include "gskit/tolerances.hpp"

namespace gskit {

namespace {

int dim1(int cutoff) { return cutoff + 1; }

void check_cutoff(int cutoff) {
  if (cutoff < 1) throw ParamError("Fock cutoff must be >= 1");
}

// exp(i phase_sign * theta * n) is diagonal; phase_sign pinned below.
ComplexMatrix phase_unitary(double theta, int cutoff) {
  const int d = dim1(cutoff);
  ComplexMatrix u(d, d);
  for (int k = 0; k < d; ++k)
    u(k, k) = std::exp(cplx(0, -theta * k));  // exp(-i theta a^dag a)
  return u;
}

ComplexMatrix squeeze_unitary(double r, int cutoff) {
  // exp(r/2 (adag^2 - a^2)); the sign makes the covariance pushforward
  // match squeeze2(r) = diag(e^r, e^-r). The opposite generator sign
  // corresponds to squeeze2(-r) in our matrix convention; the self-test
  // pins this choice.
  const LadderOps ops = ladder_ops(cutoff);
  const ComplexMatrix gen =
      (ops.adag * ops.adag - ops.a * ops.a) * cplx(0.5 * r, 0);
  return expm(gen);
}

}  // namespace

LadderOps ladder_ops(int cutoff) {
  check_cutoff(cutoff);
  const int d = dim1(cutoff);
  LadderOps ops{ComplexMatrix(d, d), ComplexMatrix(d, d), ComplexMatrix(d, d)};
  for (int k = 1; k < d; ++k) {
    ops.a(k - 1, k) = std::sqrt(double(k));
    ops.adag(k, k - 1) = std::sqrt(double(k));
  }
  for (int k = 0; k < d; ++k) ops.number(k, k) = double(k);
  return ops;
}

FockDM thermal_dm(double nbar, int cutoff) {
  check_cutoff(cutoff);
  if (nbar < 0) throw ParamError("thermal_dm: nbar must be >= 0");
  const int d = dim1(cutoff);
  FockDM dm{cutoff, 1, ComplexMatrix(d, d), 0};
  double trace = 0;
  for (int k = 0; k < d; ++k) {
    const double p = std::pow(nbar / (1 + nbar), k) / (1 + nbar);
    dm.rho(k, k) = p;
    trace += p;
  }
  dm.trace_deficit = 1.0 - trace;
  if (dm.trace_deficit > tol::trace_deficit)
    throw Error(ErrorCode::param,
                "thermal_dm: cutoff " + std::to_string(cutoff) +
                    " too small for nbar " + std::to_string(nbar) +
                    " (trace deficit " + std::to_string(dm.trace_deficit) +
                    ")");
  return dm;
}

ComplexMatrix gaussian_unitary(UnitaryKind kind, double param, int cutoff) {
  check_cutoff(cutoff);
  switch (kind) {
    case UnitaryKind::phase:
      return phase_unitary(param, cutoff);
    case UnitaryKind::single_squeeze:
      return squeeze_unitary(param, cutoff);
    case UnitaryKind::two_mode_squeeze:
      // S_tm(r) = S_loc(r, -r): local squeezers on each mode; the
      // generators commute so the kron product is the exact exponential.
      return kron(squeeze_unitary(param, cutoff),
                  squeeze_unitary(-param, cutoff));
    case UnitaryKind::beamsplitter: {
      // exp(phi (a1^dag a2 - a1 a2^dag)). The generator conserves total
      // photon number, so the exponential is assembled sector by sector;
      // identical to the dense expm of the truncated generator.
      const int d = dim1(cutoff);
      ComplexMatrix u(d * d, d * d);
      for (int total = 0; total <= 2 * cutoff; ++total) {
        const int k1_lo = std::max(0, total - cutoff);
        const int k1_hi = std::min(total, cutoff);
        const int bs = k1_hi - k1_lo + 1;
        ComplexMatrix gen(bs, bs);
        for (int i = 0; i + 1 < bs; ++i) {
          const int k1 = k1_lo + i;  // raising k1 by one within the sector
          const double amp =
              param * std::sqrt(double(k1 + 1) * double(total - k1));
          gen(i + 1, i) = amp;
          gen(i, i + 1) = -amp;
        }
        const ComplexMatrix ub = (bs == 1) ? ComplexMatrix::identity(1)
                                           : expm(gen);
        for (int i = 0; i < bs; ++i)
          for (int j = 0; j < bs; ++j) {
            const int k1i = k1_lo + i, k1j = k1_lo + j;
            u(k1i * d + (total - k1i), k1j * d + (total - k1j)) = ub(i, j);
          }
      }
      return u;
    }
  }
  throw ParamError("unknown unitary kind");
}

ComplexMatrix single_mode_unitary(const RealMatrix& s2, int cutoff) {
  if (s2.rows() != 2 || s2.cols() != 2)
    throw ShapeError("single-mode symplectic must be 2x2");
  if (std::abs(det(s2) - 1.0) > 1e-9)
    throw Error(ErrorCode::numeric, "single-mode symplectic must have det 1");

  // S = G1 * diag(e^r, e^-r) * G2 with G1, G2 rotations, via the
  // eigendecomposition of S^T S.
  const RealMatrix sts = s2.transpose() * s2;
  const double psi =
      0.5 * std::atan2(2.0 * sts(0, 1), sts(0, 0) - sts(1, 1));
  RealMatrix v = rotation2(psi);
  RealMatrix diag = v.transpose() * sts * v;
  double sig1 = std::sqrt(std::max(diag(0, 0), 1e-300));
  double sig2 = std::sqrt(std::max(diag(1, 1), 1e-300));
  if (sig1 < sig2) {  // order sigma1 >= sigma2 by a quarter turn
    v = v * rotation2(1.5707963267948966);
    std::swap(sig1, sig2);
  }
  RealMatrix u = s2 * v;
  u(0, 0) /= sig1;
  u(1, 0) /= sig1;
  u(0, 1) /= sig2;
  u(1, 1) /= sig2;
  const double theta_u = std::atan2(u(1, 0), u(0, 0));
  const double theta_v = std::atan2(v(1, 0), v(0, 0));
  const double r = std::log(sig1);
  // S = rot2(theta_u) squeeze2(r) rot2(-theta_v); first-applied factor is
  // the leftmost, so the operator product runs right-to-left.
  return phase_unitary(-theta_v, cutoff) *
         squeeze_unitary(r, cutoff) * phase_unitary(theta_u, cutoff);
}

FockDM build_state(const Lemma1Factors& f, int cutoff) {
  check_cutoff(cutoff);
  // round-off in the factorization can leave nu a hair below 1/2
  const FockDM t1 = thermal_dm(std::max(f.nu1 - 0.5, 0.0), cutoff);
  const FockDM t2 = thermal_dm(std::max(f.nu2 - 0.5, 0.0), cutoff);
  FockDM dm{cutoff, 2, kron(t1.rho, t2.rho),
            1.0 - (1.0 - t1.trace_deficit) * (1.0 - t2.trace_deficit)};
  if (dm.trace_deficit > tol::trace_deficit)
    throw Error(ErrorCode::param, "build_state: cutoff too small");

  // A = S_loc R(xi) S_tm(r) R(eta) S_l reads left to right in order of
  // application, so the Hilbert-space operator is composed in reverse.
  RealMatrix b1(2, 2), b2(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      b1(i, j) = f.s_l.s(i, j);
      b2(i, j) = f.s_l.s(i + 2, j + 2);
    }
  const ComplexMatrix u_sl = kron(single_mode_unitary(b1, cutoff),
                                  single_mode_unitary(b2, cutoff));
  const ComplexMatrix u_eta =
      gaussian_unitary(UnitaryKind::beamsplitter, f.eta, cutoff);
  const ComplexMatrix u_tm =
      gaussian_unitary(UnitaryKind::two_mode_squeeze, f.r, cutoff);
  const ComplexMatrix u_xi =
      gaussian_unitary(UnitaryKind::beamsplitter, f.xi, cutoff);
  const ComplexMatrix u_loc = kron(squeeze_unitary(f.r1, cutoff),
                                   squeeze_unitary(f.r2, cutoff));

  const ComplexMatrix u = ((u_sl * u_eta) * (u_tm * u_xi)) * u_loc;
  dm.rho = u * dm.rho * u.adjoint();
  return dm;
}

double entropy_fock(const FockDM& dm) {
  const auto eig = hermitian_eig(dm.rho, false);
  if (eig.values.front() < -tol::dm_negative_eig)
    throw NumericError("entropy_fock: density matrix has negative eigenvalue " +
                       std::to_string(eig.values.front()));
  double s = 0;
  for (double lam : eig.values)
    if (lam > tol::entropy_eig_floor) s -= lam * std::log(lam);
  return s;
}

double purity_fock(const FockDM& dm) {
  const double fr = dm.rho.frobenius();
  return fr * fr;
}

FockDM partial_trace(const FockDM& dm, int keep_mode) {
  if (dm.mode_count != 2)
    throw ShapeError("partial_trace needs a two-mode state");
  if (keep_mode != 1 && keep_mode != 2)
    throw ParamError("keep_mode must be 1 or 2");
  const int d = dim1(dm.cutoff);
  FockDM out{dm.cutoff, 1, ComplexMatrix(d, d), dm.trace_deficit};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cplx s = 0;
      for (int k = 0; k < d; ++k)
        s += (keep_mode == 1) ? dm.rho(i * d + k, j * d + k)
                              : dm.rho(k * d + i, k * d + j);
      out.rho(i, j) = s;
    }
  return out;
}

ComplexMatrix partial_transpose_fock(const FockDM& dm) {
  if (dm.mode_count != 2)
    throw ShapeError("partial_transpose_fock needs a two-mode state");
  const int d = dim1(dm.cutoff);
  ComplexMatrix out(d * d, d * d);
  for (int k1 = 0; k1 < d; ++k1)
    for (int k2 = 0; k2 < d; ++k2)
      for (int l1 = 0; l1 < d; ++l1)
        for (int l2 = 0; l2 < d; ++l2)
          out(k1 * d + k2, l1 * d + l2) = dm.rho(k1 * d + l2, l1 * d + k2);
  return out;
}

double negativity_fock(const FockDM& dm) {
  const auto eig = hermitian_eig(partial_transpose_fock(dm), false);
  double abs_sum = 0, sum = 0;
  for (double lam : eig.values) {
    abs_sum += std::abs(lam);
    sum += lam;
  }
  // normalize out the truncation deficit so a separable state reads ~0
  return 0.5 * (abs_sum - sum);
}

RealMatrix cov_from_fock(const FockDM& dm) {
  const int d = dim1(dm.cutoff);
  const LadderOps ops = ladder_ops(dm.cutoff);
  ComplexMatrix x1(d, d), p1(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      x1(i, j) = (ops.a(i, j) + ops.adag(i, j)) * inv_sqrt2;
      p1(i, j) = cplx(0, -1) * (ops.a(i, j) - ops.adag(i, j)) * inv_sqrt2;
    }

  std::vector<ComplexMatrix> quads;
  if (dm.mode_count == 1) {
    quads = {x1, p1};
  } else {
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    quads = {kron(x1, eye), kron(p1, eye), kron(eye, x1), kron(eye, p1)};
  }

  const int nq = int(quads.size());
  std::vector<ComplexMatrix> rho_x;
  rho_x.reserve(nq);
  for (const auto& q : quads) rho_x.push_back(dm.rho * q);

  std::vector<double> first(nq, 0.0);
  for (int i = 0; i < nq; ++i) {
    cplx tr = 0;
    for (int k = 0; k < rho_x[i].rows(); ++k) tr += rho_x[i](k, k);
    first[i] = tr.real();
  }

  RealMatrix cov(nq, nq);
  for (int i = 0; i < nq; ++i)
    for (int j = i; j < nq; ++j) {
      // Tr(rho Xi Xj) = sum_mn (rho Xi)_mn (Xj)_nm
      cplx tij = 0, tji = 0;
      const int n = rho_x[i].rows();
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
          tij += rho_x[i](m, k) * quads[j](k, m);
          tji += rho_x[j](m, k) * quads[i](k, m);
        }
      const double sym = 0.5 * (tij + tji).real() - first[i] * first[j];
      cov(i, j) = sym;
      cov(j, i) = sym;
    }
  return cov;
}

void convention_selftest(int cutoff) {
  const auto check = [](const RealMatrix& got, const RealMatrix& want,
                        const char* what) {
    if ((got - want).max_abs() > tol::convention_pin)
      throw NumericError(std::string("Fock convention self-test failed: ") +
                         what);
  };

  // single-mode squeeze on vacuum
  {
    const int d = dim1(cutoff);
    ComplexMatrix vac(d, d);
    vac(0, 0) = 1;
    const ComplexMatrix u = squeeze_unitary(0.3, cutoff);
    FockDM dm{cutoff, 1, u * vac * u.adjoint(), 0};
    const RealMatrix s = squeeze2(0.3);
    check(cov_from_fock(dm),
          s.transpose() * (RealMatrix::identity(2) * 0.5) * s, "squeeze");

    // phase rotation on the squeezed state
    const ComplexMatrix up = phase_unitary(0.7, cutoff);
    FockDM dm2{cutoff, 1, up * dm.rho * up.adjoint(), 0};
    const RealMatrix rot = rotation2(0.7);
    check(cov_from_fock(dm2),
          rot.transpose() * cov_from_fock(dm) * rot, "phase");
  }

  // two-mode factors on (squeezed vacuum x vacuum)
  {
    const int d = dim1(cutoff);
    ComplexMatrix vac2(d * d, d * d);
    vac2(0, 0) = 1;
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    const ComplexMatrix usq = kron(squeeze_unitary(0.2, cutoff), eye);
    const ComplexMatrix rho1 = usq * vac2 * usq.adjoint();
    FockDM base{cutoff, 2, rho1, 0};
    const RealMatrix sigma0 = cov_from_fock(base);

    const ComplexMatrix ubs =
        gaussian_unitary(UnitaryKind::beamsplitter, 0.6, cutoff);
    FockDM bs{cutoff, 2, ubs * rho1 * ubs.adjoint(), 0};
    const RealMatrix r = rotation(0.6).s;
    check(cov_from_fock(bs), r.transpose() * sigma0 * r, "beamsplitter");

    const ComplexMatrix utm =
        gaussian_unitary(UnitaryKind::two_mode_squeeze, 0.15, cutoff);
    FockDM tm{cutoff, 2, utm * rho1 * utm.adjoint(), 0};
    const RealMatrix s = two_mode_squeeze(0.15).s;
    check(cov_from_fock(tm), s.transpose() * sigma0 * s, "two-mode squeeze");
  }
}

}  // namespace gskit
