#pragma once

#include "gskit/gaussian.hpp"
#include "gskit/matrix.hpp"

// Brute-force verification in a truncated Fock basis: build the exact
// (truncated) density matrix of a Gaussian state from its Lemma-1
// decomposition and evaluate entropy, purity, covariance, reduced states
// and negativity directly.
//
// Index layout for two modes: |k1 k2> <-> k1 * (N+1) + k2 (mode-1 major).
// Truncated thermal tails are NOT renormalized; the trace deficit is the
// truncation-quality signal.

namespace gskit {

struct FockDM {
  int cutoff = 0;       // number states 0..N per mode
  int mode_count = 1;
  ComplexMatrix rho;    // Hermitian, trace 1 up to trace_deficit
  double trace_deficit = 0;
};

struct LadderOps {
  ComplexMatrix a, adag, number;
};
LadderOps ladder_ops(int cutoff);

// Diagonal thermal state, p_k = nbar^k / (1+nbar)^(k+1). Throws when the
// truncated tail exceeds tol::trace_deficit.
FockDM thermal_dm(double nbar, int cutoff);

enum class UnitaryKind {
  phase,             // matches rotation2(theta) on one mode
  single_squeeze,    // matches squeeze2(r)
  two_mode_squeeze,  // matches two_mode_squeeze(r) = S_loc(r, -r)
  beamsplitter,      // matches the nonlocal two-mode rotation R(phi)
};

// Fock-space unitary for the elementary symplectic factors. Single-mode
// kinds return (N+1)-dim matrices, two-mode kinds (N+1)^2. Generator sign
// conventions are pinned by convention_selftest(), not hand-derived.
ComplexMatrix gaussian_unitary(UnitaryKind kind, double param, int cutoff);

// Unitary implementing an arbitrary single-mode symplectic (2x2, det 1)
// via its rotation-squeeze-rotation decomposition.
ComplexMatrix single_mode_unitary(const RealMatrix& s2, int cutoff);

// rho = U_A (nu1 thermal x nu2 thermal) U_A^dag with U_A composed to match
// the Lemma-1 factor order.
FockDM build_state(const Lemma1Factors& factors, int cutoff);

double entropy_fock(const FockDM& dm);   // -sum lambda ln lambda
double purity_fock(const FockDM& dm);    // Tr rho^2

FockDM partial_trace(const FockDM& dm, int keep_mode);  // 1 or 2

// Transpose on mode 2 (element reshuffle); Hermitian but possibly indefinite.
ComplexMatrix partial_transpose_fock(const FockDM& dm);

// (||rho^T2||_1 - 1) / 2.
double negativity_fock(const FockDM& dm);

// Covariance matrix of the truncated state from quadrature second moments.
RealMatrix cov_from_fock(const FockDM& dm);

// Verifies the generator sign conventions against the gaussian-core
// symplectic matrices; throws NumericError on mismatch. Cheap; run before
// any verification batch.
void convention_selftest(int cutoff);

}  // namespace gskit
