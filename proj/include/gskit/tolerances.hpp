#pragma once

// Central tolerance table. Every numeric threshold used by the library
// lives here so conventions cannot drift between modules.

namespace gskit::tol {

// matrix kernel
inline constexpr double hermitian_check = 1e-10;   // max element deviation |A - A^H|
inline constexpr double eig_residual = 1e-9;       // ||Av - lv|| <= eig_residual * ||A||
inline constexpr double unitary_check = 1e-8;      // ||U^H U - I|| for expm of anti-Hermitian

// covariance validation
inline constexpr double symmetry = 1e-12;          // |m - m^T|_max
inline constexpr double heisenberg = 1e-10;        // min eig of sigma + (i/2) Omega >= -heisenberg
inline constexpr double physical_nmin = 1e-10;     // n_minus >= 1/2 - physical_nmin

// symplectic algebra
inline constexpr double symplectic_check = 1e-9;   // ||S^T Omega S - Omega||_F
inline constexpr double discriminant_clamp = 1e-12;// clamp Delta^2 - 4 Det sigma in [-clamp, 0) to 0
inline constexpr double standard_form = 1e-9;      // invariants of (a,b,c1,c2) vs source matrix
inline constexpr double standard_form_entry = 1e-8;// entrywise pattern of the reduced matrix
inline constexpr double williamson_residual = 1e-8;
inline constexpr double lemma1_residual = 1e-7;
inline constexpr double lemma1_solver = 1e-10;     // root-finder residual target
inline constexpr int lemma1_max_iter = 200;

// measures
inline constexpr double f_domain = 1e-12;          // x >= 1/2 - f_domain
inline constexpr double f_singular = 1e-15;        // treat (x-1/2) ln(x-1/2) as 0 below this
inline constexpr double eof_symmetry = 1e-9;       // |a - b| for the symmetric closed form
inline constexpr double separability = 1e-10;      // nt_minus >= 1/2 - separability

// fock oracle
inline constexpr double trace_deficit = 1e-6;      // truncated thermal tail budget
inline constexpr double dm_hermitian = 1e-10;
inline constexpr double dm_negative_eig = 1e-8;
inline constexpr double entropy_eig_floor = 1e-14; // eigenvalues below this contribute 0
// Covariance pushforward self-test. Loose on purpose: it pins generator
// signs (a wrong sign shows up at O(1)) while staying above the slow
// truncation tail of the squeeze factors at moderate cutoffs.
inline constexpr double convention_pin = 1e-4;

}  // namespace gskit::tol
