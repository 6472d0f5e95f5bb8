#pragma once

#include <optional>

#include "gskit/gaussian.hpp"

// Scalar measures of two-mode Gaussian states: purity, entropies, mutual
// information, PPT separability, entanglement of formation (symmetric
// states) and logarithmic negativity. Entropic quantities are in nats.

namespace gskit {

// f(x) = (x+1/2) ln(x+1/2) - (x-1/2) ln(x-1/2), the thermal entropy of a
// mode with symplectic eigenvalue x. f(1/2) = 0 by the removable limit.
double f_entropy(double x);

// g(x) for the symmetric-state entanglement of formation, extended by 0
// for x >= 1/2.
double g_eof(double x);

// 1 / (2^n sqrt(Det sigma)) with n the mode count.
double purity(const TwoModeCov& sigma);
double purity_single(const RealMatrix& sigma1);  // 2x2

// Single-mode Von Neumann entropy f(sqrt(Det sigma1)).
double von_neumann_single(const RealMatrix& sigma1);

// Two-mode Von Neumann entropy f(n-) + f(n+).
double von_neumann_two(const TwoModeCov& sigma);

// I = f(a) + f(b) - f(n-) - f(n+).
double mutual_information(const TwoModeCov& sigma);

// PPT criterion: separable iff nt_minus >= 1/2.
bool ppt_separable(const TwoModeCov& sigma);

// max{0, g(nt_minus)}; defined only for symmetric states (|a-b| small).
double eof_symmetric(const TwoModeCov& sigma);

// max{0, -ln(2 nt_minus)}.
double log_negativity(const TwoModeCov& sigma);

struct MeasureReport {
  double purity;
  double linear_entropy;       // 1 - purity
  double von_neumann;          // nats
  double mutual_information;   // nats
  double n_minus, n_plus;
  double nt_minus, nt_plus;    // partial-transpose spectrum
  bool separable;
  std::optional<double> eof;   // symmetric states only
  double log_negativity;
};

MeasureReport measure_report(const TwoModeCov& sigma);

}  // namespace gskit
