#include "gskit/measures.hpp"

#include <cmath>
#include <string>

#include "gskit/errors.hpp"
#include "gskit/tolerances.hpp"

namespace gskit {

double f_entropy(double x) {
  if (x < 0.5 - tol::f_domain)
    throw Error(ErrorCode::param,
                "f_entropy: argument " + std::to_string(x) + " below 1/2");
  const double p = x + 0.5;
  const double q = x - 0.5;
  const double lead = p * std::log(p);
  if (q < tol::f_singular) return lead;  // x ln x -> 0
  return lead - q * std::log(q);
}

double g_eof(double x) {
  if (x <= 0) throw Error(ErrorCode::param, "g_eof: argument must be positive");
  if (x >= 0.5) return 0.0;
  const double u = (0.5 + x) * (0.5 + x) / (2.0 * x);
  const double v = (0.5 - x) * (0.5 - x) / (2.0 * x);
  double out = u * std::log(u);
  if (v > 0) out -= v * std::log(v);
  return out;
}

double purity(const TwoModeCov& sigma) {
  return 1.0 / (4.0 * std::sqrt(det(sigma.m())));
}

double purity_single(const RealMatrix& sigma1) {
  if (sigma1.rows() != 2 || sigma1.cols() != 2)
    throw ShapeError("single-mode covariance must be 2x2");
  return 1.0 / (2.0 * std::sqrt(det(sigma1)));
}

double von_neumann_single(const RealMatrix& sigma1) {
  if (sigma1.rows() != 2 || sigma1.cols() != 2)
    throw ShapeError("single-mode covariance must be 2x2");
  const double d = det(sigma1);
  if (d < 0.25 - 1e-10)
    throw UnphysicalError("single-mode state below vacuum noise",
                          std::sqrt(std::max(d, 0.0)) - 0.5);
  return f_entropy(std::max(0.5, std::sqrt(d)));
}

double von_neumann_two(const TwoModeCov& sigma) {
  const SymplecticSpectrum sp = symplectic_eigenvalues(sigma);
  return f_entropy(std::max(0.5, sp.n_minus)) + f_entropy(sp.n_plus);
}

double mutual_information(const TwoModeCov& sigma) {
  const Blocks b = blocks(sigma);
  const double a = std::sqrt(det(b.alpha));
  const double bb = std::sqrt(det(b.beta));
  return f_entropy(a) + f_entropy(bb) - von_neumann_two(sigma);
}

bool ppt_separable(const TwoModeCov& sigma) {
  return pt_spectrum(sigma).n_minus >= 0.5 - tol::separability;
}

double eof_symmetric(const TwoModeCov& sigma) {
  const StandardFormParams p = standard_form(sigma);
  if (std::abs(p.a - p.b) > tol::eof_symmetry)
    throw UnsupportedError(
        "entanglement of formation: closed form requires a symmetric state "
        "(|a-b| = " +
        std::to_string(std::abs(p.a - p.b)) + ")");
  const double nt = pt_spectrum(sigma).n_minus;
  return std::max(0.0, g_eof(nt));
}

double log_negativity(const TwoModeCov& sigma) {
  const double nt = pt_spectrum(sigma).n_minus;
  return std::max(0.0, -std::log(2.0 * nt));
}

MeasureReport measure_report(const TwoModeCov& sigma) {
  MeasureReport r{};
  r.purity = purity(sigma);
  r.linear_entropy = 1.0 - r.purity;
  r.von_neumann = von_neumann_two(sigma);
  r.mutual_information = mutual_information(sigma);
  const SymplecticSpectrum sp = symplectic_eigenvalues(sigma);
  r.n_minus = sp.n_minus;
  r.n_plus = sp.n_plus;
  const SymplecticSpectrum pt = pt_spectrum(sigma);
  r.nt_minus = pt.n_minus;
  r.nt_plus = pt.n_plus;
  r.separable = pt.n_minus >= 0.5 - tol::separability;
  const StandardFormParams p = standard_form(sigma);
  if (std::abs(p.a - p.b) <= tol::eof_symmetry)
    r.eof = std::max(0.0, g_eof(pt.n_minus));
  r.log_negativity = std::max(0.0, -std::log(2.0 * pt.n_minus));
  return r;
}

}  // namespace gskit
