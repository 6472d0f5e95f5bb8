#pragma once

#include <optional>
#include <string>

#include "gskit/measures.hpp"

// Text interchange formats: the covariance-matrix file (key/value header +
// matrix rows) and the flat key/value analysis report. The convention
// field is mandatory and only "vacuum=1/2" is accepted; other conventions
// are rejected, never rescaled.

namespace gskit {

struct CovFile {
  RealMatrix matrix;  // 4x4 (ordering x1,p1,x2,p2) or 2x2 (x1,p1)
  std::string label;
};

// Throws ParseError on any schema violation.
CovFile parse_covfile(const std::string& text);

// Serializes at 17 significant digits (lossless double round trip).
std::string serialize_covfile(const RealMatrix& m, const std::string& label);

struct Report {
  std::string label;
  StandardFormParams sf;
  double det_sigma, delta, det_alpha, det_beta, det_gamma;
  MeasureReport measures;
};

Report build_report(const TwoModeCov& sigma, const std::string& label = "");

// Flat key/value document, 17 significant digits; parse_report inverts it
// losslessly.
std::string serialize_report(const Report& r);
Report parse_report(const std::string& text);

}  // namespace gskit
