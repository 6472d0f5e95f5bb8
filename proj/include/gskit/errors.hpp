#pragma once

#include <stdexcept>
#include <string>

namespace gskit {

// Error taxonomy shared by the C++ core and the C API status codes.
enum class ErrorCode {
  shape = 1,        // wrong dimensions / asymmetric input
  unphysical = 2,   // Heisenberg violation
  parse = 3,        // malformed file or document
  param = 4,        // parameter out of range
  tolerance = 5,    // verification gap beyond tolerance
  numeric = 6,      // internal numerical inconsistency
  unsupported = 7,  // operation not defined for this input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& w) : Error(ErrorCode::shape, w) {}
};

// Carries the offending minimum eigenvalue of sigma + (i/2) Omega.
struct UnphysicalError : Error {
  UnphysicalError(const std::string& w, double min_eig)
      : Error(ErrorCode::unphysical, w), min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};

struct ParamError : Error {
  explicit ParamError(const std::string& w) : Error(ErrorCode::param, w) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorCode::numeric, w) {}
};

struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& w)
      : Error(ErrorCode::unsupported, w) {}
};

}  // namespace gskit
