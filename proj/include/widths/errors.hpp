#ifndef WIDTHS_ERRORS_HPP
#define WIDTHS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace widths {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : Error {
  using Error::Error;
};

// geometry
struct TangentialDirection : Error {
  using Error::Error;
};

// networks
struct JunctionOffBoundary : Error {
  using Error::Error;
};
struct PointNotOnSupport : Error {
  using Error::Error;
};
struct RadialConditionViolated : Error {
  using Error::Error;
};

// billiards
struct NoConvergence : Error {
  using Error::Error;
};

// conics / quadrature
struct QuadratureFailure : Error {
  using Error::Error;
};
struct BracketInvalid : Error {
  using Error::Error;
};

// crofton
struct OracleDegenerate : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};

// certify
struct NotExcludable : Error {
  using Error::Error;
};
struct DisjointnessViolated : Error {
  using Error::Error;
};
struct ContainmentViolated : Error {
  using Error::Error;
};
struct InconclusiveCertificate : Error {
  using Error::Error;
};

// io
struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace widths

#endif
