#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVectorError : Error {
  explicit ZeroVectorError(const std::string& w = "zero tangent vector") : Error(w) {}
};

struct EvaluationOutsideDomain : Error {
  explicit EvaluationOutsideDomain(const std::string& w = "point outside chart domain")
      : Error(w) {}
};

struct UnsupportedOrder : Error {
  explicit UnsupportedOrder(const std::string& w = "jet order must be in 1..4") : Error(w) {}
};

struct InvalidRanders : Error {
  explicit InvalidRanders(const std::string& w) : Error(w) {}
};

struct SingularTensor : Error {
  explicit SingularTensor(const std::string& w = "fundamental tensor numerically singular")
      : Error(w) {}
};

struct DegenerateFlag : Error {
  explicit DegenerateFlag(const std::string& w = "flag pole and transverse are dependent")
      : Error(w) {}
};

struct IntegrationFailure : Error {
  explicit IntegrationFailure(const std::string& w) : Error(w) {}
};

/// Thrown when an operation requires a geodesic to reach a point beyond the
/// chart margin.  Plain truncated integrations report the exit through the
/// path status instead.
struct DomainExitError : Error {
  double exit_time;
  explicit DomainExitError(double t, const std::string& w = "geodesic left the chart domain")
      : Error(w), exit_time(t) {}
};

struct NewtonDivergence : Error {
  explicit NewtonDivergence(const std::string& w) : Error(w) {}
};

struct GeodesicExtensionFailed : Error {
  explicit GeodesicExtensionFailed(const std::string& w) : Error(w) {}
};

struct StencilOutsideDomain : Error {
  explicit StencilOutsideDomain(const std::string& w) : Error(w) {}
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& w) : Error(w) {}
};

struct SpanMismatch : Error {
  explicit SpanMismatch(const std::string& w) : Error(w) {}
};

}  // namespace finsler
