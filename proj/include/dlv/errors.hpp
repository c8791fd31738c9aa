#pragma once

#include <stdexcept>
#include <string>

namespace dlv {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation could not certify any coefficient of its result at the
// requested precision.
struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

// Inversion of a series with no visible nonzero coefficient.
struct InvZero : Error {
  explicit InvZero(const std::string& msg) : Error(msg) {}
};

// An operator coefficient has a tau-free component and cannot act nuclearly.
struct NotLocallyContracting : Error {
  explicit NotLocallyContracting(const std::string& msg) : Error(msg) {}
};

// The certified valuation bound on series coefficients does not dominate the
// requested evaluation tail.
struct TailNotCertified : Error {
  explicit TailNotCertified(const std::string& msg) : Error(msg) {}
};

// The unit-lattice solver could not exhibit a full-rank generating set.
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

struct IsometryRadiusNotCertified : Error {
  explicit IsometryRadiusNotCertified(const std::string& msg) : Error(msg) {}
};

struct WindowNotStabilized : Error {
  explicit WindowNotStabilized(const std::string& msg) : Error(msg) {}
};

// A lattice basis whose determinant has no certified nonzero coefficient.
struct DegenerateBasis : Error {
  explicit DegenerateBasis(const std::string& msg) : Error(msg) {}
};

// Malformed configuration or polynomial text.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace dlv
