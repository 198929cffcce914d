#pragma once

#include <stdexcept>
#include <string>

namespace nephroid {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Class parameters violate the catalogue constraints.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Winding-number accumulation did not settle near a multiple of 2*pi
/// for a point within tolerance of the boundary.
struct AmbiguousMembership : std::runtime_error {
  explicit AmbiguousMembership(const std::string& what) : std::runtime_error(what) {}
};

/// The containment margin is already negative at the smallest scanned radius.
struct NoRootBracket : std::runtime_error {
  explicit NoRootBracket(const std::string& what) : std::runtime_error(what) {}
};

/// An evaluation hit a denominator below the safety threshold (1e-12).
struct PoleProximity : std::runtime_error {
  explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

/// File output failed.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nephroid
