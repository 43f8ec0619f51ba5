#pragma once

#include <stdexcept>
#include <string>

namespace oddzeta {

// Raised when a value is not known tightly enough to decide the requested
// result. Callers are expected to recompute at a higher working precision.
class InsufficientPrecision : public std::runtime_error {
 public:
  explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// An odd-zeta formula was asked for an argument outside its residue class.
class WrongResidueClass : public std::domain_error {
 public:
  explicit WrongResidueClass(const std::string& what) : std::domain_error(what) {}
};

// sin(t) could not be shown to be nonzero at the working precision.
class NearSingularity : public std::runtime_error {
 public:
  explicit NearSingularity(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oddzeta
