#pragma once

#include <stdexcept>
#include <string>

namespace germforge {

// A truncation degree could not be certified within the configured cap.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite codimension was required but the ideal has none (with evidence).
class InfiniteCodimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric sampling or root-finding budget exhausted.
class NumericBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace germforge
