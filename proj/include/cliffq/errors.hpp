#pragma once

#include <stdexcept>
#include <string>

namespace cliffq {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal construction fails its own postcondition.
class ConstructionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cliffq
