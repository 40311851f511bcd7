#pragma once

#include <stdexcept>
#include <string>

namespace hyperpf {

// Bad parameters: odd L, N != L*M, non-square beta, malformed input files.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact computation produced something that cannot happen for correct
// code (non-integral Vandermonde ratio, inexact division by M!).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Brute-force expansion refused because it would exceed its hard cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperpf
