#pragma once

#include <stdexcept>
#include <string>

namespace lta {

/// Precondition or numeric contract broken by the caller (dimension mismatch,
/// point not dominating the reference, zero weight vector, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested size is impossible (binomial overflow, k larger than the pool).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Random sampling could not produce enough distinct points.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input file.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void contract_failure(const std::string& what) {
  throw ContractError(what);
}

inline void require(bool condition, const char* what) {
  if (!condition) contract_failure(what);
}

}  // namespace detail
}  // namespace lta
