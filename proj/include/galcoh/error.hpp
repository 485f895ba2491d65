#pragma once

#include <stdexcept>
#include <string>

namespace galcoh {

/* Malformed or inconsistent input data: bad tables, wrong dimensions,
 * violated preconditions. Maps to CLI exit code 1. */
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A verification step failed on well-formed input: a cochain is not a
 * cocycle, an associativity witness was found, a certificate does not
 * check out. Maps to CLI exit code 2. */
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Requested computation exceeds the configured table budget. */
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace galcoh
