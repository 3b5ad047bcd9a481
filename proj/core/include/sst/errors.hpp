#pragma once

#include <stdexcept>
#include <string>

namespace sst {

// Bad input: malformed data or arguments outside the documented range.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is well formed but the mathematical precondition fails.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inexact division or similar failure inside exact arithmetic.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace sst
