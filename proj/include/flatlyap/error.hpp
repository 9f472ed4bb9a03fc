#pragma once

#include <stdexcept>
#include <string>

namespace flatlyap {

// malformed or out-of-contract input (CLI exit 2)
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// orbit cap or similar hit (CLI exit 3)
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// broken internal consistency check; a bug, not bad input
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace flatlyap
