#pragma once

#include <stdexcept>
#include <string>

namespace simpcx {

// Raised when an operation's precondition fails (missing face, invalid move,
// impure action, malformed input). The message names the failed clause.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simpcx
