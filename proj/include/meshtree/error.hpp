#pragma once

#include <stdexcept>
#include <string>

namespace meshtree {

// All recoverable failures (bad input, violated preconditions) surface as
// this type. The message is a single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meshtree
