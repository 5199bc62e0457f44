#pragma once

#include <stdexcept>
#include <string>

namespace colorlie {

/// Library-level error: bad input, shape mismatch, violated precondition.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace colorlie
