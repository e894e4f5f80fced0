#pragma once

#include <stdexcept>
#include <string>

namespace cigler {

/// Raised for arguments outside an operation's domain: division by zero,
/// inadmissible parameter points, malformed rational literals.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace cigler
