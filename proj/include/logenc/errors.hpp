#pragma once

#include <stdexcept>
#include <string>

namespace logenc {

/// Thrown when an exact oracle is asked for an instance beyond its
/// enumeration limit. CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on unreadable or malformed instance files. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logenc
