#pragma once

#include <stdexcept>
#include <string>

namespace multbound {

/// Malformed or out-of-contract input (wrong lengths, negative exponents,
/// predicates violated by a closed formula's hypothesis).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multbound
