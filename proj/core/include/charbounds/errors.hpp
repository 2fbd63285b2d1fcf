#pragma once

#include <stdexcept>
#include <string>

namespace charbounds {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a request exceeds a documented size limit (sweep limit,
/// search space, table memory).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace charbounds
