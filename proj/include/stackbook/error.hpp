#pragma once

#include <stdexcept>
#include <string>

namespace stackbook {

// Parameters or vertices outside the supported domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stacked-book parameters the constructions do not cover (odd n).
class UnsupportedParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A block scheme was asked to label a star order it does not handle.
class SchemeMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Only bounds are known for the requested parameters.
class NotExactError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(const std::string& what, int unreachable)
      : std::runtime_error(what), unreachable_(unreachable) {}
  int unreachable() const noexcept { return unreachable_; }

 private:
  int unreachable_;
};

class PartialLabelingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stackbook
