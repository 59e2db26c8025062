#pragma once

#include <stdexcept>
#include <string>

namespace rcoulomb {

/// Argument outside the mathematical domain of an operation (poles, divergent
/// limits, invalid indices).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative or adaptive procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcoulomb
