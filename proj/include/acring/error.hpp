#pragma once

#include <stdexcept>
#include <string>

namespace acring {

/// A precondition on a physical or numerical input was violated.
class invalid_input : public std::invalid_argument {
 public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// The wavefunction has a density node, so its winding number is undefined.
class node_error : public std::domain_error {
 public:
  explicit node_error(const std::string& what) : std::domain_error(what) {}
};

/// No imaginary-time run reached the requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw invalid_input(message);
}

}  // namespace detail
}  // namespace acring
