#pragma once

#include <stdexcept>
#include <string>

namespace harmonium {

/// The confinement no longer binds the particles (delta/k <= -1/N).
class unbound_system : public std::domain_error {
 public:
  explicit unbound_system(const std::string& what) : std::domain_error(what) {}
};

/// Requested polynomial degree exceeds the configured cap.
class degree_too_large : public std::length_error {
 public:
  explicit degree_too_large(const std::string& what) : std::length_error(what) {}
};

/// Gaussian moment or kernel integral does not converge (a <= |c|).
class divergent_integral : public std::domain_error {
 public:
  explicit divergent_integral(const std::string& what) : std::domain_error(what) {}
};

/// Objective is monotone on the search bracket.
class no_interior_maximum : public std::runtime_error {
 public:
  explicit no_interior_maximum(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace harmonium
