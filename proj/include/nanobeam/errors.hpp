#pragma once

#include <stdexcept>
#include <string>

namespace nanobeam {

/// Invalid user input: parameters, grids, configuration.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine could not deliver a trustworthy result
/// (near-singular solve, eigensolver failure, overflow, degenerate fit).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nanobeam
