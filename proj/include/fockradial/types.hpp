#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fockradial {

using Complex = std::complex<double>;

/// Point in R^d.
using RealPoint = std::vector<double>;

/// Point in C^d. Pairings of complex points are bilinear, <z,w> = sum z_j w_j.
using ComplexPoint = std::vector<Complex>;

/// Raised on shape mismatches and violated preconditions.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a serialized object does not follow its schema.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
  if (!condition) throw ArgumentError(message);
}

} // namespace fockradial
