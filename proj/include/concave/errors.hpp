#pragma once

#include <stdexcept>
#include <string>

namespace concave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("series has a vanishing constant term") {}
};

class NonzeroConstantTerm : public Error {
 public:
  NonzeroConstantTerm() : Error("exponent series must vanish at the origin") {}
};

class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator() : Error("Moebius denominator vanishes") {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

class DegenerateBoundary : public Error {
 public:
  DegenerateBoundary() : Error("boundary polyline has fewer than 3 distinct points") {}
};

}  // namespace concave
