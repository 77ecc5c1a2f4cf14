#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element or value set was handed to a hyperfield it does not belong to.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class EmptyHypersum : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DotProductCollision : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class DegeneratePolynomial : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class DuplicateTerm : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperion
