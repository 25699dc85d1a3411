#pragma once

#include <stdexcept>
#include <string>

namespace tensorinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or oracle request exceeded its configured size bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A partition or tableau shape violates a precondition.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class MalformedDiagramError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Matrix input outside the domain of a correspondence (odd diagonal, asymmetric, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorinv
