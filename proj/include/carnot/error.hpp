#pragma once

#include <stdexcept>
#include <string>

namespace carnot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotALieAlgebra : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class NotADerivation : public Error {
 public:
  using Error::Error;
};

class NotBracketGenerating : public Error {
 public:
  using Error::Error;
};

/// Raised when a prolongation component beyond the computed range is needed.
class NotComputed : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace carnot
