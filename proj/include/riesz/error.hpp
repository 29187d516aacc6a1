#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Every failure raised by the library derives from Error; the C API maps each
// subclass onto one status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class RealizationError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class MismatchError : public Error {
public:
  using Error::Error;
};

// Quadrature grid too coarse for the oscillation it has to resolve.
class ResolutionError : public Error {
public:
  using Error::Error;
};

class QuadratureError : public Error {
public:
  using Error::Error;
};

// Requested tolerance cannot be met with the supplied truncation.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace riesz
