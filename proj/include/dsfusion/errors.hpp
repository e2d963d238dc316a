#pragma once

#include <stdexcept>
#include <string>

namespace dsfusion {

// Base class for every error raised by the library. Callers that only care
// about "input was bad" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FrameMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class NotAMass : public Error {
 public:
  using Error::Error;
};

class EnsembleTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroOpinion : public Error {
 public:
  using Error::Error;
};

class SingularCovariance : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsfusion
