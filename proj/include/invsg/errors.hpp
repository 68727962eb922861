#pragma once

#include <stdexcept>
#include <string>

namespace invsg {

  // Base of every error thrown by the library. The three subclasses map onto
  // the command line exit codes 1, 2 and 3.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or out-of-contract input supplied by the caller.
  class RejectedInput : public Error {
   public:
    using Error::Error;
  };

  // A mathematical property that must hold by construction did not. Always a
  // bug in this library, never a problem with the input.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  // A configured size cap was exceeded.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

}  // namespace invsg
