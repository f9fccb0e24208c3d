#pragma once

#include <stdexcept>
#include <string>

namespace lietriple {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// malformed documents, dimension mismatches, arity mismatches
class InputError : public Error {
 public:
  using Error::Error;
};

// a structure handed to a constructor fails its defining identities
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

// an identity that must hold by construction did not
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lietriple
