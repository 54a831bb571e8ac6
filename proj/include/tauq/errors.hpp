#pragma once

#include <stdexcept>
#include <string>

namespace tauq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown vertex, malformed file, bad command line.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a quiver outside its domain
/// (for instance a strictness test on a non-artinian quiver).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computed result contradicts a theorem it must satisfy. Seeing this
/// means either the fixture transcription or the implementation is wrong.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauq
