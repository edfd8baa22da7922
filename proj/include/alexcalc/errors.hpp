#pragma once

#include <stdexcept>
#include <string>

namespace alexcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient was requested that does not exist over the integer Laurent ring.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A polynomial that must use integer powers of t carries a half power.
class NonIntegerExponent : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

/// Input data is well formed but does not meet an operation's structural
/// precondition (e.g. the intersection form has the wrong block shape).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text or input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace alexcalc
