#pragma once

#include <stdexcept>
#include <string>

namespace xaax {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible for the requested operation.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class NonSquareInput : public Error {
public:
  using Error::Error;
};

/// (n, mu) does not describe an admissible Type-II block: mu must satisfy
/// 0 != mu != (-1)^(n+1).
class InvalidCanonicalParameter : public Error {
public:
  using Error::Error;
};

class ParamCountMismatch : public Error {
public:
  using Error::Error;
};

/// Oracle input exceeds the configured order cap.
class SizeLimit : public Error {
public:
  using Error::Error;
};

/// A bracket of two basis elements left their span.
class NotClosed : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

/// Argument outside its documented range (e.g. a power index).
class OutOfRange : public Error {
public:
  using Error::Error;
};

/// Malformed scalar literal or matrix document.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace xaax
