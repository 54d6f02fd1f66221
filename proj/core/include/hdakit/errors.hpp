#pragma once

#include <stdexcept>
#include <string>

namespace hdakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iposet description violates one of the lposet/iposet axioms
/// (strict orders, pair coverage, interface extremality, interval property).
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// Gluing was requested for ipomsets whose target and source interfaces differ.
class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Events passed to remove_targets are not all non-source target events.
class NotRemovable : public Error {
 public:
  using Error::Error;
};

class MalformedInterval : public Error {
 public:
  using Error::Error;
};

class FaceTypingError : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class NotDownClosed : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text formats (.ipo, .hda, .lang, CSV logs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdakit
