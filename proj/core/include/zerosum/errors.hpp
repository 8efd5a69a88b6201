#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class InvalidElement : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymmetry : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `token()` is the offending substring.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token)
      : Error(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace zerosum
