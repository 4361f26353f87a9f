#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homconf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or workspace text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called on inputs that do not satisfy its precondition
/// (for example an O-operator routine on a map that is not an O-operator).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated an invariant that the theory guarantees.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UnresolvedReference : public Error {
 public:
  explicit UnresolvedReference(std::string name)
      : Error("unresolved reference '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateName : public Error {
 public:
  using Error::Error;
};

}  // namespace homconf
