#pragma once

#include <stdexcept>
#include <string>

namespace vlp {

// Base of every error thrown by the library. Outcomes that are verdicts
// (infeasible LP, "not a member", ...) are returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConeError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `where` names the offending field or position.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class LimitError : public Error {
 public:
  using Error::Error;
};

// A postcondition the library guarantees was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vlp
