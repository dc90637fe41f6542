#pragma once

#include <stdexcept>
#include <string>

namespace scenegen {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. Carries the line the parser stopped at and,
// when known, the offending field name.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line = 0, std::string field = {})
      : Error(line > 0 ? "line " + std::to_string(line) +
                             (field.empty() ? "" : " (" + field + ")") + ": " + msg
                       : msg),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

private:
  int line_ = 0;
  std::string field_;
};

// Well-formed input whose content violates a type invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

class ParameterError : public Error {
public:
  using Error::Error;
};

// Transport, quota or protocol failure while talking to a client service.
class ClientError : public Error {
public:
  using Error::Error;
};

// Client reply that does not satisfy the named response schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class EmptyMemoryError : public Error {
public:
  using Error::Error;
};

}  // namespace scenegen
