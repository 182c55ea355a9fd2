#pragma once

#include <stdexcept>
#include <string>

namespace knotcalc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input. Carries a character position when the
// source is a flat string (npos otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? msg
                  : msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Violated precondition or out-of-domain argument.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An internally asserted mathematical identity failed. This is never a
// user-input problem; the CLI maps it to a dedicated exit code.
class CertificateError : public Error {
 public:
  explicit CertificateError(const std::string& msg) : Error(msg) {}
};

// Requested result cannot be certified at the working precision.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

}  // namespace knotcalc
