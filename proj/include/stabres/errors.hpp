#pragma once

#include <stdexcept>
#include <string>

namespace stabres {

// A documented precondition was violated (non-divisor quotient, membership
// failure, malformed dimensions, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text or JSON input could not be parsed; the message names the offending
// line or field.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee failed at runtime: a decomposition was not unique,
// or a cone boundary was not proportional to a basic cycle.  On stable input
// these are unreachable; hitting one means the input ideal is not stable or
// there is a genuine defect.
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stabres
