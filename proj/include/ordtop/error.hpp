#pragma once

#include <stdexcept>
#include <string>

namespace ordtop {

// Domain-level failure (bad input value, unsupported construction, overflow).
// CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with a character position, for the ordinal expression parser.
struct ParseError : DomainError {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : DomainError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace ordtop
