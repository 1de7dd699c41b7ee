#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treebij {

// Syntax error in one of the text formats. `offset` is the 0-based character
// position of the offending input; it is also spelled out in the message.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at position " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// A structurally well-formed value that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A 2-partition that cannot be decoded into a phylogenetic tree.
class InvalidCodeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

}  // namespace treebij
