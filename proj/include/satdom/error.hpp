#pragma once

#include <stdexcept>
#include <string>

namespace satdom {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (board files, witness files).
struct ParseError : Error {
  using Error::Error;
};

// Operation precondition violated by the domain data (isolated cells,
// irregular board, empty graph).
struct DomainError : Error {
  using Error::Error;
};

// Scale guard or validity-domain violation (oracle size limits, formula
// argument ranges, DP profile guard).
struct CapacityError : Error {
  using Error::Error;
};

// A witness or contract check failed (non-dominating set, invalid tiling,
// unsaturated covering where saturation is required).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace satdom
