#pragma once

#include <stdexcept>
#include <string>

namespace critideals {

/// Invalid arguments: out-of-range parameters, references to missing vertices or edges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (trees, polynomials, matchings, family specs).
class ParseError : public InputError {
 public:
  enum class Kind { syntax, cycle, disconnected, self_loop, duplicate_edge, label_out_of_range, multiplicity };

  ParseError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured resource cap was hit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critideals
