#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidband {

/// Error raised by the text parsers. Carries the offending input and a
/// byte offset into it so front ends can print a caret diagnostic.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string input, std::size_t position)
      : std::runtime_error(message), input_(std::move(input)), position_(position) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string input_;
  std::size_t position_;
};

/// Raised by decompose() when the braid is not in the Young subgroup.
class MembershipError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by connect() when the target tuple is not in the orbit of the base.
class OrbitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace braidband
