#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotproj {

/// Malformed textual input. `position` is a 0-based column into `input`.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string input, std::size_t position, const std::string& what)
      : std::runtime_error("position " + std::to_string(position) + ": " + what),
        input_(std::move(input)),
        position_(position) {}

  const std::string& input() const { return input_; }
  std::size_t position() const { return position_; }

  /// The input with a caret under the offending column.
  std::string annotated() const {
    return input_ + "\n" + std::string(position_, ' ') + "^ " + what();
  }

 private:
  std::string input_;
  std::size_t position_;
};

/// A combination contains a generator the requested computation cannot handle
/// (twist knots only carry jump-locus data).
class UnsupportedGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace knotproj
