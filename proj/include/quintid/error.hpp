#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quintid {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value does not fit the requested identifier width.
class range_error : public error {
 public:
  using error::error;
};

/// An argument lies outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// The system entropy source could not be used.
class environment_error : public error {
 public:
  using error::error;
};

/// Invalid prefix registry content or an IRI that cannot be resolved.
class registry_error : public error {
 public:
  using error::error;
};

/// Malformed textual input. `position()` is the zero-based byte offset of the
/// offending character, or the input length when input ended early.
class parse_error : public error {
 public:
  parse_error(std::string input, std::size_t position, const std::string& what)
      : error("'" + input + "' at position " + std::to_string(position) + ": " + what),
        input_(std::move(input)),
        position_(position) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string input_;
  std::size_t position_;
};

}  // namespace quintid
