#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebbling {

/// Caller violated a precondition (bad vertex index, size mismatch, illegal move).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Carries the byte offset where parsing failed.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured resource limit (pebble cap, search-size cap) was exceeded.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pebbling
