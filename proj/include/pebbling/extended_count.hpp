#pragma once

#include <pebbling/errors.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace pebbling {

/// A natural number or the distinguished value Infinite.
class ExtendedCount {
 public:
  static ExtendedCount finite(std::uint64_t value) { return ExtendedCount(value); }
  static ExtendedCount infinite() { return ExtendedCount(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  std::uint64_t value() const {
    if (!value_) throw usage_error("value() on an infinite count");
    return *value_;
  }

  friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;

 private:
  ExtendedCount() = default;
  explicit ExtendedCount(std::uint64_t v) : value_(v) {}

  std::optional<std::uint64_t> value_;
};

inline std::string to_string(const ExtendedCount& c) {
  return c.is_infinite() ? "infinite" : std::to_string(c.value());
}

inline std::ostream& operator<<(std::ostream& os, const ExtendedCount& c) { return os << to_string(c); }

}  // namespace pebbling
