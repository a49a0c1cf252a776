#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dthresh {

// Which elements a coloring assigns colours to. Total colorings index
// vertices first, then edges.
enum class Mode { Vertex, Edge, Total };

// Where a reported number came from.
enum class Method { ClosedForm, CycleLemma, Oracle };

std::string_view to_string(Mode mode);
std::string_view to_string(Method method);
std::optional<Mode> parse_mode(std::string_view text);

// A threshold value that may be undefined (no coloring in the mode can break
// the symmetry). Undefined is its own state, never a sentinel number.
class Threshold {
 public:
  static Threshold undefined() { return Threshold(); }
  static Threshold of(std::int64_t value) { return Threshold(value); }

  bool defined() const noexcept { return value_.has_value(); }
  // Throws std::bad_optional_access when undefined.
  std::int64_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "undefined"; }

  friend bool operator==(const Threshold&, const Threshold&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Threshold& t) {
    return os << t.to_string();
  }

 private:
  Threshold() = default;
  explicit Threshold(std::int64_t value) : value_(value) {}

  std::optional<std::int64_t> value_;
};

}  // namespace dthresh
