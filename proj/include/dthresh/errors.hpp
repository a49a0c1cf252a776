#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dthresh {

// Raised when a constructor or operation receives parameters outside the
// documented range. The message names the violated bound.
class ParameterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyEdgeSet : public std::invalid_argument {
 public:
  EmptyEdgeSet() : std::invalid_argument("graph has no edges") {}
};

class DisconnectedFactor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IsomorphicFactors : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind { MalformedHeader, TruncatedBits, OrderExceedsCap, TrailingData };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Automorphism enumeration stopped after `partial_count` elements.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial_count)
      : std::runtime_error("automorphism group exceeds cap of " + std::to_string(cap) +
                           " elements (stopped after " + std::to_string(partial_count) +
                           "); use a closed form instead"),
        cap_(cap),
        partial_count_(partial_count) {}
  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t cap_;
  std::size_t partial_count_;
};

class NotAnAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A closed-form evaluator was asked for parameters its theorem does not cover.
class OutOfTheoremRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A published statement failed on a concrete instance.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace dthresh
