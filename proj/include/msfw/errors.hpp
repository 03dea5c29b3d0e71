#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msfw {

// Base class for all error conditions raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class EdgeAlreadyPresent : public Error {
 public:
  using Error::Error;
};

class EdgeNotFound : public Error {
 public:
  using Error::Error;
};

class SelfLoopForbidden : public Error {
 public:
  using Error::Error;
};

class WeightOutOfRange : public Error {
 public:
  using Error::Error;
};

// Sampling from an empty support set.
class EmptySupport : public Error {
 public:
  using Error::Error;
};

// Initial T parameter below the number of non-isolated vertices.
class TParamTooSmall : public Error {
 public:
  using Error::Error;
};

// Per-update T parameter contract broken (T < nis or |T_i - T_{i-1}| > 2).
// Signals a caller bug, not adversarial input.
class TParamViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

// Semantic failure while replaying an update stream (duplicate insert,
// missing delete). Carries the timestamp of the offending update.
class ReplayError : public Error {
 public:
  ReplayError(std::int64_t timestamp, const std::string& what)
      : Error("update " + std::to_string(timestamp) + ": " + what),
        timestamp_(timestamp) {}
  std::int64_t timestamp() const { return timestamp_; }

 private:
  std::int64_t timestamp_;
};

}  // namespace msfw
