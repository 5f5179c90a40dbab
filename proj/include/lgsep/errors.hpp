#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lgsep {

/// Caller passed an argument outside an operation's domain (t < 3, r < 1, bad weights...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a construction step does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An output failed its own postcondition. Always an implementation bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponential oracle refused an instance above its configured size guard.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of a validator: either ok, or the name of the first violated clause.
struct Verdict {
  bool ok = true;
  std::string clause;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string what) { return {false, std::move(what)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace lgsep
