#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ultratop {

/// Raised when an input is well formed but violates a mathematical
/// precondition (a label outside the carrier, a non-ring table, a non-T0
/// space where T0 is required, ...). The CLI maps it to exit status 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The ultrafilter's generating point is not in its base, or the ultrafilter
/// lives on a different base than the one it is used with.
class InvalidUltrafilter : public DomainError {
 public:
  explicit InvalidUltrafilter(const std::string& what) : DomainError(what) {}
};

/// A space failed the T0 axiom; carries one pair of indistinguishable points.
class NotT0Error : public DomainError {
 public:
  NotT0Error(std::string first, std::string second)
      : DomainError("space is not T0: points '" + first + "' and '" + second +
                    "' are topologically indistinguishable"),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

/// Malformed serialized input (bad JSON shape, missing fields). Exit status 1.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ultratop
