#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

/// Malformed or contract-violating input (bad ids, improper colorings, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An intermediate structure grew past the configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what, std::size_t requested = 0)
      : std::runtime_error(what), requested_(requested) {}
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t requested_;
};

/// A structural precondition of an algorithm does not hold. `predicate()`
/// names the failed check (e.g. "chordal", "(k-2)-connected").
class PreconditionError : public InputError {
 public:
  PreconditionError(std::string predicate, const std::string& what)
      : InputError(what), predicate_(std::move(predicate)) {}
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

}  // namespace recolor
