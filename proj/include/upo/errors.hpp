#pragma once

#include <stdexcept>
#include <string>

namespace upo {

// Base class for all domain errors raised by the library. Programming
// mistakes (violated internal invariants) use std::logic_error instead.
class UpoError : public std::runtime_error {
 public:
  explicit UpoError(const std::string& message) : std::runtime_error(message) {}
};

// A name was referenced that is not declared, or is declared in a
// different category than the use site requires.
class UnknownNameError : public UpoError {
 public:
  UnknownNameError(std::string name, const std::string& message)
      : UpoError(message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// An ICE was asked about its aboutness target but carries no aboutness axiom.
class NoAboutnessError : public UpoError {
 public:
  explicit NoAboutnessError(const std::string& ice)
      : UpoError("ICE '" + ice + "' has no aboutness axiom") {}
};

// An ICE carries more than one aboutness axiom where exactly one is required.
class MultipleAboutnessError : public UpoError {
 public:
  explicit MultipleAboutnessError(const std::string& ice)
      : UpoError("ICE '" + ice + "' has more than one aboutness axiom") {}
};

// An individual offered for realization does not satisfy the blueprint's
// prescribed combination. Carries the first failing conjunct, rendered in
// surface syntax.
class NotConformantError : public UpoError {
 public:
  NotConformantError(const std::string& individual, std::string conjunct)
      : UpoError("'" + individual + "' does not satisfy the prescribed combination; fails: " +
                 conjunct),
        conjunct_(std::move(conjunct)) {}
  const std::string& failing_conjunct() const { return conjunct_; }

 private:
  std::string conjunct_;
};

// An operation was applied to an ICE of the wrong kind (e.g. realizing a
// non-Blueprint, or resolving a non-temporal ICE).
class WrongKindError : public UpoError {
 public:
  explicit WrongKindError(const std::string& message) : UpoError(message) {}
};

// A timestamp literal does not denote a real calendar instant.
class InvalidTimestampError : public UpoError {
 public:
  explicit InvalidTimestampError(const std::string& literal)
      : UpoError("invalid timestamp '" + literal + "'") {}
};

}  // namespace upo
