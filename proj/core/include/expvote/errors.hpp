#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace expvote {

// Codes for the standing-assumption checks in validate().
enum class Violation {
  PriorOutOfRange,
  TypeProbOrder,
  Assumption1Violated,
  Assumption2Violated,
  NonpositiveRate,
};

const char* violation_name(Violation v);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::vector<Violation> violations, const std::string& what_arg)
      : std::runtime_error(what_arg), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(Violation v) const;

 private:
  std::vector<Violation> violations_;
};

// Conditioning on K >= 1 sure winners at t = 0: a probability-zero event.
class DegenerateEvent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The indifference curve already lies at or below s as t -> 0.
class NoInteriorEquilibrium : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidT1 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace expvote
