#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Law reports: every validator in the engine returns one of these instead of a
// bare bool, so a failure always names the law that broke and the smallest
// witness tuple that breaks it.

namespace fibrenrich {

enum class Severity {
  Malformed,  // dangling identifier, missing component, shape mismatch
  Violation,  // a law/equation that does not hold
  Budget,     // enumeration abandoned because the instance exceeds the budget
};

struct Finding {
  Severity severity = Severity::Violation;
  std::string law;                   // stable dotted identifier, e.g. "monoidal.pentagon"
  std::string anchor;                // coarse grouping tag, from law_anchor()
  std::vector<std::string> witness;  // identifiers pinning down the failure
  std::string detail;                // human-readable message
};

// Maps a law identifier to its documented anchor tag ("plumbing" for
// reference/shape errors, otherwise the axiom family it belongs to).
std::string law_anchor(const std::string& law);

struct LawReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  bool has(const std::string& law) const;
  const Finding* find(const std::string& law) const;

  void add(Severity sev, const std::string& law, std::vector<std::string> witness,
           std::string detail);
  void malformed(const std::string& law, std::vector<std::string> witness, std::string detail);
  void violation(const std::string& law, std::vector<std::string> witness, std::string detail);
  void merge(const LawReport& other);
  // Prefixes every finding's law id, e.g. merge_as("adjunction.unit", r) turns
  // "nat.naturality" into "adjunction.unit.nat.naturality".
  void merge_as(const std::string& prefix, const LawReport& other);

  std::string summary() const;  // one line per finding
};

// Thrown when a construction backed by a theorem fails its own re-validation:
// this signals a bug in the engine (or inconsistent input that slipped through
// the preconditions), never a user-level law violation.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown on misuse of constructive operations (unknown object passed to
// fibre(), missing family member, ...). The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fibrenrich
