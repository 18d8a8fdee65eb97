#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/engine.hpp"
#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

/// An n-ary operation generated by the signature, with the smallest term
/// found for it. Witnesses use the metavariables x1 and x2.
struct TermFunction {
  int arity = 1;
  /// Row-major over the logic's values (x1 slowest).
  std::vector<TruthValue> table;
  Schema witness;
  std::size_t size = 1;
};

/// All term functions of the given arity (1 or 2), in breadth-first
/// discovery order by term size. Requires at most four admissible values.
std::vector<TermFunction> clone_closure(const Logic& logic, int arity);

/// Exact membership test against the closure. The returned witness is a
/// minimal-size term.
std::optional<Schema> is_definable(const Logic& logic, int arity, const std::vector<TruthValue>& target);
std::optional<Schema> is_definable(const Logic& logic, const Connective& target);

/// A definability target as given on the command line: a toolbox
/// connective name or symbol, "consistency", or a table in letters.
struct DefinabilityTarget {
  std::string label;
  int arity = 1;
  std::vector<TruthValue> table;
};
DefinabilityTarget resolve_target(const Logic& logic, std::string_view text);

/// `logic` plus the named toolbox connectives it does not already have.
Logic borrow_from_toolbox(Logic logic, const std::vector<std::string>& names);

/// Table of `witness` evaluated pointwise over the logic's values.
std::vector<TruthValue> term_table(const Logic& logic, const Schema& witness, int arity);

/// Candidates are added to the logic under these names before each
/// predicate runs.
inline constexpr std::string_view kCandidateName = "cand";
inline constexpr std::string_view kCandidateSymbol = "#";

struct ConstraintPredicate {
  std::string name;
  std::function<bool(const Logic& extended, const Connective& candidate)> test;
};

namespace constraints {
/// A, A # B |= B
ConstraintPredicate detachment_valid();
/// a, b designated => a # b designated
ConstraintPredicate designated_preserving();
/// Material implication on {T, F}.
ConstraintPredicate classical_on_tf();
/// A sequent over the extended signature must be valid (or invalid).
ConstraintPredicate sequent(std::string text, bool expect_valid = true,
                            ConsequenceFlavor flavor = ConsequenceFlavor::truth_preservation);
/// A formula over the extended signature must be valid (or invalid).
ConstraintPredicate formula(std::string text, bool expect_valid = true);
/// Looks up a named predicate: "detachment", "designated-preserving",
/// "classical". Returns nullopt for unknown names.
std::optional<ConstraintPredicate> named(std::string_view name);
}  // namespace constraints

struct Enumeration {
  std::size_t count = 0;
  std::vector<Connective> survivors;
};

/// Brute force over every table of the given arity over the logic's values.
Enumeration enumerate_connectives(const Logic& logic, int arity,
                                  const std::vector<ConstraintPredicate>& predicates,
                                  bool keep_survivors = true);

}  // namespace mvlab
