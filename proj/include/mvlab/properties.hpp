#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvlab/engine.hpp"
#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

/// Named schemas over a negation role N, a conditional role > and, where
/// needed, conjunction and the biconditional.
enum class Thesis {
  AT,     // N(A > NA)
  ATv,    // N(NA > A)
  BT,     // (A > B) > N(A > NB)
  BTv,    // (A > NB) > N(A > B)
  CBT,    // N(A > NB) > (A > B)
  CBTv,   // N(A > B) > (A > NB)
  FT,     // (NA > B) > N(A > B)
  FTv,    // (A > B) > N(NA > B)
  CFT,    // N(A > B) > (NA > B)
  CFTv,   // N(NA > B) > (A > B)
  NSym,   // (A > B) > (B > A)
  UA,     // N(A > NB)
  AST,    // N((A > B) & (NA > B))
  AbP,    // N((A > B) & (A > NB))
  Cent1,  // N(A > A)
  Cent2,  // N(A > A) <> (A > A)
  MS,     // ((A > B) > B) > A
};

const std::vector<Thesis>& all_theses();
std::string_view to_string(Thesis thesis);
std::optional<Thesis> parse_thesis(std::string_view name);

/// Connective names playing each role.
struct Roles {
  std::string negation;
  std::string conditional;
  std::string conjunction = "and";
};

/// Resolves names or symbols against the signature; checks arities. The
/// conjunction role is left empty when the logic has no "and".
Roles resolve_roles(const Logic& logic, std::string_view negation, std::string_view conditional);

/// A binary connective of `logic` whose table is (A > B) & (B > A), if any.
const Connective* find_biconditional(const Logic& logic, const Roles& roles);

/// The schema over metavariables A and B, or nullopt when the logic lacks a
/// role it needs (conjunction for AST/AbP, the biconditional for Cent2).
std::optional<Schema> thesis_schema(const Logic& logic, Thesis thesis, const Roles& roles);

/// Verdict of a schema's atomic instance (metavariables read as atoms).
Verdict check_schema(const Logic& logic, const Schema& schema);

struct ClassificationReport {
  std::string logic;
  Roles roles;
  std::map<Thesis, Verdict> verdicts;
  bool connexive = false;
  bool hyper_connexive = false;
  bool nexive = false;
  bool hyper_nexive = false;
  bool contradictory = false;
  bool ultra_abelardian = false;
  /// X with both X and NX valid.
  std::optional<Formula> contradiction_witness;

  bool valid(Thesis t) const;
  bool invalid(Thesis t) const;
  /// AT, ATv, BT, BTv valid and NSym invalid.
  bool connexive_core() const;
};

ClassificationReport classify(const Logic& logic, std::string_view negation, std::string_view conditional);

/// Standard negations (N(T) = F, N(F) = T) over `values` that are not
/// explosive: {A, NA} does not entail B. Tables matching a builtin negation
/// carry its name and symbol.
std::vector<Connective> enumerate_tspn(const std::vector<TruthValue>& values,
                                       const std::vector<TruthValue>& designated);

struct StabilityReport {
  std::string conditional;
  std::vector<std::pair<Connective, ClassificationReport>> members;
  bool stable = false;

  struct Failure {
    std::string negation;
    Thesis thesis;
    Verdict verdict;
  };
  /// Core connexive schemas that fail, per negation.
  std::vector<Failure> failures;
};

StabilityReport check_stability(const Logic& logic, std::string_view conditional);

/// (AST, AbP)
std::pair<Verdict, Verdict> second_theses(const Logic& logic, std::string_view negation,
                                          std::string_view conditional);

struct CenteringReport {
  Verdict cent1;
  /// Absent when the logic has no biconditional for the conditional.
  std::optional<Verdict> cent2;
  Verdict forward;   // N(A > A) > (A > A)
  Verdict backward;  // (A > A) > N(A > A)
  Verdict meyer_slaney;
};

CenteringReport centering_suite(const Logic& logic, std::string_view negation, std::string_view conditional);

}  // namespace mvlab
