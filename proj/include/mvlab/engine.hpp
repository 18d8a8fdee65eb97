#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

/// Total assignment of truth values to a finite set of atoms.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::map<std::string, TruthValue> assignment) : assignment_(std::move(assignment)) {}

  void set(const std::string& atom, TruthValue v) { assignment_[atom] = v; }
  std::optional<TruthValue> get(const std::string& atom) const;
  const std::map<std::string, TruthValue>& assignment() const { return assignment_; }

  /// "A=F B=T"
  std::string str() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, TruthValue> assignment_;
};

/// Three-way refinement of validity: a valid formula is either exactly {1}
/// everywhere or designated everywhere but sometimes also false.
enum class Status { valid_just_true, valid_sometimes_false, invalid };

std::string_view to_string(Status status);

struct Verdict {
  Status status = Status::invalid;
  /// Countermodel when invalid; the first valuation whose value is not T
  /// when valid_sometimes_false.
  std::optional<Valuation> witness;

  bool valid() const { return status != Status::invalid; }
};

enum class ConsequenceFlavor { truth_preservation, exact_truth, non_falsity };

std::string_view to_string(ConsequenceFlavor flavor);
/// Accepts "truth", "exact", "non-falsity" and the full enum spellings.
std::optional<ConsequenceFlavor> parse_flavor(std::string_view text);

/// Throws SemanticError for an unbound atom or an unknown connective.
TruthValue evaluate(const Logic& logic, const Valuation& valuation, const Formula& formula);

/// Visits every valuation of `atoms` over the logic's values: the first atom
/// varies slowest, values follow the logic's order. Stops early when the
/// visitor returns false.
void for_each_valuation(const Logic& logic, const std::vector<std::string>& atoms,
                        const std::function<bool(const Valuation&)>& visit);

/// Exhaustive check; the witness is the first qualifying valuation in
/// enumeration order over the alphabetically sorted atoms.
Verdict check_validity(const Logic& logic, const Formula& formula);

/// Every refuting valuation, in enumeration order.
std::vector<Valuation> countermodels(const Logic& logic, const Formula& formula);

/// Valid sequents are reported as valid_just_true.
Verdict check_consequence(const Logic& logic, const Sequent& sequent,
                          ConsequenceFlavor flavor = ConsequenceFlavor::truth_preservation);

/// (premise |= conclusion, |= premise > conclusion).
std::pair<Verdict, Verdict> check_deduction(const Logic& logic, const Formula& premise,
                                            const Formula& conclusion, std::string_view conditional);

}  // namespace mvlab
