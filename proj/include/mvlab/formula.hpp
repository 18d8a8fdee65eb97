#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mvlab {

class Logic;

/// Immutable formula tree: an atom, or a connective (by name) applied to
/// children. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula apply(std::string connective, std::vector<Formula> children);

  bool is_atom() const { return node_->children.empty() && node_->atom; }
  /// Atom name or connective name.
  const std::string& label() const { return node_->label; }
  std::span<const Formula> children() const { return node_->children; }

  std::set<std::string> atoms() const;
  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    std::string label;
    bool atom = false;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula read as a schema: its atoms are metavariables.
struct Schema {
  Formula body;

  std::set<std::string> metavariables() const { return body.atoms(); }
};

/// Premises (finite) and a conclusion.
struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// Homomorphic substitution of formulas for metavariables. Throws
/// SemanticError when a metavariable has no binding.
Formula instantiate(const Schema& schema, const std::map<std::string, Formula>& mapping);

/// Throws SemanticError unless every connective exists in `logic` with the
/// arity used.
void check_well_formed(const Logic& logic, const Formula& formula);

/// Parses `text` against the notation of `logic`'s signature.
///
/// Grammar (loosest to tightest): non-associative infix connectives at the
/// conditional level, left-associative ones at higher levels, then prefix
/// connectives, atoms and parenthesised groups. Chaining non-associative
/// connectives of one level requires parentheses.
Formula parse(const Logic& logic, std::string_view text);

/// `premise, premise => conclusion`; the premise list may be empty.
Sequent parse_sequent(const Logic& logic, std::string_view text);

/// Canonical form with minimal parentheses; parse(logic, print(logic, f)) == f.
std::string print(const Logic& logic, const Formula& formula);
std::string print(const Logic& logic, const Sequent& sequent);

}  // namespace mvlab
