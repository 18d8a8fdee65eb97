#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/truth_value.hpp"

namespace mvlab {

enum class Fixity { prefix, infix };
enum class Assoc { left, none };

/// Surface syntax of a connective. Prefix connectives always bind tighter
/// than any infix connective; among infix connectives a higher precedence
/// binds tighter.
struct Notation {
  std::string symbol;
  Fixity fixity = Fixity::prefix;
  int precedence = 0;
  Assoc assoc = Assoc::left;
};

inline constexpr int kConditionalPrecedence = 1;
inline constexpr int kDisjunctionPrecedence = 2;
inline constexpr int kConjunctionPrecedence = 3;

/// A named truth function of arity 1 or 2 over a fixed domain of admissible
/// values. The table is row-major over the domain: for a binary connective
/// entry i * |domain| + j holds f(domain[i], domain[j]).
class Connective {
 public:
  Connective(std::string name, Notation notation, int arity, std::vector<TruthValue> domain,
             std::vector<TruthValue> table);

  const std::string& name() const { return name_; }
  const Notation& notation() const { return notation_; }
  const std::string& symbol() const { return notation_.symbol; }
  int arity() const { return arity_; }
  const std::vector<TruthValue>& domain() const { return domain_; }
  const std::vector<TruthValue>& table() const { return table_; }

  /// Index of `v` in the domain, or -1.
  int index_of(TruthValue v) const { return position_[static_cast<std::size_t>(v.code())]; }

  /// Throws SemanticError on arity mismatch or a non-admissible argument.
  TruthValue apply(std::span<const TruthValue> args) const;
  TruthValue operator()(TruthValue a) const;
  TruthValue operator()(TruthValue a, TruthValue b) const;

  /// Unchecked entry access by domain indices.
  TruthValue at(int i) const { return table_[static_cast<std::size_t>(i)]; }
  TruthValue at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * domain_.size() + static_cast<std::size_t>(j)];
  }

  Connective renamed(std::string name, std::string symbol) const;
  Connective with_entry(std::size_t index, TruthValue value) const;

  /// Same arity, domain and table.
  bool same_function(const Connective& other) const {
    return arity_ == other.arity_ && domain_ == other.domain_ && table_ == other.table_;
  }

 private:
  std::string name_;
  Notation notation_;
  int arity_;
  std::vector<TruthValue> domain_;
  std::vector<TruthValue> table_;
  std::array<int, 4> position_{-1, -1, -1, -1};
};

/// A logical matrix: admissible values, designated values, and a signature.
/// Immutable once built; construction validates every invariant.
class Logic {
 public:
  Logic(std::string name, std::vector<TruthValue> values, std::vector<TruthValue> designated,
        std::vector<Connective> signature);

  const std::string& name() const { return name_; }
  const std::vector<TruthValue>& values() const { return values_; }
  const std::vector<TruthValue>& designated() const { return designated_; }
  const std::vector<Connective>& signature() const { return signature_; }

  bool admits(TruthValue v) const { return admitted_[static_cast<std::size_t>(v.code())]; }
  bool is_designated(TruthValue v) const {
    return designated_mask_[static_cast<std::size_t>(v.code())];
  }

  const Connective* find(std::string_view name) const;
  const Connective* find_symbol(std::string_view symbol) const;
  /// Name first, then symbol. Throws SemanticError if neither matches.
  const Connective& resolve(std::string_view name_or_symbol) const;
  /// Throws SemanticError if no connective has this name.
  const Connective& connective(std::string_view name) const;

  TruthValue lookup(std::string_view connective_name, std::span<const TruthValue> args) const;
  TruthValue lookup(std::string_view connective_name, std::initializer_list<TruthValue> args) const {
    return lookup(connective_name, std::span<const TruthValue>(args.begin(), args.size()));
  }

  Logic with(Connective extra) const;
  Logic with_name(std::string name) const;
  Logic replacing(const Connective& updated) const;
  /// Sub-signature restricted to the named connectives, in the given order.
  Logic restricted_to(const std::vector<std::string>& names) const;

 private:
  std::string name_;
  std::vector<TruthValue> values_;
  std::vector<TruthValue> designated_;
  std::vector<Connective> signature_;
  std::array<bool, 4> admitted_{};
  std::array<bool, 4> designated_mask_{};
};

/// Builds a binary connective whose table is `outer(left(a,b), left(b,a))`,
/// e.g. the biconditional (A > B) & (B > A).
Connective symmetric_expansion(std::string name, Notation notation, const Connective& cond,
                               const Connective& conj);

}  // namespace mvlab
