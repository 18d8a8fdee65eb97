#include "mvlab/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mvlab/error.hpp"

namespace mvlab {

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void check_symbol(const std::string& symbol, const std::string& owner) {
  if (symbol.empty()) throw SemanticError("connective '" + owner + "' has an empty symbol");
  bool word = std::isalpha(static_cast<unsigned char>(symbol[0])) || symbol[0] == '_';
  for (char c : symbol) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',') {
      throw SemanticError("connective '" + owner + "' has an invalid symbol '" + symbol + "'");
    }
    if (word && !is_word_char(c)) {
      throw SemanticError("connective '" + owner + "': a word symbol may only contain letters, digits and '_'");
    }
  }
  if (std::isdigit(static_cast<unsigned char>(symbol[0])) || symbol == "=>") {
    throw SemanticError("connective '" + owner + "' has a reserved symbol '" + symbol + "'");
  }
}

void check_unique_values(const std::vector<TruthValue>& values, const std::string& what) {
  std::set<int> seen;
  for (TruthValue v : values) {
    if (!seen.insert(v.code()).second) throw SemanticError(what + " lists " + v.name() + " twice");
  }
}

}  // namespace

Connective::Connective(std::string name, Notation notation, int arity,
                       std::vector<TruthValue> domain, std::vector<TruthValue> table)
    : name_(std::move(name)),
      notation_(std::move(notation)),
      arity_(arity),
      domain_(std::move(domain)),
      table_(std::move(table)) {
  if (name_.empty()) throw SemanticError("connective with empty name");
  check_symbol(notation_.symbol, name_);
  if (arity_ != 1 && arity_ != 2) {
    throw SemanticError("connective '" + name_ + "' has unsupported arity " + std::to_string(arity_));
  }
  if ((arity_ == 1) != (notation_.fixity == Fixity::prefix)) {
    throw SemanticError("connective '" + name_ + "': unary connectives are prefix, binary ones infix");
  }
  if (domain_.empty()) throw SemanticError("connective '" + name_ + "' has an empty domain");
  check_unique_values(domain_, "domain of '" + name_ + "'");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    position_[static_cast<std::size_t>(domain_[i].code())] = static_cast<int>(i);
  }
  std::size_t expected = arity_ == 1 ? domain_.size() : domain_.size() * domain_.size();
  if (table_.size() != expected) {
    throw SemanticError("connective '" + name_ + "' needs " + std::to_string(expected) +
                        " table entries, got " + std::to_string(table_.size()));
  }
  for (TruthValue v : table_) {
    if (index_of(v) < 0) {
      throw SemanticError("connective '" + name_ + "' is not closed: produces " + v.name());
    }
  }
}

TruthValue Connective::apply(std::span<const TruthValue> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw SemanticError("connective '" + name_ + "' expects " + std::to_string(arity_) +
                        " argument(s), got " + std::to_string(args.size()));
  }
  std::size_t offset = 0;
  for (TruthValue v : args) {
    int i = index_of(v);
    if (i < 0) {
      throw SemanticError(std::string("value ") + v.name() + " is not admissible for '" + name_ + "'");
    }
    offset = offset * domain_.size() + static_cast<std::size_t>(i);
  }
  return table_[offset];
}

TruthValue Connective::operator()(TruthValue a) const {
  std::array<TruthValue, 1> args{a};
  return apply(args);
}

TruthValue Connective::operator()(TruthValue a, TruthValue b) const {
  std::array<TruthValue, 2> args{a, b};
  return apply(args);
}

Connective Connective::renamed(std::string name, std::string symbol) const {
  Notation n = notation_;
  n.symbol = std::move(symbol);
  return Connective(std::move(name), std::move(n), arity_, domain_, table_);
}

Connective Connective::with_entry(std::size_t index, TruthValue value) const {
  std::vector<TruthValue> t = table_;
  t.at(index) = value;
  return Connective(name_, notation_, arity_, domain_, std::move(t));
}

Logic::Logic(std::string name, std::vector<TruthValue> values, std::vector<TruthValue> designated,
             std::vector<Connective> signature)
    : name_(std::move(name)),
      values_(std::move(values)),
      designated_(std::move(designated)),
      signature_(std::move(signature)) {
  if (name_.empty()) throw SemanticError("logic with empty name");
  if (values_.empty()) throw SemanticError("logic '" + name_ + "' has no admissible values");
  check_unique_values(values_, "logic '" + name_ + "'");
  check_unique_values(designated_, "designated set of '" + name_ + "'");
  for (TruthValue v : values_) admitted_[static_cast<std::size_t>(v.code())] = true;
  for (TruthValue v : designated_) {
    if (!admits(v)) {
      throw SemanticError(std::string("designated value ") + v.name() + " is not admissible in '" + name_ + "'");
    }
    designated_mask_[static_cast<std::size_t>(v.code())] = true;
  }
  std::set<std::string> names, symbols;
  for (const Connective& c : signature_) {
    if (c.domain() != values_) {
      throw SemanticError("connective '" + c.name() + "' is not defined over the values of '" + name_ + "'");
    }
    if (!names.insert(c.name()).second) {
      throw SemanticError("logic '" + name_ + "' has two connectives named '" + c.name() + "'");
    }
    if (!symbols.insert(c.symbol()).second) {
      throw SemanticError("logic '" + name_ + "' has two connectives with symbol '" + c.symbol() + "'");
    }
  }
}

const Connective* Logic::find(std::string_view name) const {
  for (const Connective& c : signature_) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

const Connective* Logic::find_symbol(std::string_view symbol) const {
  for (const Connective& c : signature_) {
    if (c.symbol() == symbol) return &c;
  }
  return nullptr;
}

const Connective& Logic::resolve(std::string_view name_or_symbol) const {
  if (const Connective* c = find(name_or_symbol)) return *c;
  if (const Connective* c = find_symbol(name_or_symbol)) return *c;
  throw SemanticError("logic '" + name_ + "' has no connective '" + std::string(name_or_symbol) + "'");
}

const Connective& Logic::connective(std::string_view name) const {
  if (const Connective* c = find(name)) return *c;
  throw SemanticError("logic '" + name_ + "' has no connective named '" + std::string(name) + "'");
}

TruthValue Logic::lookup(std::string_view connective_name, std::span<const TruthValue> args) const {
  return connective(connective_name).apply(args);
}

Logic Logic::with(Connective extra) const {
  std::vector<Connective> sig = signature_;
  sig.push_back(std::move(extra));
  return Logic(name_, values_, designated_, std::move(sig));
}

Logic Logic::with_name(std::string name) const {
  return Logic(std::move(name), values_, designated_, signature_);
}

Logic Logic::replacing(const Connective& updated) const {
  std::vector<Connective> sig = signature_;
  auto it = std::find_if(sig.begin(), sig.end(),
                         [&](const Connective& c) { return c.name() == updated.name(); });
  if (it == sig.end()) throw SemanticError("logic '" + name_ + "' has no connective named '" + updated.name() + "'");
  *it = updated;
  return Logic(name_, values_, designated_, std::move(sig));
}

Logic Logic::restricted_to(const std::vector<std::string>& names) const {
  std::vector<Connective> sig;
  for (const std::string& n : names) sig.push_back(connective(n));
  return Logic(name_, values_, designated_, std::move(sig));
}

Connective symmetric_expansion(std::string name, Notation notation, const Connective& cond,
                               const Connective& conj) {
  if (cond.arity() != 2 || conj.arity() != 2 || cond.domain() != conj.domain()) {
    throw SemanticError("symmetric expansion needs two binary connectives over one domain");
  }
  const std::size_t k = cond.domain().size();
  std::vector<TruthValue> table;
  table.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table.push_back(conj(cond.at(static_cast<int>(i), static_cast<int>(j)),
                           cond.at(static_cast<int>(j), static_cast<int>(i))));
    }
  }
  return Connective(std::move(name), std::move(notation), 2, cond.domain(), std::move(table));
}

}  // namespace mvlab
