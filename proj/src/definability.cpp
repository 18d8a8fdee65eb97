#include "mvlab/definability.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"

namespace mvlab {

namespace {

// Tables are packed two bits per entry (domain indices), entry 0 lowest.
using Code = std::uint32_t;

class CloneBuilder {
 public:
  CloneBuilder(const Logic& logic, int arity) : logic_(logic), arity_(arity) {
    if (arity != 1 && arity != 2) throw SemanticError("clone closure supports arity 1 or 2 only");
    k_ = logic.values().size();
    if (k_ > 4) throw SemanticError("clone closure supports at most four values");
    entries_ = arity == 1 ? k_ : k_ * k_;
    mask_ = entries_ * 2 >= 32 ? ~Code{0} : ((Code{1} << (entries_ * 2)) - 1);
    total_ = 1;
    for (std::size_t i = 0; i < entries_; ++i) total_ *= k_;
    if (entries_ <= 9) dense_.assign(std::size_t{1} << (entries_ * 2), -1);
    for (const Connective& c : logic.signature()) ops_.push_back(make_op(c));
  }

  void run() {
    for (int p = 0; p < arity_; ++p) {
      Code code = 0;
      for (std::size_t e = 0; e < entries_; ++e) {
        const std::size_t digit = arity_ == 1 ? e : (p == 0 ? e / k_ : e % k_);
        code |= static_cast<Code>(digit) << (2 * e);
      }
      add(code, 1, -1 - p, {});
    }
    std::size_t max_arity = 0;
    for (const Op& op : ops_) max_arity = std::max<std::size_t>(max_arity, op.arity);

    for (std::size_t level = 2; level <= max_arity * max_size_ + 1 && funcs_.size() < total_; ++level) {
      by_size_.resize(std::max(by_size_.size(), level + 1));
      for (std::size_t o = 0; o < ops_.size() && funcs_.size() < total_; ++o) {
        const Op& op = ops_[o];
        if (op.arity == 1) {
          const std::vector<int> layer = by_size_[level - 1];
          for (int g : layer) add(compose1(op, funcs_[static_cast<std::size_t>(g)].code), level, static_cast<int>(o), {g, -1});
          continue;
        }
        for (std::size_t i = 1; i + 1 < level; ++i) {
          const std::size_t j = level - 1 - i;
          if (i >= by_size_.size() || j >= by_size_.size()) continue;
          const std::vector<int> left = by_size_[i];
          const std::vector<int> right = by_size_[j];
          for (int g : left) {
            const Code gc = funcs_[static_cast<std::size_t>(g)].code;
            for (int h : right) {
              add(compose2(op, gc, funcs_[static_cast<std::size_t>(h)].code), level, static_cast<int>(o), {g, h});
              if (funcs_.size() == total_) return;
            }
          }
        }
      }
    }
  }

  std::vector<TermFunction> materialize() const {
    std::vector<Formula> terms;
    terms.reserve(funcs_.size());
    std::vector<TermFunction> out;
    out.reserve(funcs_.size());
    for (const Func& f : funcs_) {
      Formula term = f.op < 0 ? Formula::atom("x" + std::to_string(-f.op))
                              : Formula::apply(logic_.signature()[static_cast<std::size_t>(f.op)].name(),
                                               children(f, terms));
      terms.push_back(term);
      out.push_back(TermFunction{arity_, unpack(f.code), Schema{term}, f.size});
    }
    return out;
  }

  std::optional<std::size_t> find(Code code) const {
    const int id = lookup(code);
    if (id < 0) return std::nullopt;
    return static_cast<std::size_t>(id);
  }

  Code pack(const std::vector<TruthValue>& table) const {
    if (table.size() != entries_) throw SemanticError("target table has the wrong number of entries");
    Code code = 0;
    for (std::size_t e = 0; e < entries_; ++e) {
      const int idx = index_of(table[e]);
      if (idx < 0) throw SemanticError(std::string("target uses value ") + table[e].name() + " outside the logic");
      code |= static_cast<Code>(idx) << (2 * e);
    }
    return code;
  }

  std::size_t count() const { return funcs_.size(); }

 private:
  struct Op {
    std::size_t arity;
    std::array<std::uint8_t, 256> unary{};
    std::vector<std::uint8_t> binary;  // 256 x 256
  };

  struct Func {
    Code code;
    std::size_t size;
    int op;  // -1 - p for projection p
    std::array<int, 2> kids{-1, -1};
  };

  int index_of(TruthValue v) const {
    for (std::size_t i = 0; i < k_; ++i) {
      if (logic_.values()[i] == v) return static_cast<int>(i);
    }
    return -1;
  }

  Op make_op(const Connective& c) const {
    Op op;
    op.arity = static_cast<std::size_t>(c.arity());
    auto entry = [&](int digit) { return std::min<int>(digit, static_cast<int>(k_) - 1); };
    if (op.arity == 1) {
      for (int byte = 0; byte < 256; ++byte) {
        int out = 0;
        for (int e = 0; e < 4; ++e) {
          const int in = entry((byte >> (2 * e)) & 3);
          out |= c.index_of(c.at(in)) << (2 * e);
        }
        op.unary[static_cast<std::size_t>(byte)] = static_cast<std::uint8_t>(out);
      }
    } else {
      op.binary.resize(65536);
      for (int a = 0; a < 256; ++a) {
        for (int b = 0; b < 256; ++b) {
          int out = 0;
          for (int e = 0; e < 4; ++e) {
            const int x = entry((a >> (2 * e)) & 3);
            const int y = entry((b >> (2 * e)) & 3);
            out |= c.index_of(c.at(x, y)) << (2 * e);
          }
          op.binary[static_cast<std::size_t>(a * 256 + b)] = static_cast<std::uint8_t>(out);
        }
      }
    }
    return op;
  }

  Code compose1(const Op& op, Code g) const {
    Code out = 0;
    for (int byte = 0; byte < 4; ++byte) {
      out |= static_cast<Code>(op.unary[(g >> (8 * byte)) & 255]) << (8 * byte);
    }
    return out & mask_;
  }

  Code compose2(const Op& op, Code g, Code h) const {
    Code out = 0;
    for (int byte = 0; byte < 4; ++byte) {
      const std::size_t a = (g >> (8 * byte)) & 255;
      const std::size_t b = (h >> (8 * byte)) & 255;
      out |= static_cast<Code>(op.binary[a * 256 + b]) << (8 * byte);
    }
    return out & mask_;
  }

  int lookup(Code code) const {
    if (!dense_.empty()) return dense_[code];
    auto it = sparse_.find(code);
    return it == sparse_.end() ? -1 : it->second;
  }

  void add(Code code, std::size_t size, int op, std::array<int, 2> kids) {
    if (lookup(code) >= 0) return;
    const int id = static_cast<int>(funcs_.size());
    funcs_.push_back(Func{code, size, op, kids});
    if (!dense_.empty()) {
      dense_[code] = id;
    } else {
      sparse_.emplace(code, id);
    }
    if (by_size_.size() <= size) by_size_.resize(size + 1);
    by_size_[size].push_back(id);
    max_size_ = std::max(max_size_, size);
  }

  std::vector<Formula> children(const Func& f, const std::vector<Formula>& terms) const {
    std::vector<Formula> out;
    for (int kid : f.kids) {
      if (kid >= 0) out.push_back(terms[static_cast<std::size_t>(kid)]);
    }
    return out;
  }

  std::vector<TruthValue> unpack(Code code) const {
    std::vector<TruthValue> table;
    table.reserve(entries_);
    for (std::size_t e = 0; e < entries_; ++e) table.push_back(logic_.values()[(code >> (2 * e)) & 3]);
    return table;
  }

  const Logic& logic_;
  int arity_;
  std::size_t k_ = 0;
  std::size_t entries_ = 0;
  Code mask_ = 0;
  std::uint64_t total_ = 0;
  std::vector<Op> ops_;
  std::vector<Func> funcs_;
  std::vector<std::vector<int>> by_size_;
  std::size_t max_size_ = 1;
  std::vector<int> dense_;
  std::unordered_map<Code, int> sparse_;
};

}  // namespace

std::vector<TermFunction> clone_closure(const Logic& logic, int arity) {
  CloneBuilder builder(logic, arity);
  builder.run();
  return builder.materialize();
}

std::optional<Schema> is_definable(const Logic& logic, int arity, const std::vector<TruthValue>& target) {
  CloneBuilder builder(logic, arity);
  const auto code = builder.pack(target);
  builder.run();
  const auto id = builder.find(code);
  if (!id) return std::nullopt;
  return builder.materialize()[*id].witness;
}

std::optional<Schema> is_definable(const Logic& logic, const Connective& target) {
  if (target.domain() != logic.values()) {
    throw SemanticError("target '" + target.name() + "' is not defined over the values of " + logic.name());
  }
  return is_definable(logic, target.arity(), target.table());
}

std::vector<TruthValue> term_table(const Logic& logic, const Schema& witness, int arity) {
  std::vector<TruthValue> out;
  for (TruthValue a : logic.values()) {
    if (arity == 1) {
      out.push_back(evaluate(logic, Valuation({{"x1", a}}), witness.body));
      continue;
    }
    for (TruthValue b : logic.values()) {
      out.push_back(evaluate(logic, Valuation({{"x1", a}, {"x2", b}}), witness.body));
    }
  }
  return out;
}

namespace constraints {

ConstraintPredicate detachment_valid() {
  return {"detachment", [](const Logic& logic, const Connective& cand) {
            const Formula A = Formula::atom("A");
            const Formula B = Formula::atom("B");
            return check_consequence(logic, Sequent{{A, Formula::apply(cand.name(), {A, B})}, B}).valid();
          }};
}

ConstraintPredicate designated_preserving() {
  return {"designated-preserving", [](const Logic& logic, const Connective& cand) {
            for (TruthValue a : logic.designated()) {
              for (TruthValue b : logic.designated()) {
                if (!logic.is_designated(cand(a, b))) return false;
              }
            }
            return true;
          }};
}

ConstraintPredicate classical_on_tf() {
  return {"classical", [](const Logic& logic, const Connective& cand) {
            if (!logic.admits(kTrue) || !logic.admits(kFalse)) return false;
            return cand(kTrue, kTrue) == kTrue && cand(kTrue, kFalse) == kFalse &&
                   cand(kFalse, kTrue) == kTrue && cand(kFalse, kFalse) == kTrue;
          }};
}

ConstraintPredicate sequent(std::string text, bool expect_valid, ConsequenceFlavor flavor) {
  std::string name = (expect_valid ? "valid: " : "invalid: ") + text;
  return {std::move(name), [text = std::move(text), expect_valid, flavor](const Logic& logic, const Connective&) {
            return check_consequence(logic, parse_sequent(logic, text), flavor).valid() == expect_valid;
          }};
}

ConstraintPredicate formula(std::string text, bool expect_valid) {
  std::string name = (expect_valid ? "valid: " : "invalid: ") + text;
  return {std::move(name), [text = std::move(text), expect_valid](const Logic& logic, const Connective&) {
            return check_validity(logic, parse(logic, text)).valid() == expect_valid;
          }};
}

std::optional<ConstraintPredicate> named(std::string_view name) {
  if (name == "detachment" || name == "detachment-valid") return detachment_valid();
  if (name == "designated-preserving") return designated_preserving();
  if (name == "classical" || name == "classical-on-tf") return classical_on_tf();
  return std::nullopt;
}

}  // namespace constraints

Enumeration enumerate_connectives(const Logic& logic, int arity,
                                  const std::vector<ConstraintPredicate>& predicates, bool keep_survivors) {
  if (arity != 1 && arity != 2) throw SemanticError("enumeration supports arity 1 or 2 only");
  const std::size_t k = logic.values().size();
  const std::size_t entries = arity == 1 ? k : k * k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    total *= k;
    if (total > 1'000'000) throw SemanticError("too many candidate tables to enumerate");
  }

  const Notation notation = arity == 1 ? prefix(std::string(kCandidateSymbol))
                                       : infix(std::string(kCandidateSymbol), kConditionalPrecedence, Assoc::none);
  Enumeration result;
  std::vector<std::size_t> digits(entries, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<TruthValue> table;
    table.reserve(entries);
    for (std::size_t d : digits) table.push_back(logic.values()[d]);
    Connective cand(std::string(kCandidateName), notation, arity, logic.values(), std::move(table));
    const Logic extended = logic.with(cand);
    bool ok = true;
    for (const ConstraintPredicate& p : predicates) {
      if (!p.test(extended, cand)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++result.count;
      if (keep_survivors) result.survivors.push_back(std::move(cand));
    }
    // Last entry varies fastest, so survivors come out in lexicographic order.
    for (std::size_t i = entries; i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
  return result;
}

DefinabilityTarget resolve_target(const Logic& logic, std::string_view text) {
  const std::string name = text == "consistency" ? "cons" : std::string(text);
  const Logic& toolbox = builtin_logic("toolbox");
  DefinabilityTarget t;
  t.label = name;
  if (const Connective* c = toolbox.find(name) ? toolbox.find(name) : toolbox.find_symbol(name)) {
    t.table = c->table();
    t.label = c->name();
  } else {
    for (char ch : name) {
      const auto v = TruthValue::parse(std::string_view(&ch, 1));
      if (!v) throw ConfigError("definable: target '" + name + "' is neither a toolbox connective nor a table");
      t.table.push_back(*v);
    }
  }
  const std::size_t k = logic.values().size();
  if (t.table.size() == k) {
    t.arity = 1;
  } else if (t.table.size() == k * k) {
    t.arity = 2;
  } else {
    throw ConfigError("definable: target table has " + std::to_string(t.table.size()) + " entries");
  }
  return t;
}

Logic borrow_from_toolbox(Logic logic, const std::vector<std::string>& names) {
  const Logic& toolbox = builtin_logic("toolbox");
  for (const std::string& n : names) {
    const Connective& c = toolbox.resolve(n);
    if (!logic.find(c.name())) logic = logic.with(c);
  }
  return logic;
}

}  // namespace mvlab
