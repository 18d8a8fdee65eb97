#include "mvlab/engine.hpp"

#include <set>
#include <stdexcept>

#include "mvlab/error.hpp"

namespace mvlab {

std::optional<TruthValue> Valuation::get(const std::string& atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

std::string Valuation::str() const {
  std::string out;
  for (const auto& [atom, v] : assignment_) {
    if (!out.empty()) out += ' ';
    out += atom + "=" + v.name();
  }
  return out;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::valid_just_true: return "valid-just-true";
    case Status::valid_sometimes_false: return "valid-sometimes-false";
    case Status::invalid: return "invalid";
  }
  return "?";
}

std::string_view to_string(ConsequenceFlavor flavor) {
  switch (flavor) {
    case ConsequenceFlavor::truth_preservation: return "truth-preservation";
    case ConsequenceFlavor::exact_truth: return "exact-truth";
    case ConsequenceFlavor::non_falsity: return "non-falsity";
  }
  return "?";
}

std::optional<ConsequenceFlavor> parse_flavor(std::string_view text) {
  if (text == "truth" || text == "truth-preservation") return ConsequenceFlavor::truth_preservation;
  if (text == "exact" || text == "exact-truth") return ConsequenceFlavor::exact_truth;
  if (text == "non-falsity" || text == "nonfalsity") return ConsequenceFlavor::non_falsity;
  return std::nullopt;
}

namespace {

// Postfix program over atom slots and connective pointers.
class Program {
 public:
  Program(const Logic& logic, const Formula& formula, const std::vector<std::string>& atoms) {
    compile(logic, formula, atoms);
  }

  // `slots` holds domain indices of the atom values.
  int run(const std::vector<int>& slots, std::vector<int>& stack) const {
    stack.clear();
    for (const Step& s : steps_) {
      if (!s.op) {
        stack.push_back(slots[static_cast<std::size_t>(s.slot)]);
      } else if (s.op->arity() == 1) {
        stack.back() = index(*s.op, s.op->at(stack.back()));
      } else {
        int b = stack.back();
        stack.pop_back();
        stack.back() = index(*s.op, s.op->at(stack.back(), b));
      }
    }
    return stack.back();
  }

 private:
  struct Step {
    const Connective* op = nullptr;
    int slot = 0;
  };

  static int index(const Connective& c, TruthValue v) { return c.index_of(v); }

  void compile(const Logic& logic, const Formula& f, const std::vector<std::string>& atoms) {
    if (f.is_atom()) {
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i] == f.label()) {
          steps_.push_back({nullptr, static_cast<int>(i)});
          return;
        }
      }
      throw SemanticError("atom '" + f.label() + "' has no value");
    }
    const Connective& c = logic.connective(f.label());
    if (static_cast<std::size_t>(c.arity()) != f.children().size()) {
      throw SemanticError("connective '" + c.name() + "' applied to the wrong number of arguments");
    }
    for (const Formula& child : f.children()) compile(logic, child, atoms);
    steps_.push_back({&c, 0});
  }

  std::vector<Step> steps_;
};

// Enumerates index vectors in odometer order (last position fastest).
template <typename Visit>
void odometer(std::size_t positions, std::size_t base, Visit&& visit) {
  std::vector<int> digits(positions, 0);
  while (true) {
    if (!visit(digits)) return;
    std::size_t i = positions;
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++digits[i]) < base) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (positions == 0) return;
  }
}

std::vector<std::string> sorted_atoms(const std::vector<Formula>& formulas) {
  std::set<std::string> all;
  for (const Formula& f : formulas) {
    auto a = f.atoms();
    all.insert(a.begin(), a.end());
  }
  return {all.begin(), all.end()};
}

Valuation make_valuation(const Logic& logic, const std::vector<std::string>& atoms,
                         const std::vector<int>& digits) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    v.set(atoms[i], logic.values()[static_cast<std::size_t>(digits[i])]);
  }
  return v;
}

void self_check_refutation(const Logic& logic, const Formula& formula, const Valuation& witness) {
  if (logic.is_designated(evaluate(logic, witness, formula))) {
    throw std::logic_error("countermodel does not refute " + print(logic, formula));
  }
}

bool holds(ConsequenceFlavor flavor, const Logic& logic, TruthValue v) {
  switch (flavor) {
    case ConsequenceFlavor::truth_preservation: return logic.is_designated(v);
    case ConsequenceFlavor::exact_truth: return v == kTrue;
    case ConsequenceFlavor::non_falsity: return !v.has_false();
  }
  return false;
}

}  // namespace

TruthValue evaluate(const Logic& logic, const Valuation& valuation, const Formula& formula) {
  if (formula.is_atom()) {
    auto v = valuation.get(formula.label());
    if (!v) throw SemanticError("atom '" + formula.label() + "' has no value");
    if (!logic.admits(*v)) {
      throw SemanticError(std::string("value ") + v->name() + " is not admissible in " + logic.name());
    }
    return *v;
  }
  const Connective& c = logic.connective(formula.label());
  std::vector<TruthValue> args;
  args.reserve(formula.children().size());
  for (const Formula& child : formula.children()) args.push_back(evaluate(logic, valuation, child));
  return c.apply(args);
}

void for_each_valuation(const Logic& logic, const std::vector<std::string>& atoms,
                        const std::function<bool(const Valuation&)>& visit) {
  odometer(atoms.size(), logic.values().size(),
           [&](const std::vector<int>& digits) { return visit(make_valuation(logic, atoms, digits)); });
}

Verdict check_validity(const Logic& logic, const Formula& formula) {
  const std::vector<std::string> atoms = sorted_atoms({formula});
  const Program program(logic, formula, atoms);
  std::vector<int> stack;
  std::optional<Valuation> refutation;
  std::optional<Valuation> falsity;
  odometer(atoms.size(), logic.values().size(), [&](const std::vector<int>& digits) {
    const TruthValue v = logic.values()[static_cast<std::size_t>(program.run(digits, stack))];
    if (!logic.is_designated(v)) {
      refutation = make_valuation(logic, atoms, digits);
      return false;
    }
    if (v != kTrue && !falsity) falsity = make_valuation(logic, atoms, digits);
    return true;
  });
  if (refutation) {
    self_check_refutation(logic, formula, *refutation);
    return {Status::invalid, refutation};
  }
  if (falsity) return {Status::valid_sometimes_false, falsity};
  return {Status::valid_just_true, std::nullopt};
}

std::vector<Valuation> countermodels(const Logic& logic, const Formula& formula) {
  const std::vector<std::string> atoms = sorted_atoms({formula});
  const Program program(logic, formula, atoms);
  std::vector<int> stack;
  std::vector<Valuation> out;
  odometer(atoms.size(), logic.values().size(), [&](const std::vector<int>& digits) {
    const TruthValue v = logic.values()[static_cast<std::size_t>(program.run(digits, stack))];
    if (!logic.is_designated(v)) out.push_back(make_valuation(logic, atoms, digits));
    return true;
  });
  return out;
}

Verdict check_consequence(const Logic& logic, const Sequent& sequent, ConsequenceFlavor flavor) {
  std::vector<Formula> all = sequent.premises;
  all.push_back(sequent.conclusion);
  const std::vector<std::string> atoms = sorted_atoms(all);
  std::vector<Program> premises;
  premises.reserve(sequent.premises.size());
  for (const Formula& p : sequent.premises) premises.emplace_back(logic, p, atoms);
  const Program conclusion(logic, sequent.conclusion, atoms);

  std::vector<int> stack;
  std::optional<Valuation> refutation;
  auto value = [&](const Program& p, const std::vector<int>& digits) {
    return logic.values()[static_cast<std::size_t>(p.run(digits, stack))];
  };
  odometer(atoms.size(), logic.values().size(), [&](const std::vector<int>& digits) {
    for (const Program& p : premises) {
      if (!holds(flavor, logic, value(p, digits))) return true;
    }
    if (holds(flavor, logic, value(conclusion, digits))) return true;
    refutation = make_valuation(logic, atoms, digits);
    return false;
  });
  if (!refutation) return {Status::valid_just_true, std::nullopt};

  for (const Formula& p : sequent.premises) {
    if (!holds(flavor, logic, evaluate(logic, *refutation, p))) {
      throw std::logic_error("countermodel falsifies a premise");
    }
  }
  if (holds(flavor, logic, evaluate(logic, *refutation, sequent.conclusion))) {
    throw std::logic_error("countermodel satisfies the conclusion");
  }
  return {Status::invalid, refutation};
}

std::pair<Verdict, Verdict> check_deduction(const Logic& logic, const Formula& premise,
                                            const Formula& conclusion, std::string_view conditional) {
  const Connective& cond = logic.resolve(conditional);
  if (cond.arity() != 2) throw SemanticError("'" + cond.name() + "' is not binary");
  Verdict entailment = check_consequence(logic, Sequent{{premise}, conclusion});
  Verdict theorem = check_validity(logic, Formula::apply(cond.name(), {premise, conclusion}));
  return {std::move(entailment), std::move(theorem)};
}

}  // namespace mvlab
