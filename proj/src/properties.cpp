#include "mvlab/properties.hpp"

#include <algorithm>

#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"

namespace mvlab {

namespace {

struct ThesisName {
  Thesis thesis;
  std::string_view name;
};

constexpr ThesisName kNames[] = {
    {Thesis::AT, "AT"},     {Thesis::ATv, "ATv"},     {Thesis::BT, "BT"},   {Thesis::BTv, "BTv"},
    {Thesis::CBT, "CBT"},   {Thesis::CBTv, "CBTv"},   {Thesis::FT, "FT"},   {Thesis::FTv, "FTv"},
    {Thesis::CFT, "CFT"},   {Thesis::CFTv, "CFTv"},   {Thesis::NSym, "NSym"}, {Thesis::UA, "UA"},
    {Thesis::AST, "AST"},   {Thesis::AbP, "AbP"},     {Thesis::Cent1, "Cent1"}, {Thesis::Cent2, "Cent2"},
    {Thesis::MS, "MS"},
};

// Builds schemas from role names.
struct Builder {
  const Roles& roles;

  static Formula atom(const char* name) { return Formula::atom(name); }
  Formula neg(Formula x) const { return Formula::apply(roles.negation, {std::move(x)}); }
  Formula imp(Formula x, Formula y) const { return Formula::apply(roles.conditional, {std::move(x), std::move(y)}); }
  Formula conj(Formula x, Formula y) const { return Formula::apply(roles.conjunction, {std::move(x), std::move(y)}); }
};

bool valid_in(const Logic& logic, const Formula& f) { return check_validity(logic, f).valid(); }

}  // namespace

const std::vector<Thesis>& all_theses() {
  static const std::vector<Thesis> theses = [] {
    std::vector<Thesis> out;
    for (const ThesisName& n : kNames) out.push_back(n.thesis);
    return out;
  }();
  return theses;
}

std::string_view to_string(Thesis thesis) {
  for (const ThesisName& n : kNames) {
    if (n.thesis == thesis) return n.name;
  }
  return "?";
}

std::optional<Thesis> parse_thesis(std::string_view name) {
  for (const ThesisName& n : kNames) {
    if (n.name == name) return n.thesis;
  }
  return std::nullopt;
}

Roles resolve_roles(const Logic& logic, std::string_view negation, std::string_view conditional) {
  const Connective& n = logic.resolve(negation);
  const Connective& c = logic.resolve(conditional);
  if (n.arity() != 1) throw SemanticError("negation role '" + n.name() + "' is not unary");
  if (c.arity() != 2) throw SemanticError("conditional role '" + c.name() + "' is not binary");
  Roles roles{n.name(), c.name(), ""};
  if (const Connective* k = logic.find("and"); k && k->arity() == 2) roles.conjunction = k->name();
  return roles;
}

const Connective* find_biconditional(const Logic& logic, const Roles& roles) {
  if (roles.conjunction.empty()) return nullptr;
  const Connective expansion =
      symmetric_expansion("_iff", infix("<_>", kConditionalPrecedence, Assoc::none),
                          logic.connective(roles.conditional), logic.connective(roles.conjunction));
  for (const Connective& c : logic.signature()) {
    if (c.name() != roles.conditional && c.same_function(expansion)) return &c;
  }
  return nullptr;
}

std::optional<Schema> thesis_schema(const Logic& logic, Thesis thesis, const Roles& roles) {
  const Builder b{roles};
  const Formula A = Builder::atom("A");
  const Formula B = Builder::atom("B");
  const bool has_conj = !roles.conjunction.empty();
  switch (thesis) {
    case Thesis::AT: return Schema{b.neg(b.imp(A, b.neg(A)))};
    case Thesis::ATv: return Schema{b.neg(b.imp(b.neg(A), A))};
    case Thesis::BT: return Schema{b.imp(b.imp(A, B), b.neg(b.imp(A, b.neg(B))))};
    case Thesis::BTv: return Schema{b.imp(b.imp(A, b.neg(B)), b.neg(b.imp(A, B)))};
    case Thesis::CBT: return Schema{b.imp(b.neg(b.imp(A, b.neg(B))), b.imp(A, B))};
    case Thesis::CBTv: return Schema{b.imp(b.neg(b.imp(A, B)), b.imp(A, b.neg(B)))};
    case Thesis::FT: return Schema{b.imp(b.imp(b.neg(A), B), b.neg(b.imp(A, B)))};
    case Thesis::FTv: return Schema{b.imp(b.imp(A, B), b.neg(b.imp(b.neg(A), B)))};
    case Thesis::CFT: return Schema{b.imp(b.neg(b.imp(A, B)), b.imp(b.neg(A), B))};
    case Thesis::CFTv: return Schema{b.imp(b.neg(b.imp(b.neg(A), B)), b.imp(A, B))};
    case Thesis::NSym: return Schema{b.imp(b.imp(A, B), b.imp(B, A))};
    case Thesis::UA: return Schema{b.neg(b.imp(A, b.neg(B)))};
    case Thesis::AST:
      if (!has_conj) return std::nullopt;
      return Schema{b.neg(b.conj(b.imp(A, B), b.imp(b.neg(A), B)))};
    case Thesis::AbP:
      if (!has_conj) return std::nullopt;
      return Schema{b.neg(b.conj(b.imp(A, B), b.imp(A, b.neg(B))))};
    case Thesis::Cent1: return Schema{b.neg(b.imp(A, A))};
    case Thesis::Cent2: {
      const Connective* iff = find_biconditional(logic, roles);
      if (!iff) return std::nullopt;
      return Schema{Formula::apply(iff->name(), {b.neg(b.imp(A, A)), b.imp(A, A)})};
    }
    case Thesis::MS: return Schema{b.imp(b.imp(b.imp(A, B), B), A)};
  }
  return std::nullopt;
}

Verdict check_schema(const Logic& logic, const Schema& schema) {
  std::map<std::string, Formula> fresh;
  for (const std::string& m : schema.metavariables()) fresh.emplace(m, Formula::atom(m));
  return check_validity(logic, instantiate(schema, fresh));
}

bool ClassificationReport::valid(Thesis t) const {
  auto it = verdicts.find(t);
  return it != verdicts.end() && it->second.valid();
}

bool ClassificationReport::invalid(Thesis t) const {
  auto it = verdicts.find(t);
  return it != verdicts.end() && !it->second.valid();
}

bool ClassificationReport::connexive_core() const {
  return valid(Thesis::AT) && valid(Thesis::ATv) && valid(Thesis::BT) && valid(Thesis::BTv) &&
         invalid(Thesis::NSym);
}

ClassificationReport classify(const Logic& logic, std::string_view negation, std::string_view conditional) {
  ClassificationReport r;
  r.logic = logic.name();
  r.roles = resolve_roles(logic, negation, conditional);
  for (Thesis t : all_theses()) {
    if (auto schema = thesis_schema(logic, t, r.roles)) r.verdicts.emplace(t, check_schema(logic, *schema));
  }

  r.connexive = r.connexive_core();
  r.hyper_connexive = r.connexive && (r.valid(Thesis::CBT) || r.valid(Thesis::CBTv));
  r.nexive = r.valid(Thesis::AT) && r.valid(Thesis::ATv) && r.valid(Thesis::FT) && r.valid(Thesis::FTv) &&
             r.invalid(Thesis::NSym);
  r.hyper_nexive = r.nexive && (r.valid(Thesis::CFT) || r.valid(Thesis::CFTv));
  r.ultra_abelardian = r.valid(Thesis::UA);

  const Builder b{r.roles};
  const Formula A = Formula::atom("A");
  std::vector<Formula> candidates{b.imp(A, A)};
  if (!r.roles.conjunction.empty()) candidates.push_back(b.imp(b.conj(A, b.neg(A)), A));
  for (Thesis t : all_theses()) {
    if (r.valid(t)) candidates.push_back(thesis_schema(logic, t, r.roles)->body);
  }
  for (const Formula& x : candidates) {
    if (valid_in(logic, x) && valid_in(logic, b.neg(x))) {
      r.contradictory = true;
      r.contradiction_witness = x;
      break;
    }
  }
  return r;
}

std::vector<Connective> enumerate_tspn(const std::vector<TruthValue>& values,
                                       const std::vector<TruthValue>& designated) {
  auto pos = [&](TruthValue v) {
    return std::find(values.begin(), values.end(), v) - values.begin();
  };
  if (pos(kTrue) == static_cast<long>(values.size()) || pos(kFalse) == static_cast<long>(values.size())) {
    throw SemanticError("standard negations need both T and F among the values");
  }

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != kTrue && values[i] != kFalse) free.push_back(i);
  }

  std::vector<Connective> out;
  std::vector<std::size_t> choice(free.size(), 0);
  while (true) {
    std::vector<TruthValue> table(values.size());
    table[static_cast<std::size_t>(pos(kTrue))] = kFalse;
    table[static_cast<std::size_t>(pos(kFalse))] = kTrue;
    for (std::size_t k = 0; k < free.size(); ++k) table[free[k]] = values[choice[k]];

    std::string letters;
    for (TruthValue v : table) letters += v.name();
    Connective candidate("neg_" + letters, prefix("!" + letters), 1, values, table);
    const Logic probe("probe", values, designated, {candidate});
    const Formula A = Formula::atom("A");
    const Sequent explosion{{A, Formula::apply(candidate.name(), {A})}, Formula::atom("B")};
    if (!check_consequence(probe, explosion).valid()) {
      for (const Logic& l : builtin_logics()) {
        auto known = std::find_if(l.signature().begin(), l.signature().end(),
                                  [&](const Connective& c) { return c.same_function(candidate); });
        if (known != l.signature().end()) {
          candidate = *known;
          break;
        }
      }
      out.push_back(std::move(candidate));
    }

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == values.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

StabilityReport check_stability(const Logic& logic, std::string_view conditional) {
  StabilityReport report;
  report.conditional = logic.resolve(conditional).name();
  report.stable = true;
  for (const Connective& neg : enumerate_tspn(logic.values(), logic.designated())) {
    const Connective* present = nullptr;
    for (const Connective& c : logic.signature()) {
      if (c.same_function(neg)) {
        present = &c;
        break;
      }
    }
    Logic extended = logic;
    std::string name;
    if (present) {
      name = present->name();
    } else {
      Connective added = neg;
      if (logic.find(added.name()) || logic.find_symbol(added.symbol())) {
        std::string letters;
        for (TruthValue v : neg.table()) letters += v.name();
        added = neg.renamed("neg_" + letters, "!" + letters);
      }
      name = added.name();
      extended = logic.with(added);
    }
    ClassificationReport r = classify(extended, name, report.conditional);
    if (!r.connexive_core()) {
      report.stable = false;
      for (Thesis t : {Thesis::AT, Thesis::ATv, Thesis::BT, Thesis::BTv}) {
        if (!r.valid(t)) report.failures.push_back({name, t, r.verdicts.at(t)});
      }
      if (!r.invalid(Thesis::NSym)) report.failures.push_back({name, Thesis::NSym, r.verdicts.at(Thesis::NSym)});
    }
    report.members.emplace_back(present ? *present : neg, std::move(r));
  }
  return report;
}

std::pair<Verdict, Verdict> second_theses(const Logic& logic, std::string_view negation,
                                          std::string_view conditional) {
  const Roles roles = resolve_roles(logic, negation, conditional);
  if (roles.conjunction.empty()) throw SemanticError("logic '" + logic.name() + "' has no conjunction");
  return {check_schema(logic, *thesis_schema(logic, Thesis::AST, roles)),
          check_schema(logic, *thesis_schema(logic, Thesis::AbP, roles))};
}

CenteringReport centering_suite(const Logic& logic, std::string_view negation, std::string_view conditional) {
  const Roles roles = resolve_roles(logic, negation, conditional);
  const Builder b{roles};
  const Formula A = Formula::atom("A");
  const Formula self = b.imp(A, A);
  CenteringReport r;
  r.cent1 = check_schema(logic, *thesis_schema(logic, Thesis::Cent1, roles));
  if (auto s = thesis_schema(logic, Thesis::Cent2, roles)) r.cent2 = check_schema(logic, *s);
  r.forward = check_validity(logic, b.imp(b.neg(self), self));
  r.backward = check_validity(logic, b.imp(self, b.neg(self)));
  r.meyer_slaney = check_schema(logic, *thesis_schema(logic, Thesis::MS, roles));
  return r;
}

}  // namespace mvlab
