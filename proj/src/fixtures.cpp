#include "mvlab/fixtures.hpp"

#include <algorithm>
#include <cctype>

#include "mvlab/error.hpp"

namespace mvlab {

std::vector<TruthValue> three_values() { return {kTrue, kBoth, kFalse}; }

Connective make_connective(std::string name, Notation notation, int arity,
                           const std::vector<TruthValue>& domain, std::string_view letters) {
  std::vector<TruthValue> table;
  table.reserve(letters.size());
  for (char c : letters) {
    auto v = TruthValue::parse(std::string_view(&c, 1));
    if (!v) throw SemanticError(std::string("bad table letter '") + c + "' for " + name);
    table.push_back(*v);
  }
  return Connective(std::move(name), std::move(notation), arity, domain, std::move(table));
}

Notation prefix(std::string symbol) {
  return Notation{std::move(symbol), Fixity::prefix, 0, Assoc::left};
}

Notation infix(std::string symbol, int precedence, Assoc assoc) {
  return Notation{std::move(symbol), Fixity::infix, precedence, assoc};
}

namespace connectives {

namespace {
Notation conditional(std::string symbol) {
  return infix(std::move(symbol), kConditionalPrecedence, Assoc::none);
}
}  // namespace

// Rows follow the printed tables: T, B, F (first argument major).
Connective lp_negation() { return make_connective("lp_not", prefix("~"), 1, three_values(), "FBT"); }
Connective sette_negation() { return make_connective("p1_not", prefix("-"), 1, three_values(), "FTT"); }
Connective consistency() { return make_connective("cons", prefix("o"), 1, three_values(), "TFT"); }

Connective lattice_conjunction() {
  return make_connective("and", infix("&", kConjunctionPrecedence), 2, three_values(), "TBFBBFFFF");
}
Connective lattice_disjunction() {
  return make_connective("or", infix("|", kDisjunctionPrecedence), 2, three_values(), "TTTTBBTBF");
}
Connective e_conditional() {
  return make_connective("imp_e", conditional(">"), 2, three_values(), "BFFBBFBBB");
}
Connective e_biconditional(const Connective& conj) {
  return symmetric_expansion("iff_e", conditional("<>"), e_conditional(), conj);
}
Connective p_conjunction() {
  return make_connective("and", infix("&", kConjunctionPrecedence), 2, three_values(), "TTFTTFFFF");
}
Connective p_disjunction() {
  return make_connective("or", infix("|", kDisjunctionPrecedence), 2, three_values(), "TTTTTTTTF");
}
Connective p_conditional(std::string symbol) {
  return make_connective("imp_p", conditional(std::move(symbol)), 2, three_values(), "TTFTTFTTT");
}
Connective w_conditional() {
  return make_connective("imp_w", conditional(">w"), 2, three_values(), "TBFTBFBBB");
}
Connective bl_conditional() {
  return make_connective("imp_bl", conditional(">bl"), 2, three_values(), "TFFTBFBBB");
}
Connective f_conditional() {
  return make_connective("imp_f", conditional(">f"), 2, three_values(), "BBFBBFBBB");
}
Connective lp_material_conditional() {
  return make_connective("imp_mat", conditional(">"), 2, three_values(), "TBFTBBTTT");
}

}  // namespace connectives

namespace {

std::vector<Logic> make_builtins() {
  using namespace connectives;
  const std::vector<TruthValue> v3 = three_values();
  const std::vector<TruthValue> d3 = {kTrue, kBoth};
  std::vector<Logic> out;

  out.emplace_back("LP", v3, d3,
                   std::vector<Connective>{lp_negation(), lattice_conjunction(), lattice_disjunction(),
                                           lp_material_conditional()});
  out.emplace_back("M3V", v3, d3,
                   std::vector<Connective>{lp_negation(), lattice_conjunction(), lattice_disjunction(),
                                           e_conditional(), e_biconditional(lattice_conjunction())});
  out.emplace_back("CSL3", v3, d3,
                   std::vector<Connective>{sette_negation(), lattice_conjunction(), lattice_disjunction()});
  out.emplace_back("cCSL3", v3, d3,
                   std::vector<Connective>{sette_negation(), lattice_conjunction(), lattice_disjunction(),
                                           e_conditional(), e_biconditional(lattice_conjunction())});

  // C0.2 houses Mortensen's middle value as the empty set; only {1} is designated.
  const std::vector<TruthValue> vc = {kTrue, kNeither, kFalse};
  out.emplace_back(
      "C0.2", vc, std::vector<TruthValue>{kTrue},
      std::vector<Connective>{
          make_connective("lp_not", prefix("~"), 1, vc, "FNT"),
          make_connective("and", infix("&", kConjunctionPrecedence), 2, vc, "TTFTTFFFF"),
          make_connective("or", infix("|", kDisjunctionPrecedence), 2, vc, "TTTTTTTTF"),
          make_connective("imp_p", infix(">", kConditionalPrecedence, Assoc::none), 2, vc, "TTFTTFTTT")});

  out.emplace_back("P1", v3, d3,
                   std::vector<Connective>{sette_negation(), p_conjunction(), p_disjunction(), p_conditional()});
  out.emplace_back("P2", v3, d3,
                   std::vector<Connective>{lp_negation(), p_conjunction(), p_disjunction(), p_conditional()});
  out.emplace_back("cP2", v3, d3,
                   std::vector<Connective>{lp_negation(), p_conjunction(), p_disjunction(), e_conditional(),
                                           e_biconditional(p_conjunction())});
  out.emplace_back("toolbox", v3, d3,
                   std::vector<Connective>{lp_negation(), sette_negation(), consistency(), lattice_conjunction(),
                                           lattice_disjunction(), e_conditional(), p_conditional(">>"),
                                           w_conditional(), bl_conditional(), f_conditional()});
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const std::vector<Logic>& builtin_logics() {
  static const std::vector<Logic> logics = make_builtins();
  return logics;
}

const Logic& builtin_logic(std::string_view name) {
  const std::string wanted = lower(name);
  for (const Logic& l : builtin_logics()) {
    if (lower(l.name()) == wanted) return l;
  }
  throw SemanticError("no builtin logic named '" + std::string(name) + "'");
}

TruthValue dunn_conditional(TruthValue a, TruthValue b) {
  if (a == kNeither || b == kNeither) {
    throw SemanticError("the E-conditional clauses are stated for T, B and F only");
  }
  const bool positive = !a.has_true() || !b.has_false() || (a.has_false() && b.has_true());
  const bool negative = (a.has_true() || a.has_false()) && (b.has_true() || b.has_false());
  return TruthValue(positive, negative);
}

}  // namespace mvlab
