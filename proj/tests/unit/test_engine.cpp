#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "mvlab/engine.hpp"
#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"
#include "oracle.hpp"

using namespace mvlab;

namespace {

Valuation val(std::map<std::string, TruthValue> m) { return Valuation(std::move(m)); }

std::string status(const Verdict& v) { return std::string(to_string(v.status)); }

}  // namespace

TEST_CASE("evaluate examples") {
  const Logic& m3v = builtin_logic("M3V");
  const Formula at = parse(m3v, "~(A > ~A)");
  CHECK(evaluate(m3v, val({{"A", kTrue}}), at) == kTrue);
  CHECK(evaluate(m3v, val({{"A", kBoth}}), at) == kBoth);
  const Logic& ccsl3 = builtin_logic("cCSL3");
  CHECK(evaluate(ccsl3, val({{"A", kFalse}}), parse(ccsl3, "-(A > -A)")) == kTrue);
  CHECK_THROWS_AS(evaluate(m3v, val({{"B", kTrue}}), at), SemanticError);
  CHECK_THROWS_AS(evaluate(m3v, val({{"A", kTrue}}), Formula::apply("p1_not", {Formula::atom("A")})),
                  SemanticError);
  CHECK(val({{"B", kTrue}, {"A", kFalse}}).str() == "A=F B=T");
}

TEST_CASE("validity examples") {
  const Logic& m3v = builtin_logic("M3V");
  CHECK(check_validity(m3v, parse(m3v, "~(A > B)")).status == Status::valid_sometimes_false);
  CHECK(check_validity(builtin_logic("cCSL3"), parse(builtin_logic("cCSL3"), "-(A > B)")).status ==
        Status::valid_just_true);
  const Verdict ms = check_validity(m3v, parse(m3v, "((A > B) > B) > A"));
  CHECK(ms.status == Status::invalid);
  REQUIRE(ms.witness);
  CHECK(*ms.witness == val({{"A", kFalse}, {"B", kTrue}}));
}

TEST_CASE("sometimes-false witnesses contain 0 and the first is reported") {
  const Logic& m3v = builtin_logic("M3V");
  const Formula f = parse(m3v, "~(A > ~A)");
  const Verdict v = check_validity(m3v, f);
  REQUIRE(v.witness);
  CHECK(*v.witness == val({{"A", kBoth}}));
  CHECK(evaluate(m3v, *v.witness, f).has_false());
}

TEST_CASE("verdicts agree with the oracle on random formulas") {
  std::mt19937 rng(99);
  const std::vector<std::pair<std::string, oracle::Matrix>> pairs = {
      {"M3V", oracle::m3v()}, {"cCSL3", oracle::ccsl3()}, {"cP2", oracle::cp2()}, {"C0.2", oracle::c02()}};
  for (const auto& [name, m] : pairs) {
    const Logic& logic = builtin_logic(name);
    for (int i = 0; i < 200; ++i) {
      const Formula f = gen::formula(logic.restricted_to([&] {
        std::vector<std::string> names;
        for (const auto& [op, t] : m.ops) names.push_back(op);
        return names;
      }()),
                                     rng, 4);
      const Verdict v = check_validity(logic, f);
      CAPTURE(print(logic, f));
      CHECK(status(v) == oracle::verdict(m, f));
      if (v.status == Status::invalid) {
        REQUIRE(v.witness);
        CHECK_FALSE(logic.is_designated(evaluate(logic, *v.witness, f)));
      }
      // Determinism.
      CHECK(check_validity(logic, f).witness == v.witness);
    }
  }
}

TEST_CASE("witness is the first refutation in enumeration order") {
  const Logic& m3v = builtin_logic("M3V");
  const Formula f = parse(m3v, "A > B");
  const auto all = countermodels(m3v, f);
  const oracle::Matrix m = oracle::m3v();
  std::vector<Valuation> expected;
  for (const auto& s : oracle::assignments(m, {"A", "B"})) {
    if (!oracle::designated(m, oracle::eval(m, f, s))) {
      Valuation v;
      for (const auto& [a, c] : s) v.set(a, *TruthValue::parse(std::string_view(&c, 1)));
      expected.push_back(v);
    }
  }
  CHECK(all == expected);
  CHECK(check_validity(m3v, f).witness == expected.front());
}

TEST_CASE("consequence examples") {
  CHECK(check_consequence(builtin_logic("M3V"), parse_sequent(builtin_logic("M3V"), "A, A > B => B")).valid());
  const Logic& csl3 = builtin_logic("CSL3");
  const Verdict gap = check_consequence(csl3, parse_sequent(csl3, "A, -A | B => B"));
  CHECK(gap.status == Status::invalid);
  CHECK(*gap.witness == val({{"A", kBoth}, {"B", kFalse}}));
  const Verdict restricted = check_consequence(csl3, parse_sequent(csl3, "A, -A | B => B | (A & -A)"));
  CHECK(restricted.status == Status::valid_just_true);
}

TEST_CASE("consequence flavors") {
  const Logic& m3v = builtin_logic("M3V");
  // A = B designates both premises under truth preservation only.
  const Sequent explosion = parse_sequent(m3v, "A, ~A => B");
  CHECK_FALSE(check_consequence(m3v, explosion, ConsequenceFlavor::truth_preservation).valid());
  CHECK(check_consequence(m3v, explosion, ConsequenceFlavor::exact_truth).valid());
  CHECK(check_consequence(m3v, explosion, ConsequenceFlavor::non_falsity).valid());
  // T | x = T, so disjunction introduction survives exact truth.
  const Sequent weak = parse_sequent(m3v, "A => A | B");
  CHECK(check_consequence(m3v, weak, ConsequenceFlavor::exact_truth).valid());
  // Under exact truth, A > A is not a theorem: its value is never T.
  const Verdict exact = check_consequence(m3v, parse_sequent(m3v, "=> A > A"), ConsequenceFlavor::exact_truth);
  CHECK_FALSE(exact.valid());
  CHECK(parse_flavor("exact") == ConsequenceFlavor::exact_truth);
  CHECK(parse_flavor("non-falsity") == ConsequenceFlavor::non_falsity);
  CHECK_FALSE(parse_flavor("bogus").has_value());
}

TEST_CASE("validity matches empty-premise consequence") {
  std::mt19937 rng(5);
  for (const Logic& logic : builtin_logics()) {
    for (int i = 0; i < 60; ++i) {
      const Formula f = gen::formula(logic, rng, 4);
      CHECK(check_validity(logic, f).valid() == check_consequence(logic, Sequent{{}, f}).valid());
    }
  }
}

TEST_CASE("just-true formulas are valid under truth and non-falsity readings") {
  std::mt19937 rng(11);
  for (const Logic& logic : builtin_logics()) {
    for (int i = 0; i < 80; ++i) {
      const Formula f = gen::formula(logic, rng, 4);
      if (check_validity(logic, f).status != Status::valid_just_true) continue;
      CHECK(check_consequence(logic, Sequent{{}, f}, ConsequenceFlavor::truth_preservation).valid());
      CHECK(check_consequence(logic, Sequent{{}, f}, ConsequenceFlavor::non_falsity).valid());
    }
  }
}

TEST_CASE("deduction examples") {
  const Logic& ccsl3 = builtin_logic("cCSL3");
  auto pair = [&](const Logic& l, const char* p, const char* c) {
    auto [e, t] = check_deduction(l, parse(l, p), parse(l, c), ">");
    return std::make_pair(e.valid(), t.valid());
  };
  CHECK(pair(ccsl3, "-(A > A)", "A > A") == std::make_pair(true, false));
  CHECK(pair(builtin_logic("M3V"), "A", "A") == std::make_pair(true, true));
  CHECK(pair(ccsl3, "A", "--A") == std::make_pair(false, false));
  CHECK_THROWS_AS(check_deduction(ccsl3, parse(ccsl3, "A"), parse(ccsl3, "A"), "nope"), SemanticError);
}

TEST_CASE("C0.2 is explosive") {
  const Logic& c02 = builtin_logic("C0.2");
  CHECK(check_consequence(c02, parse_sequent(c02, "A, ~A => B")).valid());
  const Formula a = Formula::atom("A"), b = Formula::atom("B");
  CHECK(oracle::entails(oracle::c02(), {a, Formula::apply("lp_not", {a})}, b));
}
