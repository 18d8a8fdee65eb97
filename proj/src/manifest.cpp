#include "mvlab/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mvlab/config.hpp"
#include "mvlab/definability.hpp"
#include "mvlab/engine.hpp"
#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"
#include "mvlab/properties.hpp"

namespace mvlab {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds = {"table",     "dunn-clauses", "validity",  "consequence",
                                      "deduction", "classify",     "tspn",      "stability",
                                      "definable", "closure",      "fragment-agreement"};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string names(const std::vector<TruthValue>& vs) {
  std::string s;
  for (TruthValue v : vs) s += v.name();
  return s;
}

std::vector<TruthValue> flat_values(const json& j) {
  std::vector<TruthValue> out;
  if (j.is_array()) {
    for (const json& e : j) {
      auto part = flat_values(e);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    auto v = TruthValue::parse(s);
    if (v) return {*v};
    // Compact form "FBT".
    for (char c : s) {
      auto w = TruthValue::parse(std::string_view(&c, 1));
      if (!w) throw ConfigError("bad value '" + s + "'");
      out.push_back(*w);
    }
    return out;
  }
  throw ConfigError("expected value names, got " + j.dump());
}

Valuation valuation_from(const json& j) {
  Valuation v;
  for (const auto& [atom, value] : j.items()) {
    auto tv = TruthValue::parse(value.get<std::string>());
    if (!tv) throw ConfigError("bad value in valuation: " + value.dump());
    v.set(atom, *tv);
  }
  return v;
}

bool status_matches(const std::string& expected, const Verdict& v) {
  if (expected == "valid") return v.valid();
  return expected == to_string(v.status);
}

std::string describe(const Verdict& v) {
  std::string s(to_string(v.status));
  if (v.witness) s += " [" + v.witness->str() + "]";
  return s;
}

// Checks optional "witness" (must equal the reported one) and "countermodel"
// (must refute) fields.
Outcome check_witnesses(const Claim& c, const Logic& logic, const Verdict& v,
                        const std::function<bool(const Valuation&)>& refutes) {
  if (c.extra.contains("witness")) {
    const Valuation want = valuation_from(c.extra.at("witness"));
    if (!v.witness || !(*v.witness == want)) {
      return {false, "witness " + (v.witness ? v.witness->str() : std::string("none")) + ", expected " + want.str()};
    }
  }
  if (c.extra.contains("countermodel")) {
    const Valuation cm = valuation_from(c.extra.at("countermodel"));
    if (!refutes(cm)) return {false, "valuation " + cm.str() + " does not refute in " + logic.name()};
  }
  return {true, describe(v)};
}

Outcome run_table(const Claim& c, const Logic& logic) {
  const Connective& conn = logic.connective(c.input.at("connective").get<std::string>());
  const auto want = flat_values(c.expected);
  const auto& got = conn.table();
  if (got != want) return {false, conn.name() + " = " + names(got) + ", expected " + names(want)};
  return {true, conn.name() + " = " + names(got)};
}

Outcome run_dunn(const Claim& c, const Logic& logic) {
  const Connective& conn = logic.connective(c.input.at("connective").get<std::string>());
  for (TruthValue a : logic.values()) {
    for (TruthValue b : logic.values()) {
      if (dunn_conditional(a, b) != conn(a, b)) {
        return {false, std::string("clauses give ") + dunn_conditional(a, b).name() + " at (" + a.name() + "," +
                           b.name() + "), table gives " + conn(a, b).name()};
      }
    }
  }
  return {c.expected == true, "clauses agree with the table on every entry"};
}

Outcome run_validity(const Claim& c, const Logic& logic) {
  const Formula f = parse(logic, c.input.get<std::string>());
  const Verdict v = check_validity(logic, f);
  const auto want = c.expected.get<std::string>();
  if (!status_matches(want, v)) return {false, describe(v) + ", expected " + want};
  return check_witnesses(c, logic, v, [&](const Valuation& s) { return !logic.is_designated(evaluate(logic, s, f)); });
}

Outcome run_consequence(const Claim& c, const Logic& logic) {
  const Sequent s = parse_sequent(logic, c.input.get<std::string>());
  ConsequenceFlavor flavor = ConsequenceFlavor::truth_preservation;
  if (c.extra.contains("flavor")) {
    auto f = parse_flavor(c.extra.at("flavor").get<std::string>());
    if (!f) throw ConfigError("unknown flavor " + c.extra.at("flavor").dump());
    flavor = *f;
  }
  const Verdict v = check_consequence(logic, s, flavor);
  const auto want = c.expected.get<std::string>();
  if (want != (v.valid() ? "valid" : "invalid")) return {false, describe(v) + ", expected " + want};
  return check_witnesses(c, logic, v, [&](const Valuation& val) {
    for (const Formula& p : s.premises) {
      if (!logic.is_designated(evaluate(logic, val, p))) return false;
    }
    return !logic.is_designated(evaluate(logic, val, s.conclusion));
  });
}

Outcome run_deduction(const Claim& c, const Logic& logic) {
  const auto [entails, theorem] =
      check_deduction(logic, parse(logic, c.input.at("premise").get<std::string>()),
                      parse(logic, c.input.at("conclusion").get<std::string>()),
                      c.input.at("conditional").get<std::string>());
  const std::string detail = "entailment " + describe(entails) + "; conditional " + describe(theorem);
  const bool ok = status_matches(c.expected.at(0).get<std::string>(), entails) &&
                  status_matches(c.expected.at(1).get<std::string>(), theorem);
  return {ok, detail};
}

Outcome run_classify(const Claim& c, const Logic& logic) {
  const ClassificationReport r = classify(logic, c.input.at("negation").get<std::string>(),
                                          c.input.at("conditional").get<std::string>());
  const std::map<std::string, bool> flags = {{"connexive", r.connexive},        {"hyper-connexive", r.hyper_connexive},
                                             {"nexive", r.nexive},              {"hyper-nexive", r.hyper_nexive},
                                             {"contradictory", r.contradictory}, {"ultra-abelardian", r.ultra_abelardian}};
  std::string mismatch;
  for (const auto& [key, want] : c.expected.items()) {
    if (key == "theses") {
      for (const auto& [thesis, status] : want.items()) {
        auto t = parse_thesis(thesis);
        if (!t) throw ConfigError("unknown thesis " + thesis);
        auto it = r.verdicts.find(*t);
        if (it == r.verdicts.end()) {
          mismatch += " " + thesis + "=unavailable";
        } else if (!status_matches(status.get<std::string>(), it->second)) {
          mismatch += " " + thesis + "=" + std::string(to_string(it->second.status));
        }
      }
      continue;
    }
    auto it = flags.find(key);
    if (it == flags.end()) throw ConfigError("unknown classification flag " + key);
    if (it->second != want.get<bool>()) mismatch += " " + key + "=" + (it->second ? "yes" : "no");
  }
  std::string summary;
  for (const auto& [key, value] : flags) summary += (summary.empty() ? "" : " ") + key + "=" + (value ? "yes" : "no");
  if (!mismatch.empty()) return {false, "mismatch:" + mismatch};
  return {true, summary};
}

Outcome run_tspn(const Claim& c) {
  const auto values = flat_values(c.input.at("values"));
  const auto designated = flat_values(c.input.at("designated"));
  std::set<std::string> got, want;
  for (const Connective& n : enumerate_tspn(values, designated)) got.insert(names(n.table()));
  for (const json& t : c.expected) want.insert(names(flat_values(t)));
  std::string listing;
  for (const std::string& s : got) listing += (listing.empty() ? "" : ",") + s;
  return {got == want, "{" + listing + "}"};
}

Outcome run_stability(const Claim& c, const Logic& logic) {
  const StabilityReport r = check_stability(logic, c.input.at("conditional").get<std::string>());
  std::string detail = r.stable ? "stable" : "unstable:";
  for (const auto& f : r.failures) detail += " " + std::string(to_string(f.thesis)) + "/" + f.negation + " " + describe(f.verdict);
  if (r.stable != c.expected.at("stable").get<bool>()) return {false, detail};
  if (c.expected.contains("failure")) {
    const json& want = c.expected.at("failure");
    const Connective& neg = logic.resolve(want.at("negation").get<std::string>());
    const auto thesis = parse_thesis(want.at("thesis").get<std::string>());
    const Valuation witness = valuation_from(want.at("witness"));
    bool found = false;
    for (const auto& f : r.failures) {
      if (f.negation == neg.name() && f.thesis == thesis && f.verdict.witness && *f.verdict.witness == witness) {
        found = true;
      }
    }
    if (!found) return {false, detail + " (expected failure not found)"};
  }
  return {true, detail};
}

Outcome run_definable(const Claim& c, const Logic& base, const std::vector<Logic>& registry) {
  Logic logic = base;
  if (c.input.contains("with")) {
    const Logic toolbox = resolve_logic("toolbox", registry);
    for (const json& n : c.input.at("with")) {
      const Connective& borrowed = toolbox.resolve(n.get<std::string>());
      if (!logic.find(borrowed.name())) logic = logic.with(borrowed);
    }
  }
  const auto target = flat_values(c.input.at("target"));
  const int arity = target.size() == logic.values().size() ? 1 : 2;
  const auto witness = is_definable(logic, arity, target);
  std::string detail = witness ? "yes: " + print(logic, witness->body) : "no";
  if (witness && term_table(logic, *witness, arity) != target) return {false, detail + " (witness is unsound)"};
  if ((witness ? "yes" : "no") != c.expected.get<std::string>()) return {false, detail};
  if (c.extra.contains("term")) {
    const Formula term = parse(logic, c.extra.at("term").get<std::string>());
    const auto atoms = term.atoms();
    if (atoms.size() != 1) return {false, detail + " (term must use one atom)"};
    std::map<std::string, Formula> rename{{*atoms.begin(), Formula::atom("x1")}};
    const auto computed = term_table(logic, Schema{instantiate(Schema{term}, rename)}, 1);
    if (computed != target) {
      return {false, detail + "; term " + c.extra.at("term").get<std::string>() + " computes " + names(computed) +
                         ", not " + names(target)};
    }
    detail += "; term " + c.extra.at("term").get<std::string>() + " realizes it";
  }
  return {true, detail};
}

Outcome run_closure(const Claim& c, const Logic& logic) {
  const int arity = c.input.at("arity").get<int>();
  const auto bound = c.input.at("bound").get<std::size_t>();
  const auto funcs = clone_closure(logic, arity);
  std::string detail = std::to_string(funcs.size()) + " term functions";
  if (funcs.size() > bound) return {false, detail + " exceed the bound " + std::to_string(bound)};
  std::set<std::vector<TruthValue>> tables;
  for (const TermFunction& f : funcs) {
    if (term_table(logic, f.witness, arity) != f.table) return {false, detail + "; unsound witness"};
    tables.insert(f.table);
  }
  if (tables.size() != funcs.size()) return {false, detail + "; duplicate tables"};
  if (c.input.value("complete_check", true)) {
    const std::size_t entries = funcs.front().table.size();
    for (const Connective& op : logic.signature()) {
      if (op.arity() == 1) {
        for (const TermFunction& g : funcs) {
          std::vector<TruthValue> t(entries);
          for (std::size_t e = 0; e < entries; ++e) t[e] = op(g.table[e]);
          if (!tables.count(t)) return {false, detail + "; not closed under " + op.name()};
        }
        continue;
      }
      for (const TermFunction& g : funcs) {
        for (const TermFunction& h : funcs) {
          std::vector<TruthValue> t(entries);
          for (std::size_t e = 0; e < entries; ++e) t[e] = op(g.table[e], h.table[e]);
          if (!tables.count(t)) return {false, detail + "; not closed under " + op.name()};
        }
      }
    }
    detail += ", sound and closed";
  } else {
    detail += ", sound";
  }
  return {c.expected == "sound-complete", detail};
}

// Every formula over `connectives` and atoms A, B, ... up to `max_size` nodes.
std::vector<Formula> formulas_up_to(const Logic& logic, const std::vector<std::string>& connectives,
                                    std::size_t atoms, std::size_t max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  for (std::size_t i = 0; i < atoms; ++i) by_size[1].push_back(Formula::atom(std::string(1, static_cast<char>('A' + i))));
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const std::string& name : connectives) {
      const Connective& op = logic.connective(name);
      if (op.arity() == 1) {
        for (const Formula& f : by_size[s - 1]) by_size[s].push_back(Formula::apply(name, {f}));
        continue;
      }
      for (std::size_t i = 1; i + 1 < s; ++i) {
        for (const Formula& l : by_size[i]) {
          for (const Formula& r : by_size[s - 1 - i]) by_size[s].push_back(Formula::apply(name, {l, r}));
        }
      }
    }
  }
  std::vector<Formula> out;
  for (auto& layer : by_size) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

Outcome run_fragment(const Claim& c, const Logic& logic, const std::vector<Logic>& registry) {
  const Logic other = resolve_logic(c.input.at("other").get<std::string>(), registry);
  const auto conns = c.input.at("connectives").get<std::vector<std::string>>();
  if (logic.values() != other.values()) return {false, "the logics have different values"};
  for (const std::string& n : conns) {
    if (!logic.connective(n).same_function(other.connective(n))) return {false, n + " tables differ"};
  }
  const auto formulas = formulas_up_to(logic, conns, c.input.at("atoms").get<std::size_t>(),
                                       c.input.at("max_size").get<std::size_t>());
  for (const Formula& f : formulas) {
    const auto atoms = f.atoms();
    bool agree = true;
    for_each_valuation(logic, {atoms.begin(), atoms.end()}, [&](const Valuation& v) {
      agree = evaluate(logic, v, f) == evaluate(other, v, f);
      return agree;
    });
    if (!agree) return {false, "disagree on " + print(logic, f)};
  }
  return {c.expected == true, "agree on " + std::to_string(formulas.size()) + " formulas"};
}

Outcome run_claim(const Claim& c, const std::vector<Logic>& registry) {
  if (c.kind == "tspn") return run_tspn(c);
  const Logic logic = resolve_logic(c.logic, registry);
  if (c.kind == "table") return run_table(c, logic);
  if (c.kind == "dunn-clauses") return run_dunn(c, logic);
  if (c.kind == "validity") return run_validity(c, logic);
  if (c.kind == "consequence") return run_consequence(c, logic);
  if (c.kind == "deduction") return run_deduction(c, logic);
  if (c.kind == "classify") return run_classify(c, logic);
  if (c.kind == "stability") return run_stability(c, logic);
  if (c.kind == "definable") return run_definable(c, logic, registry);
  if (c.kind == "closure") return run_closure(c, logic);
  if (c.kind == "fragment-agreement") return run_fragment(c, logic, registry);
  throw ConfigError("unknown claim kind " + c.kind);
}

}  // namespace

ClaimsManifest manifest_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("claims") || !doc.at("claims").is_array()) {
    throw ConfigError("manifest: expected an object with a 'claims' array");
  }
  if (doc.contains("format") && doc.at("format") != kManifestFormat) {
    throw ConfigError("manifest: format must be '" + std::string(kManifestFormat) + "'");
  }
  ClaimsManifest m;
  std::set<std::string> ids;
  for (const json& entry : doc.at("claims")) {
    if (!entry.is_object()) throw ConfigError("manifest: every claim must be an object");
    Claim c;
    try {
      c.id = entry.at("id").get<std::string>();
      c.kind = entry.at("kind").get<std::string>();
      c.logic = entry.value("logic", std::string());
      c.locus = entry.value("locus", std::string());
      c.input = entry.at("input");
      c.expected = entry.at("expected");
    } catch (const json::exception& e) {
      throw ConfigError("manifest: malformed claim " + entry.dump() + ": " + e.what());
    }
    if (!kKinds.count(c.kind)) throw ConfigError("manifest: claim '" + c.id + "' has unknown kind '" + c.kind + "'");
    if (c.kind != "tspn" && c.logic.empty()) throw ConfigError("manifest: claim '" + c.id + "' names no logic");
    if (!ids.insert(c.id).second) throw ConfigError("manifest: duplicate claim id '" + c.id + "'");
    c.extra = entry;
    m.claims.push_back(std::move(c));
  }
  if (m.claims.empty()) throw ConfigError("manifest: no claims");
  return m;
}

ClaimsManifest load_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open manifest '" + path + "'");
  try {
    return manifest_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError("manifest '" + path + "' is not valid JSON: " + e.what());
  }
}

const ClaimsManifest& builtin_manifest() {
  static const ClaimsManifest m = manifest_from_json(json::parse(builtin_manifest_text()));
  return m;
}

json ReportResult::to_json() const {
  json rows = json::array();
  for (const ClaimResult& r : results) {
    rows.push_back({{"id", r.id}, {"logic", r.logic}, {"kind", r.kind}, {"locus", r.locus},
                    {"pass", r.pass}, {"detail", r.detail}});
  }
  return {{"format", "mvlab-report"},
          {"version", 1},
          {"claims", rows},
          {"passed", passed},
          {"failed", failed},
          {"note", "valid-just-true / valid-sometimes-false refine plain validity; the split is this tool's own"}};
}

ReportResult run_manifest(const ClaimsManifest& manifest, const std::vector<Logic>& registry,
                          bool stop_at_first_failure) {
  ReportResult report;
  for (const Claim& c : manifest.claims) {
    ClaimResult r{c.id, c.logic, c.kind, c.locus, false, ""};
    try {
      Outcome o = run_claim(c, registry);
      r.pass = o.pass;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    (r.pass ? report.passed : report.failed) += 1;
    report.results.push_back(std::move(r));
    if (!report.results.back().pass && stop_at_first_failure) break;
  }
  return report;
}

}  // namespace mvlab
