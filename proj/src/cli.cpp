#include "mvlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mvlab/config.hpp"
#include "mvlab/definability.hpp"
#include "mvlab/engine.hpp"
#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"
#include "mvlab/manifest.hpp"
#include "mvlab/properties.hpp"

namespace mvlab {

using nlohmann::json;

namespace {

// Thrown when an --expect check does not match.
struct Mismatch {};

struct Globals {
  std::string logic;
  std::string format = "text";
  std::string expect;
  bool machine() const { return format == "machine"; }
};

struct Context {
  Globals globals;
  std::vector<std::string> rest;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool mismatch = false;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string letters(const std::vector<TruthValue>& vs) {
  std::string s;
  for (TruthValue v : vs) s += v.name();
  return s;
}

json valuation_json(const Valuation& v) {
  json j = json::object();
  for (const auto& [atom, value] : v.assignment()) j[atom] = std::string(1, value.name());
  return j;
}

json verdict_json(const Verdict& v) {
  json j{{"status", to_string(v.status)}};
  if (v.witness) j["witness"] = valuation_json(*v.witness);
  return j;
}

std::string verdict_text(const Verdict& v) {
  std::string s(to_string(v.status));
  if (v.witness) s += ", witness " + v.witness->str();
  return s;
}

// Pops the logic reference from the positionals unless --logic was given.
Logic take_logic(Context& ctx) {
  std::string ref = ctx.globals.logic;
  if (ref.empty()) {
    if (ctx.rest.empty()) throw ConfigError("no logic given (positional name/path or --logic)");
    ref = ctx.rest.front();
    ctx.rest.erase(ctx.rest.begin());
  }
  return resolve_logic(trim(ref), builtin_logics());
}

void expect_equal(Context& ctx, const std::string& got) {
  if (!ctx.globals.expect.empty() && ctx.globals.expect != got) ctx.mismatch = true;
}

void expect_verdict(Context& ctx, const Verdict& v) {
  const std::string& want = ctx.globals.expect;
  if (want.empty()) return;
  if (want == "valid" ? !v.valid() : want != to_string(v.status)) ctx.mismatch = true;
}

void cmd_eval(Context& ctx) {
  const Logic logic = take_logic(ctx);
  if (ctx.rest.empty()) throw ConfigError("eval: missing formula");
  const Formula f = parse(logic, ctx.rest.front());
  Valuation v;
  for (std::size_t i = 1; i < ctx.rest.size(); ++i) {
    const std::string pair = trim(ctx.rest[i]);
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw ConfigError("eval: expected atom=VALUE, got '" + pair + "'");
    const auto value = TruthValue::parse(pair.substr(eq + 1));
    if (!value || !logic.admits(*value)) {
      throw ConfigError("eval: '" + pair.substr(eq + 1) + "' is not a value of " + logic.name());
    }
    v.set(pair.substr(0, eq), *value);
  }
  const TruthValue result = evaluate(logic, v, f);
  const std::string name(1, result.name());
  if (ctx.globals.machine()) {
    ctx.out << json{{"formula", print(logic, f)}, {"valuation", valuation_json(v)}, {"value", name}}.dump() << "\n";
  } else {
    ctx.out << name << "\n";
  }
  expect_equal(ctx, name);
}

void cmd_check(Context& ctx, const std::string& flavor_name) {
  const Logic logic = take_logic(ctx);
  if (ctx.rest.size() != 2) throw ConfigError("check: expected MODE INPUT (mode valid|consequence)");
  const std::string mode = trim(ctx.rest[0]);
  if (mode != "valid" && mode != "consequence") throw ConfigError("check: mode must be 'valid' or 'consequence'");
  const auto flavor = parse_flavor(flavor_name);
  if (!flavor) throw ConfigError("check: unknown flavor '" + flavor_name + "'");

  std::vector<std::string> inputs;
  if (trim(ctx.rest[1]) == "-") {
    std::string line;
    while (std::getline(ctx.in, line)) {
      line = trim(line);
      if (!line.empty() && line.front() != '#') inputs.push_back(line);
    }
  } else {
    inputs.push_back(ctx.rest[1]);
  }

  json rows = json::array();
  for (const std::string& input : inputs) {
    const Verdict v = mode == "valid" ? check_validity(logic, parse(logic, input))
                                      : check_consequence(logic, parse_sequent(logic, input), *flavor);
    expect_verdict(ctx, v);
    if (ctx.globals.machine()) {
      json row = verdict_json(v);
      row["input"] = trim(input);
      rows.push_back(row);
    } else if (inputs.size() > 1) {
      ctx.out << trim(input) << "\t" << verdict_text(v) << "\n";
    } else {
      ctx.out << verdict_text(v) << "\n";
    }
  }
  if (ctx.globals.machine()) ctx.out << (inputs.size() == 1 ? rows.front() : rows).dump() << "\n";
}

void cmd_classify(Context& ctx, const std::string& neg, const std::string& cond) {
  const Logic logic = take_logic(ctx);
  const ClassificationReport r = classify(logic, trim(neg), trim(cond));
  const std::vector<std::pair<std::string, bool>> flags = {
      {"connexive", r.connexive}, {"hyper-connexive", r.hyper_connexive}, {"nexive", r.nexive},
      {"hyper-nexive", r.hyper_nexive}, {"contradictory", r.contradictory}, {"ultra-abelardian", r.ultra_abelardian}};
  if (ctx.globals.machine()) {
    json theses = json::object();
    for (const auto& [t, v] : r.verdicts) theses[std::string(to_string(t))] = verdict_json(v);
    json j{{"logic", r.logic},
           {"negation", r.roles.negation},
           {"conditional", r.roles.conditional},
           {"theses", theses}};
    for (const auto& [k, v] : flags) j[k] = v;
    if (r.contradiction_witness) j["contradiction_witness"] = print(logic, *r.contradiction_witness);
    ctx.out << j.dump() << "\n";
    return;
  }
  ctx.out << r.logic << ": negation " << logic.connective(r.roles.negation).symbol() << ", conditional "
          << logic.connective(r.roles.conditional).symbol() << "\n";
  for (const auto& [t, v] : r.verdicts) {
    const auto schema = thesis_schema(logic, t, r.roles);
    std::string label(to_string(t));
    label.resize(7, ' ');
    std::string body = schema ? print(logic, schema->body) : "";
    if (body.size() < 32) body.resize(32, ' ');
    ctx.out << "  " << label << body << "  " << verdict_text(v) << "\n";
  }
  for (const auto& [k, v] : flags) ctx.out << k << ": " << (v ? "yes" : "no") << "\n";
  if (r.contradiction_witness) {
    ctx.out << "both valid: " << print(logic, *r.contradiction_witness) << " and its negation\n";
  }
}

void cmd_stability(Context& ctx, const std::string& cond) {
  const Logic logic = take_logic(ctx);
  const StabilityReport r = check_stability(logic, trim(cond));
  if (ctx.globals.machine()) {
    json failures = json::array();
    for (const auto& f : r.failures) {
      json row = verdict_json(f.verdict);
      row["negation"] = f.negation;
      row["thesis"] = to_string(f.thesis);
      failures.push_back(row);
    }
    json members = json::array();
    for (const auto& [neg, report] : r.members) members.push_back(neg.name());
    ctx.out << json{{"conditional", r.conditional}, {"stable", r.stable}, {"negations", members},
                    {"failures", failures}}
                   .dump()
            << "\n";
    return;
  }
  ctx.out << "conditional " << logic.connective(r.conditional).symbol() << ": " << (r.stable ? "stable" : "unstable")
          << "\n";
  for (const auto& [neg, report] : r.members) {
    std::vector<std::string> failed;
    for (const auto& f : r.failures) {
      if (f.negation == neg.name()) failed.push_back(std::string(to_string(f.thesis)) + " " + verdict_text(f.verdict));
    }
    ctx.out << "  with " << neg.symbol() << " (" << neg.name() << "): ";
    if (failed.empty()) {
      ctx.out << "connexive\n";
      continue;
    }
    ctx.out << "fails\n";
    for (const std::string& line : failed) ctx.out << "    " << line << "\n";
  }
}

void cmd_definable(Context& ctx, const std::string& target, const std::vector<std::string>& with) {
  std::vector<std::string> names;
  for (const std::string& n : with) names.push_back(trim(n));
  const Logic logic = borrow_from_toolbox(take_logic(ctx), names);
  const DefinabilityTarget t = resolve_target(logic, trim(target));
  const std::string& label = t.label;
  const std::vector<TruthValue>& table = t.table;
  const auto witness = is_definable(logic, t.arity, table);
  const std::string answer = witness ? "yes" : "no";
  if (ctx.globals.machine()) {
    json j{{"logic", logic.name()}, {"target", label}, {"table", letters(table)}, {"definable", answer}};
    if (witness) j["term"] = print(logic, witness->body);
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << answer;
    if (witness) ctx.out << ": " << print(logic, witness->body);
    ctx.out << "\n";
  }
  expect_equal(ctx, answer);
}

struct EnumerateArgs {
  int arity = 2;
  std::vector<std::string> constraints;
  std::vector<std::string> valid_sequents;
  std::vector<std::string> invalid_sequents;
  std::vector<std::string> valid_formulas;
  std::vector<std::string> invalid_formulas;
  bool list = false;
};

void cmd_enumerate(Context& ctx, const EnumerateArgs& a) {
  const Logic logic = take_logic(ctx);
  std::vector<ConstraintPredicate> preds;
  for (const std::string& n : a.constraints) {
    auto p = constraints::named(trim(n));
    if (!p) throw ConfigError("enumerate: unknown constraint '" + n + "'");
    preds.push_back(*p);
  }
  for (const auto& s : a.valid_sequents) preds.push_back(constraints::sequent(s, true));
  for (const auto& s : a.invalid_sequents) preds.push_back(constraints::sequent(s, false));
  for (const auto& s : a.valid_formulas) preds.push_back(constraints::formula(s, true));
  for (const auto& s : a.invalid_formulas) preds.push_back(constraints::formula(s, false));
  const Enumeration e = enumerate_connectives(logic, a.arity, preds, a.list);
  if (ctx.globals.machine()) {
    json tables = json::array();
    for (const Connective& c : e.survivors) tables.push_back(letters(c.table()));
    json j{{"logic", logic.name()}, {"arity", a.arity}, {"count", e.count}};
    if (a.list) j["tables"] = tables;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << e.count << "\n";
    for (const Connective& c : e.survivors) ctx.out << letters(c.table()) << "\n";
  }
  expect_equal(ctx, std::to_string(e.count));
}

void cmd_report(Context& ctx, const std::string& manifest_path, bool stop) {
  const ClaimsManifest manifest = manifest_path.empty() ? builtin_manifest() : load_manifest_file(manifest_path);
  const ReportResult r = run_manifest(manifest, builtin_logics(), stop);
  if (ctx.globals.machine()) {
    ctx.out << r.to_json().dump(1) << "\n";
  } else {
    for (const ClaimResult& c : r.results) {
      ctx.out << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  [" << c.locus << "]  " << c.detail << "\n";
    }
    ctx.out << r.passed << "/" << r.results.size() << " claims pass\n";
    ctx.out << "note: valid-just-true / valid-sometimes-false split validity by whether the value is ever B; "
               "this refinement is the tool's own\n";
  }
  if (r.failed > 0) ctx.mismatch = true;
}

void cmd_export(Context& ctx, const std::string& output) {
  const Logic logic = take_logic(ctx);
  const std::string text = logic_to_text(logic);
  if (output.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw ConfigError("cannot write '" + output + "'");
  f << text;
}

std::set<std::string> option_names(const CLI::App& app) {
  std::set<std::string> names;
  for (const CLI::Option* o : app.get_options()) {
    for (const auto& n : o->get_lnames()) names.insert("--" + n);
    for (const auto& n : o->get_snames()) names.insert("-" + n);
  }
  for (const CLI::App* sub : app.get_subcommands({})) {
    auto more = option_names(*sub);
    names.insert(more.begin(), more.end());
  }
  return names;
}

// Formulas may start with '-' (a negation symbol). A leading space keeps the
// argument parser from reading them as options; the formula lexer skips it.
std::vector<std::string> protect_formulas(const std::vector<std::string>& args, const std::set<std::string>& options) {
  std::vector<std::string> out;
  bool after_separator = false;
  for (const std::string& a : args) {
    if (after_separator || a == "--") {
      after_separator = true;
      out.push_back(a);
      continue;
    }
    const std::string head = a.substr(0, a.find('='));
    if (a.size() > 1 && a[0] == '-' && !options.count(head)) {
      out.push_back(" " + a);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"mvlab: many-valued connexive logic workbench", "mvlab"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--logic", globals.logic, "builtin logic name or logic file");
  app.add_option("--format", globals.format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--expect", globals.expect, "expected result; exit 1 when it differs");

  std::vector<std::string> rest;
  std::string flavor = "truth", neg, cond, target, manifest, output;
  std::vector<std::string> with;
  EnumerateArgs en;
  bool stop = false;

  auto* eval = app.add_subcommand("eval", "value of a formula: [LOGIC] FORMULA atom=VALUE...");
  auto* check = app.add_subcommand("check", "validity or consequence: [LOGIC] valid|consequence INPUT ('-' for stdin)");
  check->add_option("--flavor", flavor, "consequence: truth, exact or non-falsity");
  auto* cls = app.add_subcommand("classify", "thesis catalog and connexive flags: [LOGIC]");
  cls->add_option("--neg", neg, "negation name or symbol")->required();
  cls->add_option("--cond", cond, "conditional name or symbol")->required();
  auto* stab = app.add_subcommand("stability", "connexive stability over the standard paraconsistent negations");
  stab->add_option("--cond", cond, "conditional name or symbol")->required();
  auto* def = app.add_subcommand("definable", "definability of a connective: [LOGIC]");
  def->add_option("--target", target, "toolbox connective name/symbol, 'consistency', or a table like TFT")
      ->required();
  def->add_option("--with", with, "toolbox connectives to add first")->delimiter(',');
  auto* enu = app.add_subcommand("enumerate", "count tables satisfying constraints: [LOGIC]");
  enu->add_option("--arity", en.arity)->check(CLI::Range(1, 2));
  enu->add_option("--constraint", en.constraints, "detachment, designated-preserving, classical");
  enu->add_option("--valid-sequent", en.valid_sequents, "sequent over the signature plus '#'");
  enu->add_option("--invalid-sequent", en.invalid_sequents);
  enu->add_option("--valid-formula", en.valid_formulas);
  enu->add_option("--invalid-formula", en.invalid_formulas);
  enu->add_flag("--list", en.list, "print every surviving table");
  auto* rep = app.add_subcommand("report", "run a claims manifest (the shipped one by default)");
  rep->add_option("--manifest", manifest, "manifest file");
  rep->add_flag("--stop-at-first-failure", stop);
  auto* exp = app.add_subcommand("export-logic", "write a logic as a logic file: LOGIC");
  exp->add_option("-o,--output", output, "destination (stdout by default)");
  for (CLI::App* sub : {eval, check, cls, stab, def, enu, rep, exp}) {
    sub->add_option("args", rest, "positional arguments");
    sub->fallthrough();
  }

  std::vector<std::string> argv = protect_formulas(args, option_names(app));
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{globals, rest, in, out, err};
  try {
    if (eval->parsed()) cmd_eval(ctx);
    if (check->parsed()) cmd_check(ctx, flavor);
    if (cls->parsed()) cmd_classify(ctx, neg, cond);
    if (stab->parsed()) cmd_stability(ctx, cond);
    if (def->parsed()) cmd_definable(ctx, target, with);
    if (enu->parsed()) cmd_enumerate(ctx, en);
    if (rep->parsed()) cmd_report(ctx, manifest, stop);
    if (exp->parsed()) cmd_export(ctx, output);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return ctx.mismatch ? kExitMismatch : kExitOk;
}

}  // namespace mvlab
