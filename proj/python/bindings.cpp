#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvlab/config.hpp"
#include "mvlab/definability.hpp"
#include "mvlab/engine.hpp"
#include "mvlab/error.hpp"
#include "mvlab/fixtures.hpp"
#include "mvlab/manifest.hpp"
#include "mvlab/properties.hpp"

namespace py = pybind11;
using namespace mvlab;

namespace {

Logic logic_ref(const std::string& ref) { return resolve_logic(ref, builtin_logics()); }

TruthValue value_of(const std::string& name) {
  auto v = TruthValue::parse(name);
  if (!v) throw ConfigError("unknown value '" + name + "'");
  return *v;
}

std::vector<TruthValue> values_of(const std::string& letters) {
  std::vector<TruthValue> out;
  for (char c : letters) out.push_back(value_of(std::string(1, c)));
  return out;
}

std::string letters(const std::vector<TruthValue>& t) {
  std::string s;
  for (TruthValue v : t) s += v.name();
  return s;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["status"] = std::string(to_string(v.status));
  if (v.witness) {
    py::dict w;
    for (const auto& [atom, value] : v.witness->assignment()) w[py::str(atom)] = std::string(1, value.name());
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_mvlab, m) {
  m.doc() = "Matrix semantics for many-valued connexive logics";
  py::register_exception<Error>(m, "MvlabError", PyExc_ValueError);

  m.def("logics", [] {
    std::vector<std::string> names;
    for (const Logic& l : builtin_logics()) names.push_back(l.name());
    return names;
  });

  m.def("canonical", [](const std::string& logic, const std::string& text) {
    const Logic l = logic_ref(logic);
    return print(l, parse(l, text));
  }, py::arg("logic"), py::arg("formula"), "Parse and print with minimal parentheses.");

  m.def("evaluate", [](const std::string& logic, const std::string& text, const std::map<std::string, std::string>& valuation) {
    const Logic l = logic_ref(logic);
    Valuation v;
    for (const auto& [atom, value] : valuation) v.set(atom, value_of(value));
    return std::string(1, evaluate(l, v, parse(l, text)).name());
  }, py::arg("logic"), py::arg("formula"), py::arg("valuation"));

  m.def("check_validity", [](const std::string& logic, const std::string& text) {
    const Logic l = logic_ref(logic);
    return verdict_dict(check_validity(l, parse(l, text)));
  }, py::arg("logic"), py::arg("formula"));

  m.def("check_consequence", [](const std::string& logic, const std::string& text, const std::string& flavor) {
    const Logic l = logic_ref(logic);
    const auto f = parse_flavor(flavor);
    if (!f) throw ConfigError("unknown flavor '" + flavor + "'");
    return verdict_dict(check_consequence(l, parse_sequent(l, text), *f));
  }, py::arg("logic"), py::arg("sequent"), py::arg("flavor") = "truth");

  m.def("classify", [](const std::string& logic, const std::string& negation, const std::string& conditional) {
    const ClassificationReport r = classify(logic_ref(logic), negation, conditional);
    py::dict theses;
    for (const auto& [t, v] : r.verdicts) theses[py::str(std::string(to_string(t)))] = verdict_dict(v);
    py::dict d;
    d["theses"] = theses;
    d["connexive"] = r.connexive;
    d["hyper_connexive"] = r.hyper_connexive;
    d["nexive"] = r.nexive;
    d["hyper_nexive"] = r.hyper_nexive;
    d["contradictory"] = r.contradictory;
    d["ultra_abelardian"] = r.ultra_abelardian;
    return d;
  }, py::arg("logic"), py::arg("negation"), py::arg("conditional"));

  m.def("check_stability", [](const std::string& logic, const std::string& conditional) {
    const StabilityReport r = check_stability(logic_ref(logic), conditional);
    py::list failures;
    for (const auto& f : r.failures) {
      py::dict row = verdict_dict(f.verdict);
      row["negation"] = f.negation;
      row["thesis"] = std::string(to_string(f.thesis));
      failures.append(row);
    }
    py::dict d;
    d["stable"] = r.stable;
    d["failures"] = failures;
    return d;
  }, py::arg("logic"), py::arg("conditional"));

  m.def("enumerate_tspn", [](const std::string& values, const std::string& designated) {
    std::vector<std::string> out;
    for (const Connective& n : enumerate_tspn(values_of(values), values_of(designated))) out.push_back(letters(n.table()));
    return out;
  }, py::arg("values"), py::arg("designated"), "Tables of the standard paraconsistent negations.");

  m.def("is_definable", [](const std::string& logic, const std::string& target, const std::vector<std::string>& with) -> std::optional<std::string> {
    const Logic l = borrow_from_toolbox(logic_ref(logic), with);
    const DefinabilityTarget t = resolve_target(l, target);
    const auto w = is_definable(l, t.arity, t.table);
    if (!w) return std::nullopt;
    return print(l, w->body);
  }, py::arg("logic"), py::arg("target"), py::arg("with_") = std::vector<std::string>{},
     "Witness term for a toolbox connective, 'consistency' or a table such as 'FTT'; None if not definable.");

  m.def("closure_size", [](const std::string& logic, int arity) {
    return clone_closure(logic_ref(logic), arity).size();
  }, py::arg("logic"), py::arg("arity"));

  m.def("report", [](const std::string& manifest) {
    const ClaimsManifest mf = manifest.empty() ? builtin_manifest() : load_manifest_file(manifest);
    return run_manifest(mf, builtin_logics()).to_json().dump();
  }, py::arg("manifest") = "", "Run a claims manifest; returns the report as JSON text.");

  m.def("export_logic", [](const std::string& logic) { return logic_to_text(logic_ref(logic)); },
        py::arg("logic"));
}
