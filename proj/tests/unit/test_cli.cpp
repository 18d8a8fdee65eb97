#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mvlab/cli.hpp"

using namespace mvlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "M3V", "A > B", "A=T", "B=B"}).out == "F\n");
  CHECK(run({"eval", "cP2", "A & B", "A=B", "B=B"}).out == "T\n");
  CHECK(run({"eval", "M3V", "A", "A=T"}).out == "T\n");
  CHECK(run({"--logic", "M3V", "eval", "~A", "A=F"}).out == "T\n");
  CHECK(run({"eval", "cCSL3", "-A", "A=B"}).out == "T\n");
  CHECK(run({"eval", "M3V", "A > B", "A=T"}).code == kExitUsage);
  CHECK(run({"eval", "M3V", "A >", "A=T"}).code == kExitUsage);
  CHECK(run({"eval", "M3V", "A", "A=N"}).code == kExitUsage);
  CHECK(run({"eval", "M3V", "A", "A=T", "--expect", "F"}).code == kExitMismatch);
  CHECK(run({"eval", "M3V", "A", "A=T", "--expect", "T"}).code == kExitOk);
}

TEST_CASE("check") {
  Run r = run({"check", "M3V", "valid", "~(A > ~A)"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid-sometimes-false, witness A=B\n");
  r = run({"check", "cCSL3", "valid", "-(A > ~A)"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("unknown symbol '~' in cCSL3") != std::string::npos);
  r = run({"check", "CSL3", "consequence", "A, -A | B => B"});
  CHECK(r.out == "invalid, witness A=B B=F\n");
  CHECK(run({"check", "CSL3", "consequence", "A, -A | B => B", "--expect", "invalid"}).code == kExitOk);
  CHECK(run({"check", "CSL3", "consequence", "A, -A | B => B", "--expect", "valid"}).code == kExitMismatch);
  CHECK(run({"check", "M3V", "consequence", "A, ~A => B", "--flavor", "exact"}).out == "valid-just-true\n");
  CHECK(run({"check", "M3V", "maybe", "A"}).code == kExitUsage);
  CHECK(run({"check", "M3V", "consequence", "A", "--flavor", "odd"}).code == kExitUsage);
  r = run({"check", "cCSL3", "valid", "-", "--expect", "valid"}, "-(A > B)\n# comment\n\nA > -A\n");
  CHECK(r.code == kExitMismatch);
  CHECK(r.out == "-(A > B)\tvalid-just-true\nA > -A\tinvalid, witness A=T\n");
  r = run({"--format", "machine", "check", "M3V", "valid", "((A > B) > B) > A"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "invalid");
  CHECK(j["witness"]["A"] == "F");
  CHECK(j["witness"]["B"] == "T");
}

TEST_CASE("classify, stability, definable") {
  Run r = run({"classify", "M3V", "--neg", "~", "--cond", ">"});
  CHECK(r.code == 0);
  CHECK(r.out.find("connexive: yes") != std::string::npos);
  CHECK(r.out.find("hyper-connexive: no") != std::string::npos);
  CHECK(r.out.find("contradictory: yes") != std::string::npos);
  CHECK(r.out.find("ultra-abelardian: yes") != std::string::npos);
  CHECK(run({"classify", "M3V", "--neg", "-", "--cond", ">"}).code == kExitUsage);
  CHECK(run({"classify", "M3V", "--neg", "~"}).code == kExitUsage);
  r = run({"--format", "machine", "classify", "cCSL3", "--neg", "-", "--cond", ">"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["theses"]["AT"]["status"] == "valid-just-true");
  CHECK(j["nexive"] == true);

  r = run({"stability", "toolbox", "--cond", ">w"});
  CHECK(r.out.find("unstable") != std::string::npos);
  CHECK(r.out.find("BT invalid, witness A=T B=B") != std::string::npos);
  CHECK(run({"stability", "toolbox", "--cond", ">"}).out.find(": stable") != std::string::npos);

  CHECK(run({"definable", "M3V", "--target", "consistency"}).out == "no\n");
  CHECK(run({"definable", "M3V", "--target", "-"}).out == "no\n");
  r = run({"definable", "M3V", "--target", "p1_not", "--with", "cons", "--expect", "yes"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("yes: ", 0) == 0);
  CHECK(run({"definable", "M3V", "--target", "XYZ"}).code == kExitUsage);
  // comma lists, and borrowing a connective the logic already has
  CHECK(run({"definable", "CSL3", "--target", "cons", "--with", "lp_not,and", "--expect", "yes"}).code == 0);
  CHECK(run({"definable", "M3V", "--target", "p1_not", "--with", "lp_not", "--expect", "no"}).code == 0);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "CSL3", "--arity", "1"}).out == "27\n");
  const Run r = run({"enumerate", "CSL3", "--constraint", "detachment", "--constraint", "classical", "--list"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  std::size_t listed = 0;
  for (std::string l; std::getline(lines, l);) ++listed;
  CHECK(std::to_string(listed) == first);
  CHECK(run({"enumerate", "CSL3", "--constraint", "bogus"}).code == kExitUsage);
  CHECK(run({"enumerate", "CSL3", "--valid-sequent", "A # B => B", "--arity", "2"}).code == 0);
}

TEST_CASE("report") {
  Run r = run({"--format", "machine", "report"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "mvlab-report");
  CHECK(j["claims"].size() == j["passed"].get<std::size_t>() + j["failed"].get<std::size_t>());
  for (const auto& row : j["claims"]) {
    CHECK(row.contains("id"));
    CHECK(row.contains("pass"));
    CHECK(row.contains("locus"));
  }

  const auto wrong = temp_file("mvlab_wrong.json", R"j({"claims": [
    {"id": "w", "kind": "validity", "logic": "M3V", "locus": "x", "input": "~(A > B)", "expected": "invalid"}]})j");
  r = run({"report", "--manifest", wrong.string()});
  CHECK(r.code == kExitMismatch);
  CHECK(r.out.find("FAIL  w") != std::string::npos);

  const auto empty = temp_file("mvlab_empty.json", R"({"claims": []})");
  CHECK(run({"report", "--manifest", empty.string()}).code == kExitUsage);
  const auto broken = temp_file("mvlab_broken.json", "{");
  CHECK(run({"report", "--manifest", broken.string()}).code == kExitUsage);
  CHECK(run({"report", "--manifest", "/no/such/manifest.json"}).code == kExitUsage);
}

TEST_CASE("export-logic and loading from a file") {
  const Run r = run({"export-logic", "cP2"});
  CHECK(r.code == 0);
  const auto path = temp_file("mvlab_cp2.json", r.out);
  CHECK(run({"eval", path.string(), "A & B", "A=B", "B=B"}).out == "T\n");
  CHECK(run({"--logic", path.string(), "check", "valid", "~((A > B) & (A > ~B))"}).out.rfind("invalid", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "eval", "M3V", "A", "A=T"}).code == kExitUsage);
  CHECK(run({"eval", "NOPE", "A", "A=T"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
