#pragma once

// Reference semantics for tests. Tables are transcribed again from the
// printed matrices as letter strings and evaluated by a separate recursive
// walker, so expected values never come from the fixtures or the engine.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvlab/formula.hpp"

namespace oracle {

struct Table {
  int arity;
  std::string letters;  // row-major over the matrix values
};

struct Matrix {
  std::string values;      // e.g. "TBF"
  std::string designated;  // e.g. "TB"
  std::map<std::string, Table> ops;
};

using Assignment = std::map<std::string, char>;

inline std::size_t index(const Matrix& m, char v) {
  const auto i = m.values.find(v);
  if (i == std::string::npos) throw std::logic_error(std::string("value outside matrix: ") + v);
  return i;
}

inline char apply(const Matrix& m, const std::string& op, char a, char b = 0) {
  const Table& t = m.ops.at(op);
  if (t.arity == 1) return t.letters[index(m, a)];
  return t.letters[index(m, a) * m.values.size() + index(m, b)];
}

inline char eval(const Matrix& m, const mvlab::Formula& f, const Assignment& s) {
  if (f.is_atom()) return s.at(f.label());
  const auto kids = f.children();
  if (kids.size() == 1) return apply(m, f.label(), eval(m, kids[0], s));
  return apply(m, f.label(), eval(m, kids[0], s), eval(m, kids[1], s));
}

/// All assignments, first atom slowest, values in matrix order.
inline std::vector<Assignment> assignments(const Matrix& m, const std::vector<std::string>& atoms) {
  std::vector<Assignment> out{{}};
  for (const std::string& a : atoms) {
    std::vector<Assignment> next;
    for (const Assignment& prefix : out) {
      for (char v : m.values) {
        Assignment s = prefix;
        s[a] = v;
        next.push_back(s);
      }
    }
    out = next;
  }
  return out;
}

inline bool designated(const Matrix& m, char v) { return m.designated.find(v) != std::string::npos; }

/// "valid-just-true", "valid-sometimes-false" or "invalid".
inline std::string verdict(const Matrix& m, const mvlab::Formula& f) {
  const auto atoms = f.atoms();
  bool always_t = true;
  for (const Assignment& s : assignments(m, {atoms.begin(), atoms.end()})) {
    const char v = eval(m, f, s);
    if (!designated(m, v)) return "invalid";
    if (v != 'T') always_t = false;
  }
  return always_t ? "valid-just-true" : "valid-sometimes-false";
}

/// Truth-preserving consequence.
inline bool entails(const Matrix& m, const std::vector<mvlab::Formula>& premises, const mvlab::Formula& conclusion) {
  std::set<std::string> atoms = conclusion.atoms();
  for (const auto& p : premises) {
    auto more = p.atoms();
    atoms.insert(more.begin(), more.end());
  }
  for (const Assignment& s : assignments(m, {atoms.begin(), atoms.end()})) {
    bool all = true;
    for (const auto& p : premises) all = all && designated(m, eval(m, p, s));
    if (all && !designated(m, eval(m, conclusion, s))) return false;
  }
  return true;
}

// Printed tables, T B F order (N in place of B for C0.2).
inline const Table kLpNot{1, "FBT"};
inline const Table kSetteNot{1, "FTT"};
inline const Table kCons{1, "TFT"};
inline const Table kAnd{2, "TBF" "BBF" "FFF"};
inline const Table kOr{2, "TTT" "TBB" "TBF"};
inline const Table kImpE{2, "BFF" "BBF" "BBB"};
inline const Table kAndP{2, "TTF" "TTF" "FFF"};
inline const Table kOrP{2, "TTT" "TTT" "TTF"};
inline const Table kImpP{2, "TTF" "TTF" "TTT"};
inline const Table kImpW{2, "TBF" "TBF" "BBB"};
inline const Table kImpBL{2, "TFF" "TBF" "BBB"};
inline const Table kImpF{2, "BBF" "BBF" "BBB"};

inline Matrix m3v() { return {"TBF", "TB", {{"lp_not", kLpNot}, {"and", kAnd}, {"or", kOr}, {"imp_e", kImpE}}}; }
inline Matrix csl3() { return {"TBF", "TB", {{"p1_not", kSetteNot}, {"and", kAnd}, {"or", kOr}}}; }
inline Matrix ccsl3() {
  return {"TBF", "TB", {{"p1_not", kSetteNot}, {"and", kAnd}, {"or", kOr}, {"imp_e", kImpE}}};
}
inline Matrix cp2() { return {"TBF", "TB", {{"lp_not", kLpNot}, {"and", kAndP}, {"or", kOrP}, {"imp_e", kImpE}}}; }
inline Matrix c02() {
  return {"TNF", "T", {{"lp_not", {1, "FNT"}}, {"and", kAndP}, {"or", kOrP}, {"imp_p", kImpP}}};
}
inline Matrix toolbox() {
  return {"TBF",
          "TB",
          {{"lp_not", kLpNot},
           {"p1_not", kSetteNot},
           {"cons", kCons},
           {"and", kAnd},
           {"or", kOr},
           {"imp_e", kImpE},
           {"imp_p", kImpP},
           {"imp_w", kImpW},
           {"imp_bl", kImpBL},
           {"imp_f", kImpF}}};
}

}  // namespace oracle
