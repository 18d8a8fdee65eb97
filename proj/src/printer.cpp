#include <cctype>

#include "mvlab/error.hpp"
#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Printer {
 public:
  explicit Printer(const Logic& logic) : logic_(logic) {}

  std::string operator()(const Formula& f) const {
    if (f.is_atom()) return f.label();
    const Connective& c = logic_.connective(f.label());
    const Notation& n = c.notation();
    if (n.fixity == Fixity::prefix) {
      const Formula& child = f.children()[0];
      std::string inner = (*this)(child);
      if (is_infix(child)) inner = "(" + inner + ")";
      return n.symbol + (needs_space(n.symbol, inner) ? " " : "") + inner;
    }
    const Formula& lhs = f.children()[0];
    const Formula& rhs = f.children()[1];
    std::string l = (*this)(lhs);
    std::string r = (*this)(rhs);
    if (needs_parens(n, lhs, false)) l = "(" + l + ")";
    if (needs_parens(n, rhs, true)) r = "(" + r + ")";
    return l + " " + n.symbol + " " + r;
  }

 private:
  bool is_infix(const Formula& f) const {
    return !f.is_atom() && logic_.connective(f.label()).notation().fixity == Fixity::infix;
  }

  bool needs_parens(const Notation& parent, const Formula& child, bool right) const {
    if (!is_infix(child)) return false;
    const Notation& cn = logic_.connective(child.label()).notation();
    if (cn.precedence != parent.precedence) return cn.precedence < parent.precedence;
    return right || parent.assoc == Assoc::none || cn.assoc == Assoc::none;
  }

  // A longer symbol would otherwise swallow the start of the operand.
  bool needs_space(const std::string& symbol, const std::string& operand) const {
    if (operand.empty()) return false;
    if (word_char(symbol.back()) && word_char(operand.front())) return true;
    if (word_char(symbol.front())) return false;
    const std::string joined = symbol + operand;
    for (const Connective& c : logic_.signature()) {
      const std::string& s = c.symbol();
      if (s.size() > symbol.size() && joined.compare(0, s.size(), s) == 0) return true;
    }
    return false;
  }

  const Logic& logic_;
};

}  // namespace

std::string print(const Logic& logic, const Formula& formula) { return Printer(logic)(formula); }

std::string print(const Logic& logic, const Sequent& sequent) {
  std::string out;
  for (std::size_t i = 0; i < sequent.premises.size(); ++i) {
    if (i) out += ", ";
    out += print(logic, sequent.premises[i]);
  }
  out += out.empty() ? "=> " : " => ";
  return out + print(logic, sequent.conclusion);
}

}  // namespace mvlab
