#include "mvlab/formula.hpp"

#include <functional>

#include "mvlab/error.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->label = std::move(name);
  node->atom = true;
  return Formula(std::move(node));
}

Formula Formula::apply(std::string connective, std::vector<Formula> children) {
  if (children.empty()) throw SemanticError("connective '" + connective + "' applied to nothing");
  auto node = std::make_shared<Node>();
  node->label = std::move(connective);
  node->children = std::move(children);
  return Formula(std::move(node));
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.is_atom()) {
      out.insert(f.label());
      return;
    }
    for (const Formula& c : f.children()) walk(c);
  };
  walk(*this);
  return out;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const Formula& c : children()) n += c.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->atom != b.node_->atom || a.node_->label != b.node_->label ||
      a.node_->children.size() != b.node_->children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

Formula instantiate(const Schema& schema, const std::map<std::string, Formula>& mapping) {
  std::function<Formula(const Formula&)> go = [&](const Formula& f) -> Formula {
    if (f.is_atom()) {
      auto it = mapping.find(f.label());
      if (it == mapping.end()) throw SemanticError("metavariable '" + f.label() + "' has no binding");
      return it->second;
    }
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const Formula& c : f.children()) kids.push_back(go(c));
    return Formula::apply(f.label(), std::move(kids));
  };
  return go(schema.body);
}

void check_well_formed(const Logic& logic, const Formula& formula) {
  if (formula.is_atom()) return;
  const Connective& c = logic.connective(formula.label());
  if (static_cast<std::size_t>(c.arity()) != formula.children().size()) {
    throw SemanticError("connective '" + c.name() + "' has arity " + std::to_string(c.arity()) +
                        " but is applied to " + std::to_string(formula.children().size()) + " argument(s)");
  }
  for (const Formula& child : formula.children()) check_well_formed(logic, child);
}

}  // namespace mvlab
