#pragma once

#include <random>
#include <string>
#include <vector>

#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace gen {

/// Random formula over the logic's signature with at most `depth` levels.
inline mvlab::Formula formula(const mvlab::Logic& logic, std::mt19937& rng, int depth,
                              const std::vector<std::string>& atoms = {"A", "B", "C"}) {
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
  if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    return mvlab::Formula::atom(atoms[pick_atom(rng)]);
  }
  const auto& sig = logic.signature();
  const auto& c = sig[std::uniform_int_distribution<std::size_t>(0, sig.size() - 1)(rng)];
  std::vector<mvlab::Formula> kids;
  for (int i = 0; i < c.arity(); ++i) kids.push_back(formula(logic, rng, depth - 1, atoms));
  return mvlab::Formula::apply(c.name(), kids);
}

}  // namespace gen
