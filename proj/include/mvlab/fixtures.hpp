#pragma once

#include <string_view>
#include <vector>

#include "mvlab/logic.hpp"

namespace mvlab {

/// The values {T, B, F} shared by every three-valued paraconsistent fixture.
std::vector<TruthValue> three_values();

/// Builds a connective from a compact table such as "FBT" (one letter per
/// entry, row-major over `domain`).
Connective make_connective(std::string name, Notation notation, int arity,
                           const std::vector<TruthValue>& domain, std::string_view letters);

Notation prefix(std::string symbol);
Notation infix(std::string symbol, int precedence, Assoc assoc = Assoc::left);

namespace connectives {

// Over {T, B, F}.
Connective lp_negation();          // ~
Connective sette_negation();       // -
Connective consistency();          // o
Connective lattice_conjunction();  // &
Connective lattice_disjunction();  // |
Connective e_conditional();        // >
Connective e_biconditional(const Connective& conj);  // <>
Connective p_conjunction();        // &
Connective p_disjunction();        // |
Connective p_conditional(std::string symbol = ">");
Connective w_conditional();        // >w
Connective bl_conditional();       // >bl
Connective f_conditional();        // >f
Connective lp_material_conditional();  // > as ~A | B

}  // namespace connectives

/// LP, M3V, CSL3, cCSL3, C0.2, P1, P2, cP2 and the toolbox logic, in that
/// order.
const std::vector<Logic>& builtin_logics();

/// Case-insensitive lookup by name ("cP2", "M3V", ...). Throws SemanticError.
const Logic& builtin_logic(std::string_view name);

/// The E-conditional computed from its positive and negative membership
/// clauses. Rejects N.
TruthValue dunn_conditional(TruthValue a, TruthValue b);

}  // namespace mvlab
