#pragma once

#include <utility>
#include <vector>

#include "cftree/automaton.hpp"
#include "cftree/unfolding.hpp"

namespace cftree {

/// Minimal reduced pDFA generating a complete finite tree: one state per
/// rooted-isomorphism class of end-cones. States are named c0, c1, ... in
/// breadth-first order of their first node; c0 is the root class.
/// The tree must be complete (not a truncated disc). Throws NotDeterministic.
std::pair<PDfa, StateId> compress_finite_tree(const DiscTree& t);

struct Quotient {
    PDfa automaton;
    std::vector<StateId> class_of; // original state -> quotient state
};

/// Quotient by language equivalence. Each class keeps the name of its
/// smallest member; classes are ordered by that member.
Quotient quotient(const PDfa& d);
inline PDfa minimize(const PDfa& d) { return quotient(d).automaton; }

} // namespace cftree
