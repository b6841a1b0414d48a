#pragma once

#include <cstddef>
#include <utility>

#include "cftree/automaton.hpp"

namespace cftree {

struct RerootResult {
    MNfa automaton;
    StateId new_root = 0;  // q'
    StateId copy_of_root = 0; // p'
};

/// Moves the root of Γ(root) across the transition `sigma0`: adds a copy p'
/// of `root` without sigma0, and a copy q' of the target of sigma0 with an
/// extra edge back to p' under the inverse letter. Γ(q') is Γ(root) rooted at
/// the sigma0-child. `step` only affects the names of the fresh states.
/// Throws InvalidArgument if sigma0 is unknown or does not start at root.
RerootResult reroot_step(const MNfa& m, StateId root, TransitionId sigma0, std::size_t step = 0);

/// Reroots a reduced pDFA along w ∈ L(root), one edge at a time, trimming
/// after each step. The returned state generates Γ(root) rooted at node w.
/// Throws NotReduced, NotInLanguage.
std::pair<PDfa, StateId> reroot_along_word(const PDfa& d, StateId root, const Word& w);

} // namespace cftree
