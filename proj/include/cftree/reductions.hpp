#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cftree/automaton.hpp"

namespace cftree {

/// Directed graph on nodes 0..n-1 with out-degree at most two. Parallel
/// edges count towards the out-degree.
struct Gap2Instance {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws InvalidArgument on n == 0, out-of-range nodes or out-degree > 2.
void validate_gap2(const Gap2Instance& g);

/// Plain BFS reachability 0 ->* n-1.
bool gap2_has_path(const Gap2Instance& g);

struct RootedPair {
    PDfa a;
    StateId root_a = 0;
    PDfa b;
    StateId root_b = 0;
};

/// Reduced pDFAs over {0,1}^{±1} with L(root_a) = L(root_b) iff g has no
/// path from 0 to n-1. Requires n >= 2.
RootedPair reduce_gap2_to_rooted_iso(const Gap2Instance& g);

inline constexpr const char* kTopLetter = "TOP";

/// Adds a fresh letter TOP and new roots p' -TOP-> p, q' -TOP-> q, so that
/// non-rooted isomorphism of the results is rooted isomorphism of the inputs.
/// Both outputs share the merged alphabet. Throws DuplicateLetter if TOP or
/// its inverse is already a letter.
RootedPair reduce_rooted_to_nonrooted(const PDfa& a, StateId p, const PDfa& b, StateId q);

} // namespace cftree
