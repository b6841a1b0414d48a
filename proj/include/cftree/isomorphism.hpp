#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cftree/automaton.hpp"

namespace cftree {

/// The relation {(p, q) : L(p) = L(q)} between the states of two pDFAs.
class EquivalenceTable {
public:
    EquivalenceTable(std::size_t a_states, std::size_t b_states, std::vector<bool> equal)
        : a_states_(a_states), b_states_(b_states), equal_(std::move(equal))
    {
    }

    bool equivalent(StateId p, StateId q) const { return equal_[static_cast<std::size_t>(p) * b_states_ + q]; }
    std::size_t a_states() const noexcept { return a_states_; }
    std::size_t b_states() const noexcept { return b_states_; }
    std::vector<std::pair<StateId, StateId>> pairs() const;

private:
    std::size_t a_states_;
    std::size_t b_states_;
    std::vector<bool> equal_;
};

/// Greatest relation closed under "equal out-sets and equivalent successors",
/// computed by backward propagation of distinguishability. The alphabets are
/// merged first; no reducedness requirement.
EquivalenceTable equivalence_table(const PDfa& a, const PDfa& b);

/// merge_alphabets(a.alphabet(), b.alphabet()). All words exchanged with the
/// isomorphism routines are over this alphabet.
InvolutiveAlphabet common_alphabet(const PDfa& a, const PDfa& b);

enum class Side { First, Second };

struct Witness {
    Word word;
    Side accepted_by = Side::First; // the side whose designated state reads `word`
};

struct RootedVerdict {
    bool isomorphic = false;
    std::optional<Witness> witness; // shortest word in the symmetric difference
};

/// Decides Γ(p) ≅ Γ(q) as rooted involutive trees, i.e. L(p) = L(q).
/// Throws NotReduced, UnknownState.
RootedVerdict iso_rooted(const PDfa& a, StateId p, const PDfa& b, StateId q);

struct NonRootedWitness {
    Word word; // root-to-v path in Γ(q̌) with Γ(p̌) ≅ Γ(q̌, v) rooted
};

struct NonRootedVerdict {
    bool isomorphic = false;
    std::optional<NonRootedWitness> witness;
};

/// Decides Γ(p̌) ≅ Γ(q̌) as non-rooted trees by breadth-first search over the
/// configurations (p, q, back) of the predecessor-walk procedure.
/// Throws NotReduced, UnknownState.
NonRootedVerdict iso_nonrooted(const PDfa& a, StateId p_root, const PDfa& b, StateId q_root);

/// Reroots b along w and checks rooted isomorphism with (a, p̌).
/// Throws NotInLanguage when w ∉ L(q̌).
bool verify_nonrooted_witness(const PDfa& a, StateId p_root, const PDfa& b, StateId q_root, const Word& w);

} // namespace cftree
