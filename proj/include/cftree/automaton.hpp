#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cftree/alphabet.hpp"
#include "cftree/error.hpp"

namespace cftree {

using StateId = std::uint32_t;
using TransitionId = std::int64_t;
using LetterSet = std::vector<LetterId>; // sorted ascending

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// mNFA transition record. Two transitions may agree on everything but `id`.
struct Transition {
    TransitionId id = 0;
    StateId from = 0;
    LetterId label = 0;
    StateId to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Deterministic transition p -a-> q.
struct Edge {
    StateId from = 0;
    LetterId label = 0;
    StateId to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Multi-edge nondeterministic automaton (Q, A, T, α, λ, ω).
///
/// Construction does not validate; call validate_mnfa() on data that did not
/// come from this library. Every algorithm assumes a valid automaton.
class MNfa {
public:
    MNfa() = default;
    MNfa(InvolutiveAlphabet alphabet, std::vector<std::string> states, std::vector<Transition> transitions);

    const InvolutiveAlphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::string& state_name(StateId s) const { return states_.at(s); }
    std::optional<StateId> find_state(std::string_view name) const;
    StateId require_state(std::string_view name) const;

    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    /// Indices into transitions() of the transitions starting in `s`, in order.
    const std::vector<std::size_t>& outgoing(StateId s) const { return outgoing_.at(s); }
    TransitionId max_transition_id() const noexcept;

private:
    InvolutiveAlphabet alphabet_;
    std::vector<std::string> states_;
    std::vector<Transition> transitions_;
    std::vector<std::vector<std::size_t>> outgoing_;
    std::map<std::string, StateId, std::less<>> index_;
};

/// Partial deterministic automaton; the transition function is a dense
/// (state, letter) table so determinism holds by representation.
class PDfa {
public:
    PDfa() = default;
    /// Throws NotDeterministic if two edges share (from, label) with different
    /// targets, UnknownState / UnknownLetter on out-of-range ids.
    PDfa(InvolutiveAlphabet alphabet, std::vector<std::string> states, const std::vector<Edge>& edges);

    const InvolutiveAlphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::string& state_name(StateId s) const { return states_.at(s); }
    std::optional<StateId> find_state(std::string_view name) const;
    StateId require_state(std::string_view name) const;

    /// p·a, or kNoState when a ∉ out(p).
    StateId next(StateId p, LetterId a) const { return table_[static_cast<std::size_t>(p) * alphabet_.size() + a]; }
    bool reads(StateId p, LetterId a) const { return next(p, a) != kNoState; }
    /// Runs `w` from `p`; kNoState if the run leaves the domain.
    StateId run(StateId p, const Word& w) const;

    /// All transitions ordered by (from, label).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// The same automaton over a superset alphabet (letters matched by name).
    PDfa over(const InvolutiveAlphabet& superset) const;
    /// The mNFA interpretation; transition ids follow edges() order.
    MNfa as_mnfa() const;

private:
    InvolutiveAlphabet alphabet_;
    std::vector<std::string> states_;
    std::vector<StateId> table_;
    std::size_t edge_count_ = 0;
    std::map<std::string, StateId, std::less<>> index_;
};

struct ValidationIssue {
    std::string code;   // e.g. "UNKNOWN_LABEL"
    std::string detail;
    std::vector<std::string> ids;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
};

/// Reports dangling state references, labels outside the alphabet, duplicate
/// transition ids and duplicate state names. Never throws.
ValidationReport validate_mnfa(const MNfa& m);

class NotDeterministicError : public Error {
public:
    NotDeterministicError(TransitionId first, TransitionId second, const std::string& what)
        : Error(ErrorCode::NotDeterministic, what), first_(first), second_(second)
    {
    }
    TransitionId first() const noexcept { return first_; }
    TransitionId second() const noexcept { return second_; }

private:
    TransitionId first_;
    TransitionId second_;
};

/// First pair (τ, τ') of distinct transitions with equal start and label.
std::optional<std::pair<TransitionId, TransitionId>> nondeterministic_pair(const MNfa& m);
/// Throws NotDeterministicError when nondeterministic_pair() finds a witness.
PDfa as_pdfa(const MNfa& m);

struct ReducedCheck {
    bool reduced = true;
    std::optional<std::pair<Edge, Edge>> offending; // p -a-> q, q -a⁻¹-> r
};

ReducedCheck check_reduced(const PDfa& d);
inline bool is_reduced(const PDfa& d) { return check_reduced(d).reduced; }

/// Letters readable from p. Throws UnknownState.
LetterSet out_set(const PDfa& d, StateId p);

/// Restriction to the states reachable from `root`, in their original order.
MNfa trim(const MNfa& m, StateId root);
PDfa trim(const PDfa& d, StateId root);

/// States reachable from `root` (flags indexed by state).
std::vector<bool> reachable_states(const PDfa& d, StateId root);

} // namespace cftree
