#include "cftree/rerooting.hpp"

#include <algorithm>

namespace cftree {

namespace {

std::string fresh_name(const MNfa& m, std::string base)
{
    while (m.find_state(base))
        base += '\'';
    return base;
}

} // namespace

RerootResult reroot_step(const MNfa& m, StateId root, TransitionId sigma0, std::size_t step)
{
    if (root >= m.state_count())
        throw Error(ErrorCode::UnknownState, "reroot root out of range");
    const auto& ts = m.transitions();
    auto found = std::find_if(ts.begin(), ts.end(), [&](const Transition& t) { return t.id == sigma0; });
    if (found == ts.end())
        throw Error(ErrorCode::InvalidArgument, "unknown transition id " + std::to_string(sigma0));
    if (found->from != root)
        throw Error(ErrorCode::InvalidArgument,
                    "transition " + std::to_string(sigma0) + " does not start at '" + m.state_name(root) + "'");
    const Transition moved = *found;

    auto states = m.states();
    auto tag = "@" + std::to_string(step);
    auto p_name = fresh_name(m, m.state_name(root) + tag + "p'");
    auto q_name = fresh_name(m, m.state_name(moved.to) + tag + "q'");
    if (q_name == p_name)
        q_name += '\'';
    const auto p_prime = static_cast<StateId>(states.size());
    states.push_back(p_name);
    const auto q_prime = static_cast<StateId>(states.size());
    states.push_back(q_name);

    auto out = ts;
    auto next_id = m.max_transition_id() + 1;
    for (auto i : m.outgoing(root))
        if (ts[i].id != sigma0)
            out.push_back({next_id++, p_prime, ts[i].label, ts[i].to});
    out.push_back({next_id++, q_prime, m.alphabet().inverse(moved.label), p_prime});
    for (auto i : m.outgoing(moved.to))
        out.push_back({next_id++, q_prime, ts[i].label, ts[i].to});

    return {MNfa(m.alphabet(), std::move(states), std::move(out)), q_prime, p_prime};
}

std::pair<PDfa, StateId> reroot_along_word(const PDfa& d, StateId root, const Word& w)
{
    if (root >= d.state_count())
        throw Error(ErrorCode::UnknownState, "reroot root out of range");
    if (!is_reduced(d))
        throw Error(ErrorCode::NotReduced, "rerooting requires a reduced pDFA");
    if (d.run(root, w) == kNoState)
        throw Error(ErrorCode::NotInLanguage,
                    "word '" + format_word(d.alphabet(), w) + "' is not readable from '" + d.state_name(root) + "'");

    MNfa m = trim(d.as_mnfa(), root);
    StateId current = m.require_state(d.state_name(root));
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& out = m.outgoing(current);
        auto edge = std::find_if(out.begin(), out.end(),
                                 [&](std::size_t t) { return m.transitions()[t].label == w[i]; });
        if (edge == out.end())
            throw Error(ErrorCode::Internal, "rerooted automaton lost a transition of the word");
        auto step = reroot_step(m, current, m.transitions()[*edge].id, i);
        auto name = step.automaton.state_name(step.new_root);
        m = trim(step.automaton, step.new_root);
        current = m.require_state(name);
        if (nondeterministic_pair(m))
            throw Error(ErrorCode::Internal, "rerooting produced a nondeterministic automaton");
    }
    PDfa result = as_pdfa(m);
    return {std::move(result), current};
}

} // namespace cftree
