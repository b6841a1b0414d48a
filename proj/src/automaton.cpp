#include "cftree/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace cftree {

namespace {

std::map<std::string, StateId, std::less<>> index_states(const std::vector<std::string>& states)
{
    std::map<std::string, StateId, std::less<>> index;
    for (StateId s = 0; s < states.size(); ++s)
        index.emplace(states[s], s); // first occurrence wins; duplicates are a validation issue
    return index;
}

std::optional<StateId> lookup(const std::map<std::string, StateId, std::less<>>& index, std::string_view name)
{
    auto it = index.find(name);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

} // namespace

MNfa::MNfa(InvolutiveAlphabet alphabet, std::vector<std::string> states, std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), states_(std::move(states)), transitions_(std::move(transitions)),
      outgoing_(states_.size()), index_(index_states(states_))
{
    for (std::size_t i = 0; i < transitions_.size(); ++i)
        if (transitions_[i].from < states_.size())
            outgoing_[transitions_[i].from].push_back(i);
}

std::optional<StateId> MNfa::find_state(std::string_view name) const { return lookup(index_, name); }

StateId MNfa::require_state(std::string_view name) const
{
    if (auto s = find_state(name))
        return *s;
    throw Error(ErrorCode::UnknownState, "unknown state '" + std::string(name) + "'");
}

TransitionId MNfa::max_transition_id() const noexcept
{
    TransitionId result = -1;
    for (const auto& t : transitions_)
        result = std::max(result, t.id);
    return result;
}

PDfa::PDfa(InvolutiveAlphabet alphabet, std::vector<std::string> states, const std::vector<Edge>& edges)
    : alphabet_(std::move(alphabet)), states_(std::move(states)),
      table_(states_.size() * alphabet_.size(), kNoState), index_(index_states(states_))
{
    for (const auto& e : edges) {
        if (e.from >= states_.size() || e.to >= states_.size())
            throw Error(ErrorCode::UnknownState, "transition references a state outside the automaton");
        if (e.label >= alphabet_.size())
            throw Error(ErrorCode::UnknownLetter, "transition label outside the alphabet");
        auto& slot = table_[static_cast<std::size_t>(e.from) * alphabet_.size() + e.label];
        if (slot == kNoState) {
            slot = e.to;
            ++edge_count_;
        } else if (slot != e.to) {
            throw Error(ErrorCode::NotDeterministic, "state '" + states_[e.from] + "' has two targets for letter '" +
                                                         alphabet_.name(e.label) + "'");
        }
    }
}

std::optional<StateId> PDfa::find_state(std::string_view name) const { return lookup(index_, name); }

StateId PDfa::require_state(std::string_view name) const
{
    if (auto s = find_state(name))
        return *s;
    throw Error(ErrorCode::UnknownState, "unknown state '" + std::string(name) + "'");
}

StateId PDfa::run(StateId p, const Word& w) const
{
    for (auto a : w) {
        if (p == kNoState)
            break;
        p = next(p, a);
    }
    return p;
}

std::vector<Edge> PDfa::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (StateId p = 0; p < states_.size(); ++p)
        for (LetterId a = 0; a < alphabet_.size(); ++a)
            if (auto q = next(p, a); q != kNoState)
                result.push_back({p, a, q});
    return result;
}

PDfa PDfa::over(const InvolutiveAlphabet& superset) const
{
    auto map = letter_translation(alphabet_, superset);
    auto es = edges();
    for (auto& e : es)
        e.label = map[e.label];
    return PDfa(superset, states_, es);
}

MNfa PDfa::as_mnfa() const
{
    std::vector<Transition> ts;
    TransitionId id = 0;
    for (const auto& e : edges())
        ts.push_back({id++, e.from, e.label, e.to});
    return MNfa(alphabet_, states_, std::move(ts));
}

ValidationReport validate_mnfa(const MNfa& m)
{
    ValidationReport report;
    const auto n = m.state_count();
    std::set<std::string> names;
    for (const auto& s : m.states())
        if (!names.insert(s).second)
            report.issues.push_back({"DUPLICATE_STATE", "state name '" + s + "' occurs more than once", {s}});
    std::set<TransitionId> ids;
    for (const auto& t : m.transitions()) {
        auto tid = std::to_string(t.id);
        if (!ids.insert(t.id).second)
            report.issues.push_back({"DUPLICATE_TRANSITION_ID", "transition id " + tid + " is used twice", {tid}});
        if (t.from >= n)
            report.issues.push_back({"DANGLING_STATE", "transition " + tid + " starts outside the state set", {tid}});
        if (t.to >= n)
            report.issues.push_back({"DANGLING_STATE", "transition " + tid + " ends outside the state set", {tid}});
        if (t.label >= m.alphabet().size())
            report.issues.push_back({"UNKNOWN_LABEL", "transition " + tid + " has a label outside the alphabet", {tid}});
    }
    return report;
}

std::optional<std::pair<TransitionId, TransitionId>> nondeterministic_pair(const MNfa& m)
{
    for (StateId s = 0; s < m.state_count(); ++s) {
        std::unordered_map<LetterId, std::size_t> first;
        for (auto i : m.outgoing(s)) {
            const auto& t = m.transitions()[i];
            auto [it, fresh] = first.emplace(t.label, i);
            if (!fresh)
                return std::pair{m.transitions()[it->second].id, t.id};
        }
    }
    return std::nullopt;
}

PDfa as_pdfa(const MNfa& m)
{
    if (auto pair = nondeterministic_pair(m))
        throw NotDeterministicError(pair->first, pair->second,
                                    "transitions " + std::to_string(pair->first) + " and " +
                                        std::to_string(pair->second) + " share start and label");
    std::vector<Edge> edges;
    edges.reserve(m.transitions().size());
    for (const auto& t : m.transitions())
        edges.push_back({t.from, t.label, t.to});
    return PDfa(m.alphabet(), m.states(), edges);
}

ReducedCheck check_reduced(const PDfa& d)
{
    const auto& alpha = d.alphabet();
    for (StateId p = 0; p < d.state_count(); ++p)
        for (LetterId a = 0; a < alpha.size(); ++a) {
            auto q = d.next(p, a);
            if (q == kNoState)
                continue;
            if (auto r = d.next(q, alpha.inverse(a)); r != kNoState)
                return {false, std::pair{Edge{p, a, q}, Edge{q, alpha.inverse(a), r}}};
        }
    return {};
}

LetterSet out_set(const PDfa& d, StateId p)
{
    if (p >= d.state_count())
        throw Error(ErrorCode::UnknownState, "state id out of range");
    LetterSet result;
    for (LetterId a = 0; a < d.alphabet().size(); ++a)
        if (d.reads(p, a))
            result.push_back(a);
    return result;
}

MNfa trim(const MNfa& m, StateId root)
{
    if (root >= m.state_count())
        throw Error(ErrorCode::UnknownState, "trim root out of range");
    std::vector<bool> seen(m.state_count(), false);
    std::deque<StateId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        for (auto i : m.outgoing(s)) {
            auto to = m.transitions()[i].to;
            if (!seen[to]) {
                seen[to] = true;
                queue.push_back(to);
            }
        }
    }
    std::vector<StateId> renumber(m.state_count(), kNoState);
    std::vector<std::string> states;
    for (StateId s = 0; s < m.state_count(); ++s)
        if (seen[s]) {
            renumber[s] = static_cast<StateId>(states.size());
            states.push_back(m.state_name(s));
        }
    std::vector<Transition> ts;
    for (const auto& t : m.transitions())
        if (seen[t.from])
            ts.push_back({t.id, renumber[t.from], t.label, renumber[t.to]});
    return MNfa(m.alphabet(), std::move(states), std::move(ts));
}

std::vector<bool> reachable_states(const PDfa& d, StateId root)
{
    if (root >= d.state_count())
        throw Error(ErrorCode::UnknownState, "state id out of range");
    std::vector<bool> seen(d.state_count(), false);
    std::vector<StateId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (LetterId a = 0; a < d.alphabet().size(); ++a)
            if (auto t = d.next(s, a); t != kNoState && !seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
    }
    return seen;
}

PDfa trim(const PDfa& d, StateId root)
{
    auto seen = reachable_states(d, root);
    std::vector<StateId> renumber(d.state_count(), kNoState);
    std::vector<std::string> states;
    for (StateId s = 0; s < d.state_count(); ++s)
        if (seen[s]) {
            renumber[s] = static_cast<StateId>(states.size());
            states.push_back(d.state_name(s));
        }
    std::vector<Edge> edges;
    for (const auto& e : d.edges())
        if (seen[e.from])
            edges.push_back({renumber[e.from], e.label, renumber[e.to]});
    return PDfa(d.alphabet(), std::move(states), edges);
}

} // namespace cftree
