#include "cftree/isomorphism.hpp"

#include <algorithm>
#include <deque>

#include "cftree/rerooting.hpp"

namespace cftree {

std::vector<std::pair<StateId, StateId>> EquivalenceTable::pairs() const
{
    std::vector<std::pair<StateId, StateId>> result;
    for (StateId p = 0; p < a_states_; ++p)
        for (StateId q = 0; q < b_states_; ++q)
            if (equivalent(p, q))
                result.emplace_back(p, q);
    return result;
}

InvolutiveAlphabet common_alphabet(const PDfa& a, const PDfa& b)
{
    return a.alphabet() == b.alphabet() ? a.alphabet() : merge_alphabets(a.alphabet(), b.alphabet());
}

namespace {

std::pair<PDfa, PDfa> over_common(const PDfa& a, const PDfa& b)
{
    if (a.alphabet() == b.alphabet())
        return {a, b};
    auto merged = merge_alphabets(a.alphabet(), b.alphabet());
    return {a.over(merged), b.over(merged)};
}

void require_reduced(const PDfa& d, const char* which)
{
    if (auto check = check_reduced(d); !check.reduced) {
        const auto& [x, y] = *check.offending;
        throw Error(ErrorCode::NotReduced, std::string(which) + " automaton is not reduced: path '" +
                                               d.state_name(x.from) + "' -" + d.alphabet().name(x.label) + "-> '" +
                                               d.state_name(x.to) + "' -" + d.alphabet().name(y.label) + "-> '" +
                                               d.state_name(y.to) + "'");
    }
}

void require_state(const PDfa& d, StateId s)
{
    if (s >= d.state_count())
        throw Error(ErrorCode::UnknownState, "state id out of range");
}

// Same-alphabet table.
EquivalenceTable compute_table(const PDfa& a, const PDfa& b)
{
    const std::size_t na = a.state_count(), nb = b.state_count(), letters = a.alphabet().size();
    auto index = [nb](StateId p, StateId q) { return static_cast<std::size_t>(p) * nb + q; };

    // predecessors[letter][state]
    auto predecessors = [letters](const PDfa& d) {
        std::vector<std::vector<std::vector<StateId>>> pred(letters, std::vector<std::vector<StateId>>(d.state_count()));
        for (const auto& e : d.edges())
            pred[e.label][e.to].push_back(e.from);
        return pred;
    };
    auto pred_a = predecessors(a);
    auto pred_b = predecessors(b);

    std::vector<bool> distinct(na * nb, false);
    std::vector<std::pair<StateId, StateId>> queue;
    for (StateId p = 0; p < na; ++p)
        for (StateId q = 0; q < nb; ++q)
            for (LetterId c = 0; c < letters; ++c)
                if (a.reads(p, c) != b.reads(q, c)) {
                    distinct[index(p, q)] = true;
                    queue.emplace_back(p, q);
                    break;
                }
    while (!queue.empty()) {
        auto [p, q] = queue.back();
        queue.pop_back();
        for (LetterId c = 0; c < letters; ++c)
            for (auto pp : pred_a[c][p])
                for (auto qq : pred_b[c][q])
                    if (!distinct[index(pp, qq)]) {
                        distinct[index(pp, qq)] = true;
                        queue.emplace_back(pp, qq);
                    }
    }
    distinct.flip();
    return EquivalenceTable(na, nb, std::move(distinct));
}

} // namespace

EquivalenceTable equivalence_table(const PDfa& a, const PDfa& b)
{
    auto [x, y] = over_common(a, b);
    return compute_table(x, y);
}

RootedVerdict iso_rooted(const PDfa& a, StateId p, const PDfa& b, StateId q)
{
    require_state(a, p);
    require_state(b, q);
    require_reduced(a, "first");
    require_reduced(b, "second");
    auto [x, y] = over_common(a, b);
    const std::size_t nb = y.state_count(), letters = x.alphabet().size();

    // BFS over the reachable part of the product; parents rebuild the word.
    auto index = [nb](StateId s, StateId t) { return static_cast<std::size_t>(s) * nb + t; };
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(x.state_count() * nb, kUnseen);
    std::vector<LetterId> via(x.state_count() * nb, 0);
    std::deque<std::pair<StateId, StateId>> queue{{p, q}};
    parent[index(p, q)] = index(p, q);

    while (!queue.empty()) {
        auto [s, t] = queue.front();
        queue.pop_front();
        for (LetterId c = 0; c < letters; ++c) {
            auto sc = x.next(s, c), tc = y.next(t, c);
            if ((sc == kNoState) != (tc == kNoState)) {
                Witness w;
                w.accepted_by = sc != kNoState ? Side::First : Side::Second;
                w.word.push_back(c);
                for (auto at = index(s, t); at != index(p, q); at = parent[at])
                    w.word.push_back(via[at]);
                std::reverse(w.word.begin(), w.word.end());
                return {false, std::move(w)};
            }
            if (sc == kNoState || parent[index(sc, tc)] != kUnseen)
                continue;
            parent[index(sc, tc)] = index(s, t);
            via[index(sc, tc)] = c;
            queue.emplace_back(sc, tc);
        }
    }
    return {true, std::nullopt};
}

NonRootedVerdict iso_nonrooted(const PDfa& a, StateId p_root, const PDfa& b, StateId q_root)
{
    require_state(a, p_root);
    require_state(b, q_root);
    require_reduced(a, "first");
    require_reduced(b, "second");
    auto [x_full, y_full] = over_common(a, b);
    const PDfa x = trim(x_full, p_root);
    const PDfa y = trim(y_full, q_root);
    const StateId p0 = x.require_state(a.state_name(p_root));
    const StateId q0 = y.require_state(b.state_name(q_root));
    const auto table = compute_table(x, y);

    const std::size_t nq = y.state_count(), letters = x.alphabet().size(), backs = letters + 1;
    const LetterId kNone = static_cast<LetterId>(letters);

    std::vector<LetterSet> out_x(x.state_count()), out_y(nq);
    for (StateId s = 0; s < x.state_count(); ++s)
        out_x[s] = out_set(x, s);
    for (StateId s = 0; s < nq; ++s)
        out_y[s] = out_set(y, s);
    std::vector<std::vector<Edge>> incoming(nq);
    for (const auto& e : y.edges())
        incoming[e.to].push_back(e);

    auto index = [&](StateId p, StateId q, LetterId back) {
        return (static_cast<std::size_t>(p) * nq + q) * backs + back;
    };
    auto without = [](const LetterSet& s, LetterId back) {
        LetterSet r;
        for (auto c : s)
            if (c != back)
                r.push_back(c);
        return r;
    };
    // all b ∈ letters: (p·b, q·b) equivalent
    auto children_match = [&](StateId p, StateId q, const LetterSet& letters_to_check) {
        for (auto c : letters_to_check)
            if (!x.reads(p, c) || !table.equivalent(x.next(p, c), y.next(q, c)))
                return false;
        return true;
    };

    struct Config {
        StateId p, q;
        LetterId back;
    };
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    constexpr std::size_t kInitial = static_cast<std::size_t>(-2);
    std::vector<std::size_t> parent(x.state_count() * nq * backs, kUnseen);
    std::deque<Config> queue;
    for (StateId q = 0; q < nq; ++q) {
        parent[index(p0, q, kNone)] = kInitial;
        queue.push_back({p0, q, kNone});
    }

    while (!queue.empty()) {
        const Config c = queue.front();
        queue.pop_front();
        const auto remaining = without(out_y[c.q], c.back);
        const bool below_ok = children_match(c.p, c.q, remaining);
        if (c.q == q0 && out_x[c.p] == remaining && below_ok) {
            // Step letters along the parent chain spell the root-to-v word.
            NonRootedWitness w;
            for (auto at = index(c.p, c.q, c.back); parent[at] != kInitial; at = parent[at])
                w.word.push_back(static_cast<LetterId>(at % backs));
            return {true, std::move(w)};
        }
        if (!below_ok)
            continue;
        for (const auto& e : incoming[c.q]) {
            auto expected = remaining;
            auto up = x.alphabet().inverse(e.label);
            if (std::find(expected.begin(), expected.end(), up) == expected.end()) {
                expected.push_back(up);
                std::sort(expected.begin(), expected.end());
            }
            if (out_x[c.p] != expected)
                continue;
            const Config n{x.next(c.p, up), e.from, e.label};
            auto at = index(n.p, n.q, n.back);
            if (parent[at] != kUnseen)
                continue;
            parent[at] = index(c.p, c.q, c.back);
            queue.push_back(n);
        }
    }
    return {false, std::nullopt};
}

bool verify_nonrooted_witness(const PDfa& a, StateId p_root, const PDfa& b, StateId q_root, const Word& w)
{
    require_state(a, p_root);
    require_state(b, q_root);
    auto merged = common_alphabet(a, b);
    PDfa y = b.alphabet() == merged ? b : b.over(merged);
    if (y.run(q_root, w) == kNoState)
        throw Error(ErrorCode::NotInLanguage, "witness word is not readable from '" + b.state_name(q_root) + "'");
    auto [rerooted, root] = reroot_along_word(y, q_root, w);
    return iso_rooted(a, p_root, rerooted, root).isomorphic;
}

} // namespace cftree
