#include "cftree/compression.hpp"

#include <algorithm>
#include <map>

#include "cftree/isomorphism.hpp"

namespace cftree {

std::pair<PDfa, StateId> compress_finite_tree(const DiscTree& t)
{
    if (!is_deterministic(t))
        throw Error(ErrorCode::NotDeterministic, "tree is not deterministic after involutive closure");

    // End-cone classes bottom-up; parents always precede children.
    std::map<std::vector<std::pair<LetterId, int>>, int> ids;
    std::vector<int> cls(t.size());
    for (std::size_t v = t.size(); v-- > 0;) {
        std::vector<std::pair<LetterId, int>> key;
        for (auto c : t.node(v).children)
            key.emplace_back(t.node(c).letter, cls[c]);
        std::sort(key.begin(), key.end());
        cls[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }

    // Breadth-first node order fixes state numbering and representatives.
    std::vector<std::size_t> order{DiscTree::root()};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto c : t.node(order[i]).children)
            order.push_back(c);

    std::vector<StateId> state_of_class(ids.size(), kNoState);
    std::vector<std::size_t> representative;
    for (auto v : order)
        if (state_of_class[cls[v]] == kNoState) {
            state_of_class[cls[v]] = static_cast<StateId>(representative.size());
            representative.push_back(v);
        }

    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (StateId s = 0; s < representative.size(); ++s) {
        names.push_back("c" + std::to_string(s));
        for (auto c : t.node(representative[s]).children)
            edges.push_back({s, t.node(c).letter, state_of_class[cls[c]]});
    }
    return {PDfa(t.alphabet(), std::move(names), edges), 0};
}

Quotient quotient(const PDfa& d)
{
    const auto table = equivalence_table(d, d);
    Quotient result;
    result.class_of.assign(d.state_count(), kNoState);
    std::vector<StateId> members;
    std::vector<std::string> names;
    for (StateId p = 0; p < d.state_count(); ++p) {
        if (result.class_of[p] != kNoState)
            continue;
        auto cls = static_cast<StateId>(members.size());
        members.push_back(p);
        names.push_back(d.state_name(p));
        for (StateId q = p; q < d.state_count(); ++q)
            if (table.equivalent(p, q))
                result.class_of[q] = cls;
    }
    std::vector<Edge> edges;
    for (StateId cls = 0; cls < members.size(); ++cls)
        for (LetterId a = 0; a < d.alphabet().size(); ++a)
            if (auto q = d.next(members[cls], a); q != kNoState)
                edges.push_back({cls, a, result.class_of[q]});
    result.automaton = PDfa(d.alphabet(), std::move(names), edges);
    return result;
}

} // namespace cftree
