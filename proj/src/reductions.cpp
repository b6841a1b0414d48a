#include "cftree/reductions.hpp"

#include <algorithm>
#include <deque>

namespace cftree {

void validate_gap2(const Gap2Instance& g)
{
    if (g.n == 0)
        throw Error(ErrorCode::InvalidArgument, "2GAP instance needs at least one node");
    std::vector<int> degree(g.n, 0);
    for (auto [u, v] : g.edges) {
        if (u >= g.n || v >= g.n)
            throw Error(ErrorCode::InvalidArgument,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") leaves the node range");
        if (++degree[u] > 2)
            throw Error(ErrorCode::InvalidArgument, "node " + std::to_string(u) + " has more than two out-edges");
    }
}

bool gap2_has_path(const Gap2Instance& g)
{
    validate_gap2(g);
    std::vector<std::vector<std::size_t>> adj(g.n);
    for (auto [u, v] : g.edges)
        adj[u].push_back(v);
    std::vector<bool> seen(g.n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        if (u == g.n - 1)
            return true;
        for (auto v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
    }
    return false;
}

namespace {

std::string binary(std::size_t value, std::size_t width)
{
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (value >> (width - 1 - i) & 1U)
            s[i] = '1';
    return s;
}

} // namespace

RootedPair reduce_gap2_to_rooted_iso(const Gap2Instance& g)
{
    validate_gap2(g);
    if (g.n < 2)
        throw Error(ErrorCode::InvalidArgument, "reduction needs n >= 2");

    std::size_t bits = 1;
    while ((std::size_t{1} << bits) < g.n)
        ++bits;
    const std::size_t padded = std::size_t{1} << bits;
    const std::size_t shift = padded - g.n; // padding nodes take the numbers 1..shift
    auto renumber = [&](std::size_t i) { return i == 0 ? 0 : i + shift; };
    const std::size_t target = padded - 1;

    // Drop edges into 0 and out of n-1; they never lie on a shortest path.
    std::vector<std::vector<std::size_t>> succ(padded);
    for (auto [u, v] : g.edges) {
        if (v == 0 || u == g.n - 1)
            continue;
        succ[renumber(u)].push_back(renumber(v));
    }

    auto alphabet = involutive_closure({"0", "1"});
    const LetterId zero = *alphabet.find("0"), one = *alphabet.find("1");

    // States: prefix tree {0,1}^{<bits} in BFS order, then the graph nodes
    // bin(0..padded-1).
    std::vector<std::string> names;
    names.push_back("eps");
    for (std::size_t len = 1; len < bits; ++len)
        for (std::size_t w = 0; w < (std::size_t{1} << len); ++w)
            names.push_back(binary(w, len));
    auto prefix_id = [&](std::size_t len, std::size_t w) -> StateId {
        return len == 0 ? 0 : static_cast<StateId>((std::size_t{1} << len) - 1 + w);
    };
    const StateId node_base = static_cast<StateId>(names.size());
    for (std::size_t i = 0; i < padded; ++i)
        names.push_back(binary(i, bits));
    auto node_id = [&](std::size_t i) { return static_cast<StateId>(node_base + i); };

    std::vector<Edge> prefix_edges;
    for (std::size_t len = 0; len < bits; ++len)
        for (std::size_t w = 0; w < (std::size_t{1} << len); ++w)
            for (std::size_t bit = 0; bit < 2; ++bit) {
                auto child = (w << 1) | bit;
                StateId to = len + 1 == bits ? node_id(child) : prefix_id(len + 1, child);
                prefix_edges.push_back({prefix_id(len, w), bit ? one : zero, to});
            }

    std::vector<Edge> graph_edges;
    for (std::size_t i = 0; i < padded; ++i) {
        auto targets = succ[i];
        std::sort(targets.begin(), targets.end());
        if (targets.size() == 2) {
            graph_edges.push_back({node_id(i), zero, node_id(targets[0])});
            graph_edges.push_back({node_id(i), one, node_id(targets[1])});
        } else if (targets.size() == 1) {
            graph_edges.push_back({node_id(i), zero, node_id(targets[0])});
            graph_edges.push_back({node_id(i), one, node_id(targets[0])});
        } else if (i != target) {
            graph_edges.push_back({node_id(i), zero, node_id(i)});
            graph_edges.push_back({node_id(i), one, node_id(i)});
        }
    }

    std::vector<Edge> a_edges = prefix_edges;
    a_edges.insert(a_edges.end(), graph_edges.begin(), graph_edges.end());

    // B: bin(0) is replaced by f with two self-loops.
    auto b_names = names;
    const StateId f = node_id(0);
    b_names[f] = "f";
    std::vector<Edge> b_edges = prefix_edges;
    for (const auto& e : graph_edges)
        if (e.from != f)
            b_edges.push_back(e);
    b_edges.push_back({f, zero, f});
    b_edges.push_back({f, one, f});

    return {PDfa(alphabet, std::move(names), a_edges), 0, PDfa(alphabet, std::move(b_names), b_edges), 0};
}

namespace {

std::pair<PDfa, StateId> lift(const PDfa& d, StateId root, const InvolutiveAlphabet& alphabet, LetterId top)
{
    auto base = d.over(alphabet);
    auto names = base.states();
    std::string fresh = d.state_name(root) + "'";
    while (base.find_state(fresh))
        fresh += '\'';
    const auto new_root = static_cast<StateId>(names.size());
    names.push_back(fresh);
    auto edges = base.edges();
    edges.push_back({new_root, top, root});
    return {PDfa(alphabet, std::move(names), edges), new_root};
}

} // namespace

RootedPair reduce_rooted_to_nonrooted(const PDfa& a, StateId p, const PDfa& b, StateId q)
{
    if (p >= a.state_count() || q >= b.state_count())
        throw Error(ErrorCode::UnknownState, "state id out of range");
    auto merged = a.alphabet() == b.alphabet() ? a.alphabet() : merge_alphabets(a.alphabet(), b.alphabet());
    auto alphabet = merged.with_pair(kTopLetter, formal_inverse_name(kTopLetter));
    const LetterId top = *alphabet.find(kTopLetter);
    auto [la, ra] = lift(a, p, alphabet, top);
    auto [lb, rb] = lift(b, q, alphabet, top);
    return {std::move(la), ra, std::move(lb), rb};
}

} // namespace cftree
