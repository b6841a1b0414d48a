#include "cftree/unfolding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <variant>

namespace cftree {

DiscTree::DiscTree(InvolutiveAlphabet alphabet, std::size_t radius, std::string root_label)
    : alphabet_(std::move(alphabet)), radius_(radius)
{
    DiscNode root;
    root.label = std::move(root_label);
    nodes_.push_back(std::move(root));
}

std::size_t DiscTree::add_child(std::size_t parent, LetterId letter, std::string label, std::vector<TransitionId> run)
{
    if (parent >= nodes_.size())
        throw Error(ErrorCode::UnknownNode, "parent node out of range");
    if (letter >= alphabet_.size())
        throw Error(ErrorCode::UnknownLetter, "edge letter outside the alphabet");
    DiscNode child;
    child.parent = parent;
    child.letter = letter;
    child.level = nodes_[parent].level + 1;
    child.label = std::move(label);
    child.word = nodes_[parent].word;
    child.word.push_back(letter);
    child.run = std::move(run);
    auto id = nodes_.size();
    nodes_[parent].children.push_back(id);
    nodes_.push_back(std::move(child));
    return id;
}

std::size_t DiscTree::height() const noexcept
{
    std::size_t h = 0;
    for (const auto& n : nodes_)
        h = std::max(h, n.level);
    return h;
}

std::optional<std::size_t> DiscTree::find_word(const Word& w) const
{
    std::size_t v = root();
    for (auto a : w) {
        auto& kids = nodes_[v].children;
        auto it = std::find_if(kids.begin(), kids.end(), [&](std::size_t c) { return nodes_[c].letter == a; });
        if (it == kids.end())
            return std::nullopt;
        v = *it;
    }
    return v;
}

std::vector<DiscTree::LabeledEdge> DiscTree::edges() const
{
    std::vector<LabeledEdge> result;
    for (std::size_t v = 1; v < nodes_.size(); ++v) {
        const auto& n = nodes_[v];
        result.push_back({n.parent, n.letter, v});
        result.push_back({v, alphabet_.inverse(n.letter), n.parent});
    }
    std::sort(result.begin(), result.end());
    return result;
}

DiscTree DiscTree::with_radius(std::size_t radius) const
{
    if (radius < height())
        throw Error(ErrorCode::InvalidArgument, "radius smaller than tree height");
    DiscTree copy = *this;
    copy.radius_ = radius;
    return copy;
}

namespace {

void check_budget(std::size_t size, const UnfoldLimits& limits)
{
    if (size > limits.max_nodes)
        throw Error(ErrorCode::LimitExceeded,
                    "unfolding exceeds the node limit of " + std::to_string(limits.max_nodes));
}

} // namespace

DiscTree unfold_mnfa(const MNfa& m, StateId p, std::size_t radius, UnfoldLimits limits)
{
    if (p >= m.state_count())
        throw Error(ErrorCode::UnknownState, "unfold root out of range");
    DiscTree tree(m.alphabet(), radius, m.state_name(p));
    std::vector<StateId> endpoint{p};
    for (std::size_t v = 0; v < tree.size(); ++v) {
        if (tree.node(v).level == radius)
            continue;
        for (auto i : m.outgoing(endpoint[v])) {
            const auto& t = m.transitions()[i];
            auto run = tree.node(v).run;
            run.push_back(t.id);
            tree.add_child(v, t.label, m.state_name(t.to), std::move(run));
            endpoint.push_back(t.to);
            check_budget(tree.size(), limits);
        }
    }
    return tree;
}

DiscTree unfold_pdfa(const PDfa& d, StateId p, std::size_t radius, UnfoldLimits limits)
{
    if (p >= d.state_count())
        throw Error(ErrorCode::UnknownState, "unfold root out of range");
    DiscTree tree(d.alphabet(), radius, d.state_name(p));
    std::vector<StateId> state{p};
    for (std::size_t v = 0; v < tree.size(); ++v) {
        if (tree.node(v).level == radius)
            continue;
        for (LetterId a = 0; a < d.alphabet().size(); ++a) {
            auto q = d.next(state[v], a);
            if (q == kNoState)
                continue;
            tree.add_child(v, a, d.state_name(q));
            state.push_back(q);
            check_budget(tree.size(), limits);
        }
    }
    return tree;
}

std::set<Word> language_upto(const PDfa& d, StateId p, std::size_t maxlen, UnfoldLimits limits)
{
    if (p >= d.state_count())
        throw Error(ErrorCode::UnknownState, "state id out of range");
    std::set<Word> words;
    std::vector<std::pair<Word, StateId>> frontier{{Word{}, p}};
    words.insert(Word{});
    for (std::size_t len = 0; len < maxlen && !frontier.empty(); ++len) {
        std::vector<std::pair<Word, StateId>> next;
        for (const auto& [w, s] : frontier)
            for (LetterId a = 0; a < d.alphabet().size(); ++a)
                if (auto t = d.next(s, a); t != kNoState) {
                    Word wa = w;
                    wa.push_back(a);
                    words.insert(wa);
                    next.emplace_back(std::move(wa), t);
                    check_budget(words.size(), limits);
                }
        frontier = std::move(next);
    }
    return words;
}

namespace {

// Bottom-up canonical classes of rooted subtrees (AHU). Classes are shared
// across every tree classified by the same instance; letters are compared by
// id in a common alphabet.
class SubtreeClassifier {
public:
    std::vector<int> classify(const DiscTree& t, const std::vector<LetterId>& letter_map)
    {
        std::vector<int> cls(t.size());
        for (std::size_t i = t.size(); i-- > 0;) {
            std::vector<std::pair<LetterId, int>> key;
            for (auto c : t.node(i).children)
                key.emplace_back(letter_map[t.node(c).letter], cls[c]);
            std::sort(key.begin(), key.end());
            auto [it, fresh] = ids_.emplace(std::move(key), static_cast<int>(ids_.size()));
            cls[i] = it->second;
        }
        return cls;
    }

private:
    std::map<std::vector<std::pair<LetterId, int>>, int> ids_;
};

std::vector<LetterId> identity_map(std::size_t n)
{
    std::vector<LetterId> m(n);
    for (LetterId a = 0; a < n; ++a)
        m[a] = a;
    return m;
}

// Search for a rooted isomorphism that also respects a label bijection. The
// unlabeled classes restrict candidate pairs; remaining ties are resolved by
// backtracking over an explicit choice-point stack.
class LabeledMatcher {
public:
    LabeledMatcher(const DiscTree& x, const DiscTree& y, std::vector<int> cx, std::vector<int> cy,
                   std::vector<LetterId> mx, std::vector<LetterId> my)
        : x_(x), y_(y), cx_(std::move(cx)), cy_(std::move(cy)), mx_(std::move(mx)), my_(std::move(my))
    {
    }

    bool run()
    {
        work_.push_back(Pair{DiscTree::root(), DiscTree::root()});
        while (true) {
            if (work_.empty())
                return true;
            Task task = std::move(work_.back());
            work_.pop_back();
            bool ok = true;
            if (auto* pair = std::get_if<Pair>(&task))
                ok = expand(*pair);
            else
                choose(std::get<Group>(std::move(task)));
            if (!ok && !backtrack())
                return false;
        }
    }

private:
    struct Pair {
        std::size_t u, v;
    };
    struct Group {
        std::vector<std::size_t> us, vs;
    };
    using Task = std::variant<Pair, Group>;
    struct ChoicePoint {
        std::vector<Task> work;
        std::size_t trail;
        Group group;
        std::size_t next;
    };

    bool assign(const std::string& lx, const std::string& ly)
    {
        auto fx = forward_.find(lx);
        auto by = backward_.find(ly);
        if (fx != forward_.end() || by != backward_.end())
            return fx != forward_.end() && by != backward_.end() && fx->second == ly && by->second == lx;
        forward_.emplace(lx, ly);
        backward_.emplace(ly, lx);
        trail_.push_back(lx);
        return true;
    }

    void rollback(std::size_t size)
    {
        while (trail_.size() > size) {
            auto it = forward_.find(trail_.back());
            backward_.erase(it->second);
            forward_.erase(it);
            trail_.pop_back();
        }
    }

    bool expand(const Pair& p)
    {
        if (!assign(x_.node(p.u).label, y_.node(p.v).label))
            return false;
        std::map<std::pair<LetterId, int>, Group> groups;
        for (auto c : x_.node(p.u).children)
            groups[{mx_[x_.node(c).letter], cx_[c]}].us.push_back(c);
        for (auto c : y_.node(p.v).children)
            groups[{my_[y_.node(c).letter], cy_[c]}].vs.push_back(c);
        for (auto& [key, g] : groups) {
            if (g.us.size() != g.vs.size())
                return false;
            work_.push_back(std::move(g));
        }
        return true;
    }

    void apply(const Group& g, std::size_t i)
    {
        Group rest{{g.us.begin() + 1, g.us.end()}, {}};
        for (std::size_t j = 0; j < g.vs.size(); ++j)
            if (j != i)
                rest.vs.push_back(g.vs[j]);
        if (!rest.us.empty())
            work_.push_back(std::move(rest));
        work_.push_back(Pair{g.us.front(), g.vs[i]});
    }

    void choose(Group g)
    {
        if (g.us.empty())
            return;
        if (g.vs.size() > 1)
            choices_.push_back({work_, trail_.size(), g, 1});
        apply(g, 0);
    }

    bool backtrack()
    {
        if (choices_.empty())
            return false;
        auto& cp = choices_.back();
        work_ = cp.work;
        rollback(cp.trail);
        auto i = cp.next++;
        Group g = cp.group;
        if (cp.next == g.vs.size())
            choices_.pop_back();
        apply(g, i);
        return true;
    }

    const DiscTree& x_;
    const DiscTree& y_;
    std::vector<int> cx_, cy_;
    std::vector<LetterId> mx_, my_;
    std::vector<Task> work_;
    std::vector<ChoicePoint> choices_;
    std::map<std::string, std::string> forward_, backward_;
    std::vector<std::string> trail_;
};

} // namespace

bool disc_equal_rooted(const DiscTree& x, const DiscTree& y, bool use_labels)
{
    if (x.radius() != y.radius())
        throw Error(ErrorCode::RadiusMismatch, "discs have radius " + std::to_string(x.radius()) + " and " +
                                                   std::to_string(y.radius()));
    std::vector<LetterId> mx, my;
    if (x.alphabet() == y.alphabet()) {
        mx = my = identity_map(x.alphabet().size());
    } else {
        auto merged = merge_alphabets(x.alphabet(), y.alphabet());
        mx = letter_translation(x.alphabet(), merged);
        my = letter_translation(y.alphabet(), merged);
    }
    SubtreeClassifier classifier;
    auto cx = classifier.classify(x, mx);
    auto cy = classifier.classify(y, my);
    if (cx[DiscTree::root()] != cy[DiscTree::root()])
        return false;
    if (!use_labels)
        return true;
    return LabeledMatcher(x, y, std::move(cx), std::move(cy), std::move(mx), std::move(my)).run();
}

DiscTree end_cone(const DiscTree& t, std::size_t v)
{
    if (v >= t.size())
        throw Error(ErrorCode::UnknownNode, "node out of range");
    const auto& top = t.node(v);
    DiscTree cone(t.alphabet(), t.radius() - top.level, top.label);
    std::deque<std::pair<std::size_t, std::size_t>> queue{{v, DiscTree::root()}};
    while (!queue.empty()) {
        auto [old_id, new_id] = queue.front();
        queue.pop_front();
        for (auto c : t.node(old_id).children) {
            const auto& n = t.node(c);
            std::vector<TransitionId> run;
            if (n.run.size() >= top.run.size() && !n.run.empty())
                run.assign(n.run.begin() + static_cast<std::ptrdiff_t>(top.run.size()), n.run.end());
            queue.emplace_back(c, cone.add_child(new_id, n.letter, n.label, std::move(run)));
        }
    }
    return cone;
}

DiscTree reroot_disc(const DiscTree& t, std::size_t v)
{
    if (v >= t.size())
        throw Error(ErrorCode::UnknownNode, "node out of range");
    const auto limit = t.radius() - t.node(v).level;
    DiscTree result(t.alphabet(), limit, t.node(v).label);
    // (old node, new node, old node we came from)
    std::deque<std::tuple<std::size_t, std::size_t, std::size_t>> queue{{v, DiscTree::root(), kNoNode}};
    while (!queue.empty()) {
        auto [old_id, new_id, came_from] = queue.front();
        queue.pop_front();
        if (result.node(new_id).level == limit)
            continue;
        const auto& n = t.node(old_id);
        if (n.parent != kNoNode && n.parent != came_from)
            queue.emplace_back(n.parent, result.add_child(new_id, t.alphabet().inverse(n.letter), t.node(n.parent).label),
                               old_id);
        for (auto c : n.children)
            if (c != came_from)
                queue.emplace_back(c, result.add_child(new_id, t.node(c).letter, t.node(c).label), old_id);
    }
    return result;
}

DiscTree truncate(const DiscTree& t, std::size_t radius)
{
    DiscTree result(t.alphabet(), radius, t.node(DiscTree::root()).label);
    std::vector<std::size_t> renumber(t.size(), kNoNode);
    renumber[DiscTree::root()] = DiscTree::root();
    for (std::size_t v = 1; v < t.size(); ++v) {
        const auto& n = t.node(v);
        if (n.level > radius)
            continue;
        renumber[v] = result.add_child(renumber[n.parent], n.letter, n.label, n.run);
    }
    return result;
}

bool is_deterministic(const DiscTree& t)
{
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& n = t.node(v);
        std::vector<LetterId> letters;
        if (n.parent != kNoNode)
            letters.push_back(t.alphabet().inverse(n.letter));
        for (auto c : n.children)
            letters.push_back(t.node(c).letter);
        std::sort(letters.begin(), letters.end());
        if (std::adjacent_find(letters.begin(), letters.end()) != letters.end())
            return false;
    }
    return true;
}

namespace {

std::string quoted(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string export_dot(const DiscTree& t)
{
    std::ostringstream os;
    os << "digraph disc {\n";
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto& n = t.node(v);
        os << "  n" << v << " [label=" << quoted(n.label.empty() ? format_word(t.alphabet(), n.word) : n.label);
        if (v == DiscTree::root())
            os << ", peripheries=2";
        os << "];\n";
    }
    for (std::size_t v = 1; v < t.size(); ++v) {
        const auto& n = t.node(v);
        os << "  n" << n.parent << " -> n" << v << " [label=" << quoted(t.alphabet().name(n.letter)) << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const MNfa& m)
{
    std::ostringstream os;
    os << "digraph automaton {\n";
    for (StateId s = 0; s < m.state_count(); ++s)
        os << "  s" << s << " [label=" << quoted(m.state_name(s)) << "];\n";
    for (const auto& t : m.transitions())
        os << "  s" << t.from << " -> s" << t.to << " [label=" << quoted(m.alphabet().name(t.label))
           << ", id=" << t.id << "];\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const PDfa& d)
{
    std::ostringstream os;
    os << "digraph automaton {\n";
    for (StateId s = 0; s < d.state_count(); ++s)
        os << "  s" << s << " [label=" << quoted(d.state_name(s)) << "];\n";
    for (const auto& e : d.edges())
        os << "  s" << e.from << " -> s" << e.to << " [label=" << quoted(d.alphabet().name(e.label)) << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace cftree
