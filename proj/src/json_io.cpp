#include "cftree/json_io.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace cftree {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
}

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

void only_fields(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    if (!j.is_object())
        schema(where + " must be an object");
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            schema("unknown field '" + key + "' in " + where);
}

const json& field(const json& j, const char* name, const std::string& where)
{
    auto it = j.find(name);
    if (it == j.end())
        schema("missing field '" + std::string(name) + "' in " + where);
    return *it;
}

std::string string_field(const json& j, const char* name, const std::string& where)
{
    const auto& v = field(j, name, where);
    if (!v.is_string())
        schema("field '" + std::string(name) + "' in " + where + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_array(const json& v, const std::string& where)
{
    if (!v.is_array())
        schema(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            schema(where + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

struct RawAlphabet {
    std::vector<std::string> letters;
    std::vector<std::pair<std::string, std::string>> inverse;
};

RawAlphabet read_alphabet(const json& j)
{
    only_fields(j, {"letters", "inverse"}, "alphabet");
    RawAlphabet raw;
    raw.letters = string_array(field(j, "letters", "alphabet"), "alphabet.letters");
    const auto& inv = field(j, "inverse", "alphabet");
    if (!inv.is_object())
        schema("alphabet.inverse must be an object");
    for (const auto& [key, value] : inv.items()) {
        if (!value.is_string())
            schema("alphabet.inverse values must be strings");
        raw.inverse.emplace_back(key, value.get<std::string>());
    }
    return raw;
}

// Either direction of a pair may be listed; the relation is completed here.
std::optional<InvolutiveAlphabet> check_alphabet(const RawAlphabet& raw, ValidationReport& report)
{
    const auto before = report.issues.size();
    std::set<std::string> letters;
    for (const auto& l : raw.letters)
        if (!letters.insert(l).second)
            report.issues.push_back({"DUPLICATE_LETTER", "letter '" + l + "' listed twice", {l}});
    std::map<std::string, std::string> inverse;
    auto bind = [&](const std::string& x, const std::string& y) {
        auto [it, fresh] = inverse.emplace(x, y);
        if (!fresh && it->second != y)
            report.issues.push_back(
                {"INVOLUTION_CONFLICT", "letter '" + x + "' has inverses '" + it->second + "' and '" + y + "'", {x}});
    };
    for (const auto& [x, y] : raw.inverse) {
        bool known = true;
        for (const auto* l : {&x, &y})
            if (!letters.contains(*l)) {
                report.issues.push_back({"UNKNOWN_LETTER", "involution mentions unknown letter '" + *l + "'", {*l}});
                known = false;
            }
        if (!known)
            continue;
        bind(x, y);
        bind(y, x);
    }
    for (const auto& l : letters)
        if (!inverse.contains(l))
            report.issues.push_back({"MISSING_INVERSE", "letter '" + l + "' has no inverse", {l}});
    if (report.issues.size() != before)
        return std::nullopt;
    return InvolutiveAlphabet::from_involution(raw.letters, inverse);
}

struct RawTransition {
    std::optional<TransitionId> id;
    std::string from, label, to;
};

struct RawAutomaton {
    AutomatonKind kind = AutomatonKind::MNfa;
    RawAlphabet alphabet;
    std::vector<std::string> states;
    std::vector<RawTransition> transitions;
    std::optional<std::string> root;
};

RawAutomaton read_automaton(const json& j)
{
    only_fields(j, {"alphabet", "kind", "states", "transitions", "root"}, "automaton document");
    RawAutomaton raw;
    auto kind = string_field(j, "kind", "automaton document");
    if (kind == "mnfa")
        raw.kind = AutomatonKind::MNfa;
    else if (kind == "pdfa")
        raw.kind = AutomatonKind::PDfa;
    else
        schema("kind must be \"mnfa\" or \"pdfa\", got \"" + kind + "\"");
    raw.alphabet = read_alphabet(field(j, "alphabet", "automaton document"));
    raw.states = string_array(field(j, "states", "automaton document"), "states");
    const auto& ts = field(j, "transitions", "automaton document");
    if (!ts.is_array())
        schema("transitions must be an array");
    for (const auto& t : ts) {
        only_fields(t, {"id", "from", "label", "to"}, "transition");
        RawTransition rt;
        if (auto it = t.find("id"); it != t.end()) {
            if (!it->is_number_integer())
                schema("transition id must be an integer");
            rt.id = it->get<TransitionId>();
        } else if (raw.kind == AutomatonKind::MNfa) {
            schema("mnfa transitions need an explicit id");
        }
        rt.from = string_field(t, "from", "transition");
        rt.label = string_field(t, "label", "transition");
        rt.to = string_field(t, "to", "transition");
        raw.transitions.push_back(std::move(rt));
    }
    if (auto it = j.find("root"); it != j.end()) {
        if (!it->is_string())
            schema("root must be a string");
        raw.root = it->get<std::string>();
    }
    return raw;
}

std::pair<ValidationReport, std::optional<AutomatonDocument>> check_automaton(const RawAutomaton& raw)
{
    ValidationReport report;
    auto alphabet = check_alphabet(raw.alphabet, report);
    std::set<std::string> letters(raw.alphabet.letters.begin(), raw.alphabet.letters.end());

    std::map<std::string, StateId> states;
    for (const auto& s : raw.states)
        if (!states.emplace(s, static_cast<StateId>(states.size())).second)
            report.issues.push_back({"DUPLICATE_STATE", "state '" + s + "' listed twice", {s}});

    TransitionId next_id = 0;
    for (const auto& t : raw.transitions)
        if (t.id)
            next_id = std::max(next_id, *t.id + 1);
    std::vector<Transition> transitions;
    std::set<TransitionId> ids;
    std::map<std::pair<std::string, std::string>, TransitionId> first_by_start;
    for (const auto& t : raw.transitions) {
        const TransitionId id = t.id ? *t.id : next_id++;
        const auto tid = std::to_string(id);
        if (!ids.insert(id).second)
            report.issues.push_back({"DUPLICATE_TRANSITION_ID", "transition id " + tid + " is used twice", {tid}});
        for (const auto* s : {&t.from, &t.to})
            if (!states.contains(*s))
                report.issues.push_back(
                    {"DANGLING_STATE", "transition " + tid + " references unknown state '" + *s + "'", {tid, *s}});
        if (!letters.contains(t.label))
            report.issues.push_back(
                {"UNKNOWN_LABEL", "transition " + tid + " is labeled by unknown letter '" + t.label + "'", {tid, t.label}});
        if (raw.kind == AutomatonKind::PDfa) {
            auto [it, fresh] = first_by_start.emplace(std::pair{t.from, t.label}, id);
            if (!fresh)
                report.issues.push_back({"NOT_DETERMINISTIC",
                                         "transitions " + std::to_string(it->second) + " and " + tid +
                                             " share start '" + t.from + "' and label '" + t.label + "'",
                                         {std::to_string(it->second), tid}});
        }
        if (alphabet && states.contains(t.from) && states.contains(t.to) && letters.contains(t.label))
            transitions.push_back({id, states.at(t.from), *alphabet->find(t.label), states.at(t.to)});
    }
    if (raw.root && !states.contains(*raw.root))
        report.issues.push_back({"UNKNOWN_ROOT", "root '" + *raw.root + "' is not a state", {*raw.root}});

    if (!report.ok())
        return {std::move(report), std::nullopt};
    AutomatonDocument doc{raw.kind, MNfa(std::move(*alphabet), raw.states, std::move(transitions)), raw.root};
    return {std::move(report), std::move(doc)};
}

ordered_json alphabet_json(const InvolutiveAlphabet& alphabet)
{
    ordered_json inverse = ordered_json::object();
    for (LetterId a = 0; a < alphabet.size(); ++a)
        inverse[alphabet.name(a)] = alphabet.name(alphabet.inverse(a));
    return {{"letters", alphabet.names()}, {"inverse", inverse}};
}

std::string node_key(const json& v, const std::string& where)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    schema(where + " must be a string or an integer");
}

} // namespace

ValidationReport validate_automaton_json(std::string_view text)
{
    return check_automaton(read_automaton(parse(text))).first;
}

AutomatonDocument load_automaton_json(std::string_view text)
{
    auto [report, doc] = check_automaton(read_automaton(parse(text)));
    if (!doc) {
        std::string what = "invalid automaton:";
        for (const auto& issue : report.issues)
            what += "\n  " + issue.code + ": " + issue.detail;
        throw Error(ErrorCode::Invalid, what);
    }
    return std::move(*doc);
}

PDfa load_pdfa_json(std::string_view text, std::optional<std::string>* root)
{
    auto doc = load_automaton_json(text);
    if (root)
        *root = doc.root;
    return as_pdfa(doc.automaton);
}

std::string to_json(const MNfa& m, AutomatonKind kind, const std::optional<std::string>& root)
{
    ordered_json j;
    j["kind"] = kind == AutomatonKind::MNfa ? "mnfa" : "pdfa";
    j["alphabet"] = alphabet_json(m.alphabet());
    j["states"] = m.states();
    auto ts = ordered_json::array();
    auto sorted = m.transitions();
    std::stable_sort(sorted.begin(), sorted.end(), [](const Transition& x, const Transition& y) { return x.id < y.id; });
    for (const auto& t : sorted)
        ts.push_back({{"id", t.id},
                      {"from", m.state_name(t.from)},
                      {"label", m.alphabet().name(t.label)},
                      {"to", m.state_name(t.to)}});
    j["transitions"] = std::move(ts);
    if (root)
        j["root"] = *root;
    return j.dump(2) + "\n";
}

std::string to_json(const PDfa& d, const std::optional<std::string>& root)
{
    return to_json(d.as_mnfa(), AutomatonKind::PDfa, root);
}

DiscTree load_tree_json(std::string_view text)
{
    auto j = parse(text);
    only_fields(j, {"alphabet", "radius", "root", "nodes", "edges"}, "tree document");

    std::vector<std::string> ids;
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    const auto& nodes = field(j, "nodes", "tree document");
    if (!nodes.is_array() || nodes.empty())
        schema("nodes must be a non-empty array");
    for (const auto& n : nodes) {
        only_fields(n, {"id", "label"}, "tree node");
        auto key = node_key(field(n, "id", "tree node"), "node id");
        if (!index.emplace(key, ids.size()).second)
            throw Error(ErrorCode::Invalid, "node id '" + key + "' listed twice");
        ids.push_back(key);
        labels.push_back(n.contains("label") ? string_field(n, "label", "tree node") : std::string{});
    }
    struct RawEdge {
        std::size_t from, to;
        std::string letter;
    };
    std::vector<RawEdge> edges;
    const auto& es = field(j, "edges", "tree document");
    if (!es.is_array())
        schema("edges must be an array");
    for (const auto& e : es) {
        only_fields(e, {"from", "label", "to"}, "tree edge");
        auto from = node_key(field(e, "from", "tree edge"), "edge endpoint");
        auto to = node_key(field(e, "to", "tree edge"), "edge endpoint");
        for (const auto& k : {from, to})
            if (!index.contains(k))
                throw Error(ErrorCode::UnknownNode, "edge references unknown node '" + k + "'");
        edges.push_back({index.at(from), index.at(to), string_field(e, "label", "tree edge")});
    }

    InvolutiveAlphabet alphabet;
    if (auto it = j.find("alphabet"); it != j.end()) {
        ValidationReport report;
        auto checked = check_alphabet(read_alphabet(*it), report);
        if (!checked)
            throw Error(ErrorCode::Invalid, "invalid alphabet: " + report.issues.front().detail);
        alphabet = std::move(*checked);
    } else {
        std::vector<std::string> bases;
        for (const auto& e : edges) {
            auto base = e.letter.ends_with(kFormalInverseSuffix) ? formal_inverse_name(e.letter) : e.letter;
            if (std::find(bases.begin(), bases.end(), base) == bases.end())
                bases.push_back(base);
        }
        if (!bases.empty())
            alphabet = involutive_closure(std::span<const std::string>(bases));
    }

    auto root_key = node_key(field(j, "root", "tree document"), "root");
    if (!index.contains(root_key))
        throw Error(ErrorCode::UnknownNode, "root '" + root_key + "' is not a node");
    if (edges.size() + 1 != ids.size())
        throw Error(ErrorCode::Invalid, "a tree on " + std::to_string(ids.size()) + " nodes needs " +
                                            std::to_string(ids.size() - 1) + " edge pairs");

    // adjacency: (neighbor, letter read when moving towards it)
    std::vector<std::vector<std::pair<std::size_t, LetterId>>> adj(ids.size());
    for (const auto& e : edges) {
        auto a = alphabet.find(e.letter);
        if (!a)
            throw Error(ErrorCode::UnknownLetter, "edge letter '" + e.letter + "' is not in the alphabet");
        adj[e.from].emplace_back(e.to, *a);
        adj[e.to].emplace_back(e.from, alphabet.inverse(*a));
    }
    const auto root = index.at(root_key);
    DiscTree tree(alphabet, 0, labels[root]);
    std::vector<std::size_t> placed(ids.size(), kNoNode);
    placed[root] = DiscTree::root();
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto [v, letter] : adj[u]) {
            if (placed[v] != kNoNode) {
                if (tree.node(placed[u]).parent == placed[v])
                    continue;
                throw Error(ErrorCode::Invalid, "edges do not form a tree (cycle through '" + ids[v] + "')");
            }
            placed[v] = tree.add_child(placed[u], letter, labels[v]);
            queue.push_back(v);
        }
    }
    if (std::find(placed.begin(), placed.end(), kNoNode) != placed.end())
        throw Error(ErrorCode::Invalid, "edges do not connect all nodes");

    std::size_t radius = tree.height();
    if (auto it = j.find("radius"); it != j.end()) {
        if (!it->is_number_unsigned())
            schema("radius must be a non-negative integer");
        radius = it->get<std::size_t>();
        if (radius < tree.height())
            throw Error(ErrorCode::Invalid, "radius is smaller than the tree height");
    }
    return tree.with_radius(radius);
}

std::string to_json(const DiscTree& t)
{
    ordered_json j;
    j["alphabet"] = alphabet_json(t.alphabet());
    j["radius"] = t.radius();
    j["root"] = 0;
    auto nodes = ordered_json::array();
    for (std::size_t v = 0; v < t.size(); ++v)
        nodes.push_back({{"id", v}, {"label", t.node(v).label}});
    auto edges = ordered_json::array();
    for (std::size_t v = 1; v < t.size(); ++v)
        edges.push_back({{"from", t.node(v).parent}, {"label", t.alphabet().name(t.node(v).letter)}, {"to", v}});
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Gap2Instance load_gap2_json(std::string_view text)
{
    auto j = parse(text);
    only_fields(j, {"n", "edges"}, "2GAP document");
    const auto& n = field(j, "n", "2GAP document");
    if (!n.is_number_unsigned())
        schema("n must be a non-negative integer");
    Gap2Instance g;
    g.n = n.get<std::size_t>();
    const auto& es = field(j, "edges", "2GAP document");
    if (!es.is_array())
        schema("edges must be an array");
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            schema("each edge must be a pair [u, v] of node indices");
        g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    validate_gap2(g);
    return g;
}

std::string to_json(const Gap2Instance& g)
{
    ordered_json j;
    j["n"] = g.n;
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges)
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

std::string to_json(const ValidationReport& report)
{
    ordered_json j;
    j["ok"] = report.ok();
    auto issues = ordered_json::array();
    for (const auto& issue : report.issues)
        issues.push_back({{"code", issue.code}, {"detail", issue.detail}, {"ids", issue.ids}});
    j["issues"] = std::move(issues);
    return j.dump(2) + "\n";
}

} // namespace cftree
