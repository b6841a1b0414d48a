#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cftree/json_io.hpp"
#include "cftree/error.hpp"
#include "fixtures.hpp"

using namespace cftree;

namespace {

std::string data(const std::string& name)
{
    std::ifstream in(std::string(CFTREE_TEST_DATA) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Ok;
}

std::vector<std::string> codes(const ValidationReport& r)
{
    std::vector<std::string> out;
    for (const auto& i : r.issues)
        out.push_back(i.code);
    return out;
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

const char* kAlphabet = R"("alphabet": {"letters": ["a", "a^-1"], "inverse": {"a": "a^-1"}})";

std::string doc(const std::string& body) { return std::string("{") + kAlphabet + ", " + body + "}"; }

} // namespace

TEST_CASE("sample documents load")
{
    auto double_loop = load_automaton_json(data("double_loop.json"));
    CHECK(double_loop.kind == AutomatonKind::MNfa);
    CHECK(double_loop.automaton.transitions().size() == 2);
    CHECK(double_loop.root == std::optional<std::string>("p"));

    std::optional<std::string> root;
    auto loop_ray = load_pdfa_json(data("loop_ray.json"), &root);
    CHECK(loop_ray.edges() == fixtures::loop_ray().edges());
    CHECK(root == std::optional<std::string>("p"));
}

TEST_CASE("mNFA with parallel transitions is not a pDFA")
{
    CHECK(code_of([] { load_pdfa_json(data("double_loop.json")); }) == ErrorCode::NotDeterministic);
}

TEST_CASE("automaton round trip keeps multi-edges")
{
    auto m = fixtures::double_loop();
    auto text = to_json(m, AutomatonKind::MNfa, std::string("p"));
    auto back = load_automaton_json(text);
    CHECK(back.automaton.states() == m.states());
    CHECK(back.automaton.transitions() == m.transitions());
    CHECK(back.automaton.alphabet() == m.alphabet());
    CHECK(to_json(back.automaton, AutomatonKind::MNfa, back.root) == text);
}

TEST_CASE("pDFA round trip")
{
    auto d = fixtures::line();
    auto back = load_pdfa_json(to_json(d));
    CHECK(back.states() == d.states());
    CHECK(back.edges() == d.edges());
}

TEST_CASE("malformed and schema errors")
{
    CHECK(code_of([] { validate_automaton_json("{"); }) == ErrorCode::Parse);
    CHECK(code_of([] { validate_automaton_json("[]"); }) == ErrorCode::Schema);
    CHECK(code_of([] { validate_automaton_json(doc(R"("kind": "mnfa", "states": ["p"], "transitions": [], "extra": 1)")); }) ==
          ErrorCode::Schema);
    CHECK(code_of([] { validate_automaton_json(doc(R"("kind": "dfa", "states": ["p"], "transitions": [])")); }) ==
          ErrorCode::Schema);
    CHECK(code_of([] { validate_automaton_json(doc(R"("kind": "mnfa", "transitions": [])")); }) == ErrorCode::Schema);
    CHECK(code_of([] {
              validate_automaton_json(doc(R"("kind": "mnfa", "states": ["p"], "transitions": [{"from": "p", "label": "a", "to": "p"}])"));
          }) == ErrorCode::Schema);
}

TEST_CASE("all semantic issues are reported together")
{
    auto text = doc(R"("kind": "mnfa", "states": ["p", "p"], "root": "r", "transitions": [
        {"id": 1, "from": "p", "label": "a", "to": "q"},
        {"id": 1, "from": "p", "label": "b", "to": "p"}])");
    auto report = validate_automaton_json(text);
    auto c = codes(report);
    CHECK(has(c, "DUPLICATE_STATE"));
    CHECK(has(c, "DANGLING_STATE"));
    CHECK(has(c, "DUPLICATE_TRANSITION_ID"));
    CHECK(has(c, "UNKNOWN_LABEL"));
    CHECK(has(c, "UNKNOWN_ROOT"));
    CHECK(code_of([&] { load_automaton_json(text); }) == ErrorCode::Invalid);
}

TEST_CASE("pdfa documents must be deterministic")
{
    auto text = doc(R"("kind": "pdfa", "states": ["p", "q"], "transitions": [
        {"from": "p", "label": "a", "to": "p"}, {"from": "p", "label": "a", "to": "q"}])");
    CHECK(has(codes(validate_automaton_json(text)), "NOT_DETERMINISTIC"));
}

TEST_CASE("alphabet issues")
{
    auto bad = R"({"alphabet": {"letters": ["a", "b", "a"], "inverse": {"a": "b", "b": "b"}},
                  "kind": "mnfa", "states": ["p"], "transitions": []})";
    auto c = codes(validate_automaton_json(bad));
    CHECK(has(c, "DUPLICATE_LETTER"));
    CHECK(has(c, "INVOLUTION_CONFLICT"));

    auto missing = R"({"alphabet": {"letters": ["a", "b"], "inverse": {"a": "a"}},
                      "kind": "mnfa", "states": ["p"], "transitions": []})";
    CHECK(has(codes(validate_automaton_json(missing)), "MISSING_INVERSE"));

    auto unknown = R"({"alphabet": {"letters": ["a"], "inverse": {"a": "z"}},
                      "kind": "mnfa", "states": ["p"], "transitions": []})";
    CHECK(has(codes(validate_automaton_json(unknown)), "UNKNOWN_LETTER"));
}

TEST_CASE("inverse map may list one direction or both")
{
    auto one = load_pdfa_json(doc(R"("kind": "pdfa", "states": ["p"], "transitions": [])"));
    auto both = load_pdfa_json(R"({"alphabet": {"letters": ["a", "a^-1"], "inverse": {"a": "a^-1", "a^-1": "a"}},
                                   "kind": "pdfa", "states": ["p"], "transitions": []})");
    CHECK(one.alphabet() == both.alphabet());
}

TEST_CASE("tree documents")
{
    auto t = load_tree_json(data("munn_ab.json"));
    CHECK(t.size() == 3);
    CHECK(t.radius() == 2);
    CHECK(t.alphabet().size() == 4);
    CHECK(t.alphabet().name(t.alphabet().inverse(*t.alphabet().find("b"))) == "b^-1");

    // Edges pointing towards the root are turned around.
    auto flipped = load_tree_json(R"({"root": "x", "nodes": [{"id": "x", "label": ""}, {"id": "y", "label": ""}],
                                     "edges": [{"from": "y", "label": "a", "to": "x"}]})");
    REQUIRE(flipped.size() == 2);
    CHECK(flipped.alphabet().name(flipped.node(1).letter) == "a^-1");

    auto again = load_tree_json(to_json(t));
    CHECK(again.size() == t.size());
    CHECK(to_json(again) == to_json(t));
}

TEST_CASE("tree document errors")
{
    CHECK(code_of([] {
              load_tree_json(R"({"root": 0, "nodes": [{"id": 0, "label": ""}, {"id": 1, "label": ""}], "edges": []})");
          }) == ErrorCode::Invalid);
    CHECK(code_of([] {
              load_tree_json(R"({"root": 5, "nodes": [{"id": 0, "label": ""}], "edges": []})");
          }) == ErrorCode::UnknownNode);
    CHECK(code_of([] {
              load_tree_json(R"({"root": 0, "nodes": [{"id": 0, "label": ""}, {"id": 1, "label": ""}, {"id": 2, "label": ""}],
                                 "edges": [{"from": 0, "label": "a", "to": 1}, {"from": 1, "label": "a^-1", "to": 0}]})");
          }) == ErrorCode::Invalid);
    CHECK(code_of([] {
              load_tree_json(R"({"root": 0, "radius": 0, "nodes": [{"id": 0, "label": ""}, {"id": 1, "label": ""}],
                                 "edges": [{"from": 0, "label": "a", "to": 1}]})");
          }) == ErrorCode::Invalid);
}

TEST_CASE("2GAP documents")
{
    auto g = load_gap2_json(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK(load_gap2_json(to_json(g)).edges == g.edges);
    CHECK(code_of([] { load_gap2_json(R"({"n": 2, "edges": [[0, 1], [0, 1], [0, 0]]})"); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([] { load_gap2_json(R"({"n": 2, "edges": [[0, 2]]})"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { load_gap2_json(R"({"n": 2, "edges": [[0]]})"); }) == ErrorCode::Schema);
}

TEST_CASE("validation report serialization")
{
    ValidationReport r;
    r.issues.push_back({"UNKNOWN_LABEL", "bad", {"3", "z"}});
    auto text = to_json(r);
    CHECK(text.find("\"ok\": false") != std::string::npos);
    CHECK(text.find("UNKNOWN_LABEL") != std::string::npos);
}
