#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cftree/cftree.h"

namespace {

std::string data(const std::string& name)
{
    std::ifstream in(std::string(CFTREE_TEST_DATA) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cftree_automaton* load(const std::string& name)
{
    cftree_automaton* a = nullptr;
    REQUIRE(cftree_automaton_load(data(name).c_str(), &a) == CFTREE_OK);
    REQUIRE(a != nullptr);
    return a;
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    cftree_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and status names")
{
    CHECK(std::strlen(cftree_version()) > 0);
    CHECK(std::string(cftree_status_name(CFTREE_OK)) == "OK");
    CHECK(std::string(cftree_status_name(CFTREE_E_NOT_REDUCED)) == "E_NOT_REDUCED");
    CHECK(std::string(cftree_status_name(static_cast<cftree_status>(99))) == "E_UNKNOWN");
}

TEST_CASE("validation through the C API")
{
    int ok = -1;
    char* report = nullptr;
    REQUIRE(cftree_validate_json(data("double_loop.json").c_str(), &ok, &report) == CFTREE_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("\"ok\": true") != std::string::npos);

    const char* bad = R"({"alphabet": {"letters": ["a"], "inverse": {"a": "a"}}, "kind": "mnfa",
                          "states": ["p"], "transitions": [{"id": 0, "from": "p", "label": "z", "to": "q"}]})";
    REQUIRE(cftree_validate_json(bad, &ok, &report) == CFTREE_OK);
    CHECK(ok == 0);
    auto text = take(report);
    CHECK(text.find("UNKNOWN_LABEL") != std::string::npos);
    CHECK(text.find("DANGLING_STATE") != std::string::npos);

    CHECK(cftree_validate_json("{", &ok, &report) == CFTREE_E_PARSE);
    CHECK(std::strlen(cftree_last_error()) > 0);
    CHECK(cftree_validate_json(nullptr, &ok, &report) == CFTREE_E_INVALID_ARGUMENT);
}

TEST_CASE("load failures leave no handle")
{
    cftree_automaton* a = reinterpret_cast<cftree_automaton*>(0x1);
    CHECK(cftree_automaton_load("{\"kind\": 1}", &a) == CFTREE_E_SCHEMA);
    CHECK(a == nullptr);
    cftree_automaton_free(nullptr);
}

TEST_CASE("root, reducedness and serialization")
{
    auto* two_way_loop = load("two_way_loop.json");
    char* root = nullptr;
    REQUIRE(cftree_automaton_root(two_way_loop, &root) == CFTREE_OK);
    CHECK(take(root) == "p");
    int reduced = -1;
    REQUIRE(cftree_automaton_is_reduced(two_way_loop, &reduced) == CFTREE_OK);
    CHECK(reduced == 0);
    char* json = nullptr;
    REQUIRE(cftree_automaton_to_json(two_way_loop, &json) == CFTREE_OK);
    CHECK(take(json).find("\"kind\": \"pdfa\"") != std::string::npos);
    char* dot = nullptr;
    REQUIRE(cftree_automaton_to_dot(two_way_loop, &dot) == CFTREE_OK);
    CHECK(take(dot).rfind("digraph", 0) == 0);
    cftree_automaton_free(two_way_loop);

    auto* double_loop = load("double_loop.json");
    CHECK(cftree_automaton_is_reduced(double_loop, &reduced) == CFTREE_E_NOT_DETERMINISTIC);
    cftree_automaton_free(double_loop);
}

TEST_CASE("unfold in both formats")
{
    auto* double_loop = load("double_loop.json");
    char* out = nullptr;
    REQUIRE(cftree_unfold(double_loop, "p", 2, CFTREE_FORMAT_DOT, &out) == CFTREE_OK);
    auto dot = take(out);
    std::size_t nodes = 0;
    for (auto at = dot.find("[label="); at != std::string::npos; at = dot.find("[label=", at + 1))
        ++nodes;
    CHECK(nodes == 7 + 6); // seven node lines, six edge lines
    REQUIRE(cftree_unfold(double_loop, nullptr, 1, CFTREE_FORMAT_JSON, &out) == CFTREE_OK);
    CHECK(take(out).find("\"radius\": 1") != std::string::npos);
    CHECK(cftree_unfold(double_loop, "zz", 1, CFTREE_FORMAT_JSON, &out) == CFTREE_E_UNKNOWN_STATE);
    cftree_automaton_free(double_loop);
}

TEST_CASE("isomorphism through the C API")
{
    auto* loop_ray = load("loop_ray.json");
    int iso = -1;
    char* witness = nullptr;
    REQUIRE(cftree_iso(loop_ray, "p", loop_ray, "p", CFTREE_ISO_ROOTED, &iso, &witness) == CFTREE_OK);
    CHECK(iso == 1);
    CHECK(witness == nullptr);
    REQUIRE(cftree_iso(loop_ray, "p", loop_ray, "q", CFTREE_ISO_ROOTED, &iso, &witness) == CFTREE_OK);
    CHECK(iso == 0);
    CHECK(take(witness) == "a");

    auto* ray = load("ray.json");
    auto* interior = load("ray_interior.json");
    REQUIRE(cftree_iso(ray, nullptr, interior, nullptr, CFTREE_ISO_NONROOTED, &iso, &witness) == CFTREE_OK);
    CHECK(iso == 1);
    auto w = take(witness);
    CHECK(w == "a^-1");
    int accepted = -1;
    REQUIRE(cftree_verify_nonrooted_witness(ray, nullptr, interior, nullptr, w.c_str(), &accepted) == CFTREE_OK);
    CHECK(accepted == 1);
    REQUIRE(cftree_verify_nonrooted_witness(ray, nullptr, interior, nullptr, "", &accepted) == CFTREE_OK);
    CHECK(accepted == 0);
    CHECK(cftree_verify_nonrooted_witness(ray, nullptr, interior, nullptr, "a^-1,a^-1", &accepted) ==
          CFTREE_E_NOT_IN_LANGUAGE);

    auto* two_way_loop = load("two_way_loop.json");
    CHECK(cftree_iso(two_way_loop, nullptr, ray, nullptr, CFTREE_ISO_ROOTED, &iso, nullptr) == CFTREE_E_NOT_REDUCED);
    CHECK(std::string(cftree_last_error()).find("not reduced") != std::string::npos);
    auto* double_loop = load("double_loop.json");
    CHECK(cftree_iso(double_loop, nullptr, ray, nullptr, CFTREE_ISO_ROOTED, &iso, nullptr) == CFTREE_E_NOT_DETERMINISTIC);

    for (auto* h : {double_loop, loop_ray, two_way_loop, ray, interior})
        cftree_automaton_free(h);
}

TEST_CASE("reroot, minimize, compress and reductions")
{
    auto* ray = load("ray.json");
    cftree_automaton* out = nullptr;
    REQUIRE(cftree_reroot(ray, nullptr, "a", &out) == CFTREE_OK);
    auto* interior = load("ray_interior.json");
    int iso = -1;
    REQUIRE(cftree_iso(out, nullptr, interior, nullptr, CFTREE_ISO_ROOTED, &iso, nullptr) == CFTREE_OK);
    CHECK(iso == 1);
    cftree_automaton_free(out);
    CHECK(cftree_reroot(ray, nullptr, "a^-1", &out) == CFTREE_E_NOT_IN_LANGUAGE);
    CHECK(cftree_reroot(ray, nullptr, "q", &out) == CFTREE_E_UNKNOWN_LETTER);

    REQUIRE(cftree_minimize(interior, &out) == CFTREE_OK);
    REQUIRE(cftree_iso(out, nullptr, interior, nullptr, CFTREE_ISO_ROOTED, &iso, nullptr) == CFTREE_OK);
    CHECK(iso == 1);
    cftree_automaton_free(out);

    REQUIRE(cftree_compress_tree(data("munn_ab.json").c_str(), &out) == CFTREE_OK);
    char* json = nullptr;
    REQUIRE(cftree_automaton_to_json(out, &json) == CFTREE_OK);
    auto text = take(json);
    CHECK(text.find("\"root\": \"c0\"") != std::string::npos);
    cftree_automaton_free(out);

    cftree_automaton *a = nullptr, *b = nullptr;
    REQUIRE(cftree_reduce_2gap(data("gap_path.json").c_str(), &a, &b) == CFTREE_OK);
    REQUIRE(cftree_iso(a, nullptr, b, nullptr, CFTREE_ISO_ROOTED, &iso, nullptr) == CFTREE_OK);
    CHECK(iso == 0);
    cftree_automaton_free(a);
    cftree_automaton_free(b);
    CHECK(cftree_reduce_2gap(R"({"n": 1, "edges": []})", &a, &b) == CFTREE_E_INVALID_ARGUMENT);

    REQUIRE(cftree_lift_nonrooted(ray, nullptr, interior, nullptr, &a, &b) == CFTREE_OK);
    REQUIRE(cftree_iso(a, nullptr, b, nullptr, CFTREE_ISO_NONROOTED, &iso, nullptr) == CFTREE_OK);
    CHECK(iso == 0);
    cftree_automaton_free(a);
    cftree_automaton_free(b);

    cftree_automaton_free(ray);
    cftree_automaton_free(interior);
}

TEST_CASE("handles can be shared between threads")
{
    auto* loop_ray = load("loop_ray.json");
    std::vector<int> results(8, -1);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i)
        threads.emplace_back([&, i] {
            int iso = -1;
            char* w = nullptr;
            if (cftree_iso(loop_ray, "p", loop_ray, i % 2 ? "q" : "p", CFTREE_ISO_NONROOTED, &iso, &w) == CFTREE_OK)
                results[i] = iso;
            cftree_string_free(w);
        });
    for (auto& t : threads)
        t.join();
    for (std::size_t i = 0; i < results.size(); ++i)
        CHECK(results[i] == (i % 2 ? 0 : 1));
    cftree_automaton_free(loop_ray);
}
