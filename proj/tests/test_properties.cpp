#include <doctest.h>

#include <random>

#include "cftree/compression.hpp"
#include "cftree/isomorphism.hpp"
#include "cftree/json_io.hpp"
#include "cftree/rerooting.hpp"
#include "cftree/unfolding.hpp"
#include "oracle.hpp"

using namespace cftree;

namespace {

struct Instance {
    PDfa d;
    oracle::Table table;
};

const std::vector<InvolutiveAlphabet>& alphabets()
{
    static const std::vector<InvolutiveAlphabet> all = [] {
        std::vector<std::string> mixed{"a", "a^-1", "t"};
        return std::vector<InvolutiveAlphabet>{
            involutive_closure({"a"}),
            involutive_closure({"a", "b"}),
            InvolutiveAlphabet::from_involution(mixed, {{"a", "a^-1"}, {"a^-1", "a"}, {"t", "t"}}),
        };
    }();
    return all;
}

std::vector<std::uint32_t> inverses(const InvolutiveAlphabet& x)
{
    std::vector<std::uint32_t> inv;
    for (LetterId a = 0; a < x.size(); ++a)
        inv.push_back(x.inverse(a));
    return inv;
}

Instance random_instance(std::mt19937_64& rng, bool reduced, std::uint32_t max_states = 5)
{
    const auto& x = alphabets()[std::uniform_int_distribution<std::size_t>(0, alphabets().size() - 1)(rng)];
    auto n = std::uniform_int_distribution<std::uint32_t>(1, max_states)(rng);
    auto t = reduced ? oracle::random_reduced(rng, n, inverses(x)) : oracle::random_pdfa(rng, n, inverses(x));
    return {oracle::to_pdfa(t, x), t};
}

} // namespace

TEST_CASE("as_pdfa agrees with an exhaustive pair scan")
{
    std::mt19937_64 rng(11);
    auto x = involutive_closure({"a", "b"});
    for (int round = 0; round < 300; ++round) {
        std::uniform_int_distribution<StateId> state(0, 2);
        std::uniform_int_distribution<LetterId> letter(0, 3);
        std::vector<Transition> ts;
        auto count = std::uniform_int_distribution<int>(0, 6)(rng);
        for (int i = 0; i < count; ++i)
            ts.push_back({i, state(rng), letter(rng), state(rng)});
        MNfa m(x, {"p", "q", "r"}, ts);
        bool clash = false;
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                clash = clash || (ts[i].from == ts[j].from && ts[i].label == ts[j].label);
        CHECK(nondeterministic_pair(m).has_value() == clash);
        if (!clash)
            CHECK(as_pdfa(m).edge_count() == ts.size());
    }
}

TEST_CASE("is_reduced agrees with an exhaustive scan")
{
    std::mt19937_64 rng(12);
    for (int round = 0; round < 500; ++round) {
        auto inst = random_instance(rng, round % 3 == 0);
        CHECK(is_reduced(inst.d) == oracle::reduced(inst.table));
    }
}

TEST_CASE("trim preserves discs")
{
    std::mt19937_64 rng(13);
    for (int round = 0; round < 100; ++round) {
        auto inst = random_instance(rng, true);
        auto root = std::uniform_int_distribution<StateId>(0, static_cast<StateId>(inst.d.state_count() - 1))(rng);
        auto t = trim(inst.d, root);
        auto t_root = t.require_state(inst.d.state_name(root));
        for (std::size_t r = 0; r <= 8; ++r)
            CHECK(disc_equal_rooted(unfold_pdfa(inst.d, root, r), unfold_pdfa(t, t_root, r), true));
    }
}

TEST_CASE("language recursion identity")
{
    std::mt19937_64 rng(14);
    for (int round = 0; round < 100; ++round) {
        auto inst = random_instance(rng, round % 2 == 0);
        for (StateId p = 0; p < inst.d.state_count(); ++p)
            for (std::size_t l = 0; l <= 4; ++l) {
                std::set<Word> rebuilt{{}};
                for (auto a : out_set(inst.d, p))
                    for (auto w : language_upto(inst.d, inst.d.next(p, a), l)) {
                        w.insert(w.begin(), a);
                        rebuilt.insert(w);
                    }
                CHECK(language_upto(inst.d, p, l + 1) == rebuilt);
                CHECK(language_upto(inst.d, p, l) == oracle::words(inst.table, p, l));
            }
    }
}

TEST_CASE("disc equality is language equality")
{
    std::mt19937_64 rng(15);
    for (int round = 0; round < 150; ++round) {
        auto inst = random_instance(rng, true, 4);
        auto n = static_cast<StateId>(inst.d.state_count());
        for (StateId p = 0; p < n; ++p)
            for (StateId q = 0; q < n; ++q)
                for (std::size_t l = 0; l <= 4; ++l)
                    CHECK(disc_equal_rooted(unfold_pdfa(inst.d, p, l), unfold_pdfa(inst.d, q, l)) ==
                          (oracle::words(inst.table, p, l) == oracle::words(inst.table, q, l)));
    }
}

TEST_CASE("equal labels have equal end cones")
{
    std::mt19937_64 rng(16);
    for (int round = 0; round < 60; ++round) {
        auto inst = random_instance(rng, true, 4);
        auto t = unfold_pdfa(inst.d, 0, 6);
        for (std::size_t u = 0; u < t.size(); ++u)
            for (std::size_t v = u + 1; v < t.size(); ++v)
                if (t.node(u).label == t.node(v).label && t.node(u).level == t.node(v).level)
                    CHECK(disc_equal_rooted(end_cone(t, u), end_cone(t, v), true));
    }
}

TEST_CASE("reduced automata unfold deterministically")
{
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        auto inst = random_instance(rng, true);
        for (std::size_t r = 0; r <= 2 * inst.d.state_count(); ++r)
            CHECK(is_deterministic(unfold_pdfa(inst.d, 0, r)));
    }
}

TEST_CASE("equivalence table agrees with canonical forms")
{
    std::mt19937_64 rng(18);
    for (int round = 0; round < 200; ++round) {
        auto a = random_instance(rng, false, 5);
        auto b = a;
        if (round % 2)
            b = {a.d, oracle::split_state(rng, a.table)};
        b.d = oracle::to_pdfa(b.table, a.d.alphabet());
        auto table = equivalence_table(a.d, b.d);
        for (StateId p = 0; p < a.d.state_count(); ++p)
            for (StateId q = 0; q < b.d.state_count(); ++q)
                CHECK(table.equivalent(p, q) ==
                      (oracle::canonical(a.table, p) == oracle::canonical(b.table, q)));
    }
}

TEST_CASE("non-rooted isomorphism is symmetric and implied by rooted isomorphism")
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 150; ++round) {
        auto a = random_instance(rng, true, 4);
        auto tb = oracle::random_reduced(rng, std::uniform_int_distribution<std::uint32_t>(1, 4)(rng), a.table.inverse);
        auto b = oracle::to_pdfa(tb, a.d.alphabet());
        auto forward = iso_nonrooted(a.d, 0, b, 0);
        auto backward = iso_nonrooted(b, 0, a.d, 0);
        CHECK(forward.isomorphic == backward.isomorphic);
        if (iso_rooted(a.d, 0, b, 0).isomorphic)
            CHECK(forward.isomorphic);
        if (forward.isomorphic)
            CHECK(verify_nonrooted_witness(a.d, 0, b, 0, forward.witness->word));
    }
}

TEST_CASE("oracle rerooting matches disc rerooting")
{
    std::mt19937_64 rng(20);
    for (int round = 0; round < 60; ++round) {
        auto inst = random_instance(rng, true, 4);
        auto big = unfold_pdfa(inst.d, 0, 5);
        for (std::size_t v = 0; v < big.size(); ++v) {
            const auto& w = big.node(v).word;
            if (w.size() > 2)
                continue;
            auto [t, root] = oracle::reroot(inst.table, 0, w);
            const auto l = 5 - w.size();
            CHECK(oracle::words(t, root, l) == oracle::disc_words_from(big, v, l));
            std::set<Word> lib;
            auto moved = reroot_disc(big, v);
            for (const auto& n : moved.nodes())
                lib.insert(n.word);
            CHECK(lib == oracle::words(t, root, l));
        }
    }
}

TEST_CASE("minimize preserves every state's tree")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 100; ++round) {
        auto inst = random_instance(rng, true, 6);
        auto q = quotient(inst.d);
        CHECK(q.automaton.state_count() == oracle::moore_class_count(inst.table));
        CHECK(is_reduced(q.automaton));
        for (StateId p = 0; p < inst.d.state_count(); ++p)
            CHECK(iso_rooted(inst.d, p, q.automaton, q.class_of[p]).isomorphic);
    }
}

TEST_CASE("JSON round trip of random automata")
{
    std::mt19937_64 rng(22);
    for (int round = 0; round < 100; ++round) {
        auto inst = random_instance(rng, round % 2 == 0);
        auto back = load_pdfa_json(to_json(inst.d));
        CHECK(back.alphabet() == inst.d.alphabet());
        CHECK(back.edges() == inst.d.edges());
    }
}
