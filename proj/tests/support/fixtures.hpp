#pragma once
// Small automata used across the unit tests.

#include <string>
#include <vector>

#include "cftree/automaton.hpp"

namespace fixtures {

inline cftree::InvolutiveAlphabet a_pm() { return cftree::involutive_closure({"a"}); }
inline cftree::InvolutiveAlphabet ab_pm() { return cftree::involutive_closure({"a", "b"}); }

inline cftree::LetterId letter(const cftree::InvolutiveAlphabet& x, const std::string& name)
{
    return *x.find(name);
}

inline cftree::Word word(const cftree::InvolutiveAlphabet& x, const std::vector<std::string>& names)
{
    cftree::Word w;
    for (const auto& n : names)
        w.push_back(letter(x, n));
    return w;
}

// One state p with two a-loops τ₀ (id 0) and τ₁ (id 1).
inline cftree::MNfa double_loop()
{
    auto x = a_pm();
    auto a = letter(x, "a");
    return cftree::MNfa(x, {"p"}, {{0, 0, a, 0}, {1, 0, a, 0}});
}

// p: a-loop, p -b-> q, q: b-loop.
inline cftree::MNfa loop_ray_mnfa()
{
    auto x = ab_pm();
    auto a = letter(x, "a"), b = letter(x, "b");
    return cftree::MNfa(x, {"p", "q"}, {{0, 0, a, 0}, {1, 0, b, 1}, {2, 1, b, 1}});
}

inline cftree::PDfa loop_ray() { return cftree::as_pdfa(loop_ray_mnfa()); }

// p with an a-loop and an a⁻¹-loop: deterministic, not reduced.
inline cftree::PDfa two_way_loop()
{
    auto x = a_pm();
    return cftree::PDfa(x, {"p"}, {{0, letter(x, "a"), 0}, {0, letter(x, "a^-1"), 0}});
}

// u: a-loop. Γ(u) is a ray rooted at its endpoint.
inline cftree::PDfa ray()
{
    auto x = a_pm();
    return cftree::PDfa(x, {"u"}, {{0, letter(x, "a"), 0}});
}

// r -a⁻¹-> z (dead), r -a-> s, s: a-loop. A ray rooted one step in.
inline cftree::PDfa ray_interior()
{
    auto x = a_pm();
    auto a = letter(x, "a"), ai = letter(x, "a^-1");
    return cftree::PDfa(x, {"r", "z", "s"}, {{0, ai, 1}, {0, a, 2}, {2, a, 2}});
}

// v -a-> s, s: a-loop, v -a⁻¹-> x, x: a⁻¹-loop. The bi-infinite line.
inline cftree::PDfa line()
{
    auto x = a_pm();
    auto a = letter(x, "a"), ai = letter(x, "a^-1");
    return cftree::PDfa(x, {"v", "s", "x"}, {{0, a, 1}, {1, a, 1}, {0, ai, 2}, {2, ai, 2}});
}

// A state without transitions.
inline cftree::PDfa dead()
{
    return cftree::PDfa(a_pm(), {"d"}, {});
}

} // namespace fixtures
