#include "cftree/cftree.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "cftree/compression.hpp"
#include "cftree/isomorphism.hpp"
#include "cftree/json_io.hpp"
#include "cftree/reductions.hpp"
#include "cftree/rerooting.hpp"
#include "cftree/unfolding.hpp"

using namespace cftree;

struct cftree_automaton {
    AutomatonDocument doc;
};

namespace {

thread_local std::string last_error;

template <class F>
cftree_status guarded(F&& body) noexcept
{
    last_error.clear();
    try {
        body();
        return CFTREE_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<cftree_status>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CFTREE_E_LIMIT_EXCEEDED;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CFTREE_E_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cftree_automaton* wrap(AutomatonDocument doc) { return new cftree_automaton{std::move(doc)}; }

cftree_automaton* wrap(const PDfa& d, StateId root)
{
    return wrap(AutomatonDocument{AutomatonKind::PDfa, d.as_mnfa(), d.state_name(root)});
}

std::string state_or_root(const cftree_automaton* h, const char* state)
{
    if (state)
        return state;
    if (!h->doc.root)
        throw Error(ErrorCode::UnknownState, "no state given and the document has no root");
    return *h->doc.root;
}

PDfa pdfa_of(const cftree_automaton* h) { return as_pdfa(h->doc.automaton); }

} // namespace

extern "C" {

const char* cftree_version(void) { return "1.0.0"; }

const char* cftree_status_name(cftree_status status)
{
    return error_code_name(static_cast<ErrorCode>(status)).data();
}

const char* cftree_last_error(void) { return last_error.c_str(); }

void cftree_string_free(char* s) { std::free(s); }

cftree_status cftree_validate_json(const char* json, int* ok, char** report_json)
{
    return guarded([&] {
        require(json, "json");
        if (report_json)
            *report_json = nullptr;
        auto report = validate_automaton_json(json);
        if (ok)
            *ok = report.ok() ? 1 : 0;
        if (report_json)
            *report_json = duplicate(to_json(report));
    });
}

cftree_status cftree_automaton_load(const char* json, cftree_automaton** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = nullptr;
        *out = wrap(load_automaton_json(json));
    });
}

void cftree_automaton_free(cftree_automaton* automaton) { delete automaton; }

cftree_status cftree_automaton_to_json(const cftree_automaton* automaton, char** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(out, "out");
        *out = nullptr;
        *out = duplicate(to_json(automaton->doc.automaton, automaton->doc.kind, automaton->doc.root));
    });
}

cftree_status cftree_automaton_to_dot(const cftree_automaton* automaton, char** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(out, "out");
        *out = nullptr;
        *out = duplicate(export_dot(automaton->doc.automaton));
    });
}

cftree_status cftree_automaton_root(const cftree_automaton* automaton, char** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(out, "out");
        *out = nullptr;
        *out = duplicate(state_or_root(automaton, nullptr));
    });
}

cftree_status cftree_automaton_is_reduced(const cftree_automaton* automaton, int* reduced)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(reduced, "reduced");
        *reduced = is_reduced(pdfa_of(automaton)) ? 1 : 0;
    });
}

cftree_status cftree_unfold(const cftree_automaton* automaton, const char* state, size_t radius,
                            cftree_format format, char** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(out, "out");
        *out = nullptr;
        const auto& m = automaton->doc.automaton;
        auto p = m.require_state(state_or_root(automaton, state));
        DiscTree tree = automaton->doc.kind == AutomatonKind::PDfa ? unfold_pdfa(as_pdfa(m), p, radius)
                                                                   : unfold_mnfa(m, p, radius);
        *out = duplicate(format == CFTREE_FORMAT_DOT ? export_dot(tree) : to_json(tree));
    });
}

cftree_status cftree_iso(const cftree_automaton* a, const char* state_a, const cftree_automaton* b,
                         const char* state_b, cftree_iso_mode mode, int* isomorphic, char** witness)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(isomorphic, "isomorphic");
        if (witness)
            *witness = nullptr;
        auto da = pdfa_of(a), db = pdfa_of(b);
        auto p = da.require_state(state_or_root(a, state_a));
        auto q = db.require_state(state_or_root(b, state_b));
        auto alphabet = common_alphabet(da, db);
        std::optional<Word> word;
        if (mode == CFTREE_ISO_NONROOTED) {
            auto verdict = iso_nonrooted(da, p, db, q);
            *isomorphic = verdict.isomorphic;
            if (verdict.witness)
                word = verdict.witness->word;
        } else {
            auto verdict = iso_rooted(da, p, db, q);
            *isomorphic = verdict.isomorphic;
            if (verdict.witness)
                word = verdict.witness->word;
        }
        if (witness)
            *witness = word ? duplicate(format_word(alphabet, *word)) : nullptr;
    });
}

cftree_status cftree_verify_nonrooted_witness(const cftree_automaton* a, const char* state_a,
                                              const cftree_automaton* b, const char* state_b, const char* word,
                                              int* accepted)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(word, "word");
        require(accepted, "accepted");
        auto da = pdfa_of(a), db = pdfa_of(b);
        auto p = da.require_state(state_or_root(a, state_a));
        auto q = db.require_state(state_or_root(b, state_b));
        auto w = parse_word(common_alphabet(da, db), word);
        *accepted = verify_nonrooted_witness(da, p, db, q, w) ? 1 : 0;
    });
}

cftree_status cftree_reroot(const cftree_automaton* automaton, const char* state, const char* word,
                            cftree_automaton** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(word, "word");
        require(out, "out");
        *out = nullptr;
        auto d = pdfa_of(automaton);
        auto p = d.require_state(state_or_root(automaton, state));
        auto [rerooted, root] = reroot_along_word(d, p, parse_word(d.alphabet(), word));
        *out = wrap(rerooted, root);
    });
}

cftree_status cftree_minimize(const cftree_automaton* automaton, cftree_automaton** out)
{
    return guarded([&] {
        require(automaton, "automaton");
        require(out, "out");
        *out = nullptr;
        auto d = pdfa_of(automaton);
        auto q = quotient(d);
        std::optional<std::string> root;
        if (automaton->doc.root)
            root = q.automaton.state_name(q.class_of[d.require_state(*automaton->doc.root)]);
        *out = wrap(AutomatonDocument{AutomatonKind::PDfa, q.automaton.as_mnfa(), root});
    });
}

cftree_status cftree_compress_tree(const char* tree_json, cftree_automaton** out)
{
    return guarded([&] {
        require(tree_json, "tree_json");
        require(out, "out");
        *out = nullptr;
        auto [d, root] = compress_finite_tree(load_tree_json(tree_json));
        *out = wrap(d, root);
    });
}

cftree_status cftree_reduce_2gap(const char* gap_json, cftree_automaton** out_a, cftree_automaton** out_b)
{
    return guarded([&] {
        require(gap_json, "gap_json");
        require(out_a, "out_a");
        require(out_b, "out_b");
        *out_a = *out_b = nullptr;
        auto pair = reduce_gap2_to_rooted_iso(load_gap2_json(gap_json));
        std::unique_ptr<cftree_automaton> a(wrap(pair.a, pair.root_a));
        *out_b = wrap(pair.b, pair.root_b);
        *out_a = a.release();
    });
}

cftree_status cftree_lift_nonrooted(const cftree_automaton* a, const char* state_a, const cftree_automaton* b,
                                    const char* state_b, cftree_automaton** out_a, cftree_automaton** out_b)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out_a, "out_a");
        require(out_b, "out_b");
        *out_a = *out_b = nullptr;
        auto da = pdfa_of(a), db = pdfa_of(b);
        auto p = da.require_state(state_or_root(a, state_a));
        auto q = db.require_state(state_or_root(b, state_b));
        auto pair = reduce_rooted_to_nonrooted(da, p, db, q);
        std::unique_ptr<cftree_automaton> la(wrap(pair.a, pair.root_a));
        *out_b = wrap(pair.b, pair.root_b);
        *out_a = la.release();
    });
}

} // extern "C"
