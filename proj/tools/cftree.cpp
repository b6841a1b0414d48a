// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cftree/cftree.h"

namespace {

constexpr int kIsomorphic = 0;
constexpr int kNotIsomorphic = 1;
constexpr int kInvalidInput = 2;

struct AutomatonDeleter {
    void operator()(cftree_automaton* a) const { cftree_automaton_free(a); }
};
struct StringDeleter {
    void operator()(char* s) const { cftree_string_free(s); }
};
using Automaton = std::unique_ptr<cftree_automaton, AutomatonDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

// Thrown to leave a subcommand with a diagnostic and exit code 2.
struct Failure {
    std::string code;
    std::string message;
};

void check(cftree_status status)
{
    if (status != CFTREE_OK)
        throw Failure{cftree_status_name(status), cftree_last_error()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"E_IO", "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Failure{"E_IO", "cannot write '" + path + "'"};
}

Automaton load(const std::string& path)
{
    cftree_automaton* raw = nullptr;
    check(cftree_automaton_load(read_file(path).c_str(), &raw));
    return Automaton(raw);
}

std::string automaton_json(const Automaton& a)
{
    char* raw = nullptr;
    check(cftree_automaton_to_json(a.get(), &raw));
    return String(raw).get();
}

const char* state_arg(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deterministic context-free trees encoded by finite automata"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cftree_version());

    // validate
    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "Report every issue of an automaton document");
    validate->add_option("FILE", validate_file)->required();

    // unfold
    std::string unfold_file;
    std::optional<std::string> unfold_state;
    std::size_t radius = 0;
    bool as_dot = false, as_json = false;
    auto* unfold = app.add_subcommand("unfold", "Print the disc of the given radius around a state");
    unfold->add_option("FILE", unfold_file)->required();
    unfold->add_option("--state", unfold_state, "Root state (defaults to the document root)");
    unfold->add_option("--radius", radius)->required();
    auto* dot_flag = unfold->add_flag("--dot", as_dot, "Graphviz output");
    unfold->add_flag("--json", as_json, "Tree JSON output (default)")->excludes(dot_flag);

    // iso
    std::string iso_file_a, iso_file_b;
    std::vector<std::string> iso_states;
    bool rooted = false, unrooted = false, want_witness = false;
    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two generated trees (exit 0 iso, 1 not iso)");
    iso->add_option("FILE1", iso_file_a)->required();
    iso->add_option("FILE2", iso_file_b)->required();
    iso->add_option("--state", iso_states, "State per file, in order")->allow_extra_args(false);
    auto* rooted_flag = iso->add_flag("--rooted", rooted, "Rooted isomorphism (default)");
    iso->add_flag("--unrooted", unrooted, "Non-rooted isomorphism")->excludes(rooted_flag);
    iso->add_flag("--witness", want_witness, "Print the witness word");

    // reroot
    std::string reroot_file, reroot_word, reroot_out;
    std::optional<std::string> reroot_state;
    auto* reroot = app.add_subcommand("reroot", "Move the root along a word");
    reroot->add_option("FILE", reroot_file)->required();
    reroot->add_option("--state", reroot_state);
    reroot->add_option("--word", reroot_word, "Comma separated letters")->required();
    reroot->add_option("--out,-o", reroot_out, "Write here instead of stdout");

    // reduce-2gap
    std::string gap_file, gap_out_a, gap_out_b;
    auto* gap = app.add_subcommand("reduce-2gap", "Reduce a 2GAP instance to a rooted isomorphism instance");
    gap->add_option("GAPFILE", gap_file)->required();
    gap->add_option("--out-a", gap_out_a)->required();
    gap->add_option("--out-b", gap_out_b)->required();

    // lift-nonrooted
    std::string lift_file_a, lift_file_b;
    std::vector<std::string> lift_states;
    std::string lift_out_a, lift_out_b;
    auto* lift = app.add_subcommand("lift-nonrooted", "Attach TOP-edge roots so non-rooted iso means rooted iso");
    lift->add_option("FILE1", lift_file_a)->required();
    lift->add_option("FILE2", lift_file_b)->required();
    lift->add_option("--state", lift_states, "State per file, in order")->allow_extra_args(false);
    lift->add_option("--out-a", lift_out_a)->required();
    lift->add_option("--out-b", lift_out_b)->required();

    // compress
    std::string tree_file;
    auto* compress = app.add_subcommand("compress", "Compress a finite tree document into a minimal pDFA");
    compress->add_option("TREEFILE", tree_file)->required();

    // minimize
    std::string minimize_file;
    auto* minimize = app.add_subcommand("minimize", "Quotient a pDFA by language equivalence");
    minimize->add_option("FILE", minimize_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : kInvalidInput;
    }

    auto states_for = [](const std::vector<std::string>& states, std::size_t i) -> std::optional<std::string> {
        if (states.empty())
            return std::nullopt;
        if (states.size() != 2)
            throw Failure{"E_INVALID_ARGUMENT", "give --state once per file or not at all"};
        return states[i];
    };

    try {
        if (*validate) {
            int ok = 0;
            char* report = nullptr;
            check(cftree_validate_json(read_file(validate_file).c_str(), &ok, &report));
            std::cout << String(report).get();
            return ok ? 0 : kInvalidInput;
        }
        if (*unfold) {
            auto a = load(unfold_file);
            char* text = nullptr;
            check(cftree_unfold(a.get(), state_arg(unfold_state), radius,
                                as_dot ? CFTREE_FORMAT_DOT : CFTREE_FORMAT_JSON, &text));
            std::cout << String(text).get();
            return 0;
        }
        if (*iso) {
            auto a = load(iso_file_a);
            auto b = load(iso_file_b);
            auto sa = states_for(iso_states, 0), sb = states_for(iso_states, 1);
            int isomorphic = 0;
            char* witness = nullptr;
            check(cftree_iso(a.get(), state_arg(sa), b.get(), state_arg(sb),
                             unrooted ? CFTREE_ISO_NONROOTED : CFTREE_ISO_ROOTED, &isomorphic, &witness));
            String owned(witness);
            if (want_witness && owned)
                std::cout << owned.get() << "\n";
            return isomorphic ? kIsomorphic : kNotIsomorphic;
        }
        if (*reroot) {
            auto a = load(reroot_file);
            cftree_automaton* raw = nullptr;
            check(cftree_reroot(a.get(), state_arg(reroot_state), reroot_word.c_str(), &raw));
            auto text = automaton_json(Automaton(raw));
            if (reroot_out.empty())
                std::cout << text;
            else
                write_file(reroot_out, text);
            return 0;
        }
        if (*gap) {
            cftree_automaton *ra = nullptr, *rb = nullptr;
            check(cftree_reduce_2gap(read_file(gap_file).c_str(), &ra, &rb));
            Automaton a(ra), b(rb);
            write_file(gap_out_a, automaton_json(a));
            write_file(gap_out_b, automaton_json(b));
            return 0;
        }
        if (*lift) {
            auto a = load(lift_file_a);
            auto b = load(lift_file_b);
            auto sa = states_for(lift_states, 0), sb = states_for(lift_states, 1);
            cftree_automaton *ra = nullptr, *rb = nullptr;
            check(cftree_lift_nonrooted(a.get(), state_arg(sa), b.get(), state_arg(sb), &ra, &rb));
            Automaton la(ra), lb(rb);
            write_file(lift_out_a, automaton_json(la));
            write_file(lift_out_b, automaton_json(lb));
            return 0;
        }
        if (*compress) {
            cftree_automaton* raw = nullptr;
            check(cftree_compress_tree(read_file(tree_file).c_str(), &raw));
            std::cout << automaton_json(Automaton(raw));
            return 0;
        }
        if (*minimize) {
            auto a = load(minimize_file);
            cftree_automaton* raw = nullptr;
            check(cftree_minimize(a.get(), &raw));
            std::cout << automaton_json(Automaton(raw));
            return 0;
        }
    } catch (const Failure& f) {
        std::cerr << "error[" << f.code << "]: " << f.message << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
