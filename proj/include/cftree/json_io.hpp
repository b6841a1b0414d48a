#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cftree/automaton.hpp"
#include "cftree/reductions.hpp"
#include "cftree/unfolding.hpp"

namespace cftree {

enum class AutomatonKind { MNfa, PDfa };

struct AutomatonDocument {
    AutomatonKind kind = AutomatonKind::MNfa;
    MNfa automaton;
    std::optional<std::string> root;
};

/// Checks an automaton document and reports every semantic issue at once.
/// Throws Error(Parse) for malformed JSON and Error(Schema) for unknown,
/// missing or mistyped fields.
ValidationReport validate_automaton_json(std::string_view text);

/// Parses and validates; throws Error(Invalid) listing the issues.
AutomatonDocument load_automaton_json(std::string_view text);

/// Loads a document and converts it to a pDFA (either kind is accepted when
/// deterministic). Throws NotDeterministic otherwise.
PDfa load_pdfa_json(std::string_view text, std::optional<std::string>* root = nullptr);

std::string to_json(const MNfa& m, AutomatonKind kind = AutomatonKind::MNfa,
                    const std::optional<std::string>& root = std::nullopt);
std::string to_json(const PDfa& d, const std::optional<std::string>& root = std::nullopt);

/// Finite tree document: {"alphabet"?, "radius"?, "root", "nodes", "edges"}.
/// Without "alphabet" every letter x is paired with its formal inverse.
/// Edges may point either way; each involutive pair is listed once.
DiscTree load_tree_json(std::string_view text);
std::string to_json(const DiscTree& t);

Gap2Instance load_gap2_json(std::string_view text);
std::string to_json(const Gap2Instance& g);

std::string to_json(const ValidationReport& report);

} // namespace cftree
