#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cftree/alphabet.hpp"
#include "cftree/automaton.hpp"

namespace cftree {

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

struct DiscNode {
    std::size_t parent = kNoNode;
    LetterId letter = 0; // label of the edge parent -> this node
    std::size_t level = 0;
    std::string label;   // node labeling (state name); empty when unlabeled
    Word word;           // letters along the root -> node path
    std::vector<TransitionId> run; // mNFA unfoldings: the run naming this node
    std::vector<std::size_t> children;
};

/// A finite rooted involutive tree, stored as parent -> child edges. The
/// child -> parent edge with the inverse letter is implicit, so the edge set
/// is always the involutive closure. The root is node 0 and every parent has
/// a smaller index than its children.
class DiscTree {
public:
    DiscTree() = default;
    DiscTree(InvolutiveAlphabet alphabet, std::size_t radius, std::string root_label);

    std::size_t add_child(std::size_t parent, LetterId letter, std::string label, std::vector<TransitionId> run = {});

    const InvolutiveAlphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    static constexpr std::size_t root() noexcept { return 0; }
    const DiscNode& node(std::size_t v) const { return nodes_.at(v); }
    const std::vector<DiscNode>& nodes() const noexcept { return nodes_; }
    std::size_t height() const noexcept;

    std::optional<std::size_t> find_word(const Word& w) const;

    struct LabeledEdge {
        std::size_t from;
        LetterId letter;
        std::size_t to;
        friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
    };
    /// Full involutive edge set, sorted.
    std::vector<LabeledEdge> edges() const;

    /// Same tree with a different declared radius (must cover the height).
    DiscTree with_radius(std::size_t radius) const;

private:
    InvolutiveAlphabet alphabet_;
    std::size_t radius_ = 0;
    std::vector<DiscNode> nodes_;
};

struct UnfoldLimits {
    std::size_t max_nodes = std::size_t{1} << 20;
};

/// Runs of length <= radius from p; node label = end state of the run.
DiscTree unfold_mnfa(const MNfa& m, StateId p, std::size_t radius, UnfoldLimits limits = {});
/// Words of L(p) of length <= radius; node label = state reached.
DiscTree unfold_pdfa(const PDfa& d, StateId p, std::size_t radius, UnfoldLimits limits = {});

/// L(p) ∩ A^{<=maxlen}.
std::set<Word> language_upto(const PDfa& d, StateId p, std::size_t maxlen, UnfoldLimits limits = {});

/// Rooted A-isomorphism test of two discs of equal radius. With use_labels
/// the isomorphism must additionally admit a bijection between node labels.
/// Throws RadiusMismatch.
bool disc_equal_rooted(const DiscTree& x, const DiscTree& y, bool use_labels = false);

/// Descendants of v, rooted at v, radius reduced by level(v).
DiscTree end_cone(const DiscTree& t, std::size_t v);
/// The same involutive tree rooted at v, truncated to radius - level(v).
DiscTree reroot_disc(const DiscTree& t, std::size_t v);
/// Nodes of level <= radius.
DiscTree truncate(const DiscTree& t, std::size_t radius);

/// True iff the involutive closure has no two equally labeled edges leaving
/// one node.
bool is_deterministic(const DiscTree& t);

/// Graphviz text. Trees draw one edge per involutive pair (parent -> child);
/// automata draw one edge per transition.
std::string export_dot(const DiscTree& t);
std::string export_dot(const MNfa& m);
std::string export_dot(const PDfa& d);

} // namespace cftree
