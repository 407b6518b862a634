#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbg/graph.hpp"
#include "hbg/spec.hpp"

namespace hbg {

enum class EdgeKind : std::uint8_t { Root, Prev, Next, Chord };

const char* to_string(EdgeKind kind) noexcept;

struct TraversalNode {
    Label label;
    int parent;  // index into TraversalTree::nodes, -1 for the root
    EdgeKind via;
};

// Label `label` first appears at first_depth and again at second_depth; the
// two root paths close a walk of length first_depth + second_depth.
struct RepeatEvent {
    Label label;
    int first_depth;
    int second_depth;
    int first_node;
    int second_node;
};

// Breadth-first tree of non-backtracking walks from `root`, cut off after the
// first layer that contains a label already present in the tree.
struct TraversalTree {
    Label root = 0;
    std::vector<TraversalNode> nodes;
    std::vector<int> layer_start;  // layer k is nodes[layer_start[k], layer_start[k+1])
    std::optional<RepeatEvent> repeat;

    int depth() const noexcept { return static_cast<int>(layer_start.size()) - 2; }
    std::span<const TraversalNode> layer(int k) const;
    // Labels from the root down to nodes[index], inclusive.
    std::vector<Label> path_to(int index) const;
    int depth_of(int index) const;
};

TraversalTree traverse(Label root, const ChordIndexSpec& spec);
// Any root 1..order is allowed here; the spec overload restricts to 1..2b.
TraversalTree traverse(Label root, const HbGraph& graph);

struct GirthResult {
    int girth = 0;
    std::vector<Label> witness;  // closed: front() == back(), girth edges
    Label root_used = 0;
};

// Exact girth from the 2b rotation representatives. The witness is
// re-checked edge by edge before returning.
GirthResult girth_symmetric(const ChordIndexSpec& spec);

// Closed witness from a tree's repeat event, shared root prefix trimmed.
std::vector<Label> extract_witness(const TraversalTree& tree);

// True when `cycle` is closed, simple, and follows graph edges.
bool is_cycle_in(const HbGraph& graph, std::span<const Label> cycle);

// Independent check: BFS from every vertex, no symmetry assumptions.
int girth_oracle(const HbGraph& graph);

// Same oracle over an arbitrary simple undirected graph given as 0-based
// adjacency lists. Returns 0 for a forest. Throws MalformedGraph when the
// lists are not symmetric or contain loops.
int girth_oracle(const std::vector<std::vector<int>>& adjacency);

}  // namespace hbg
