#include "hbg/girth.hpp"

#include "tree_builder.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace hbg {

const char* to_string(EdgeKind kind) noexcept {
    switch (kind) {
    case EdgeKind::Root: return "root";
    case EdgeKind::Prev: return "prev";
    case EdgeKind::Next: return "next";
    case EdgeKind::Chord: return "chord";
    }
    return "?";
}

std::span<const TraversalNode> TraversalTree::layer(int k) const {
    if (k < 0 || k > depth()) return {};
    const auto begin = static_cast<std::size_t>(layer_start[static_cast<std::size_t>(k)]);
    const auto end = static_cast<std::size_t>(layer_start[static_cast<std::size_t>(k) + 1]);
    return std::span<const TraversalNode>(nodes).subspan(begin, end - begin);
}

std::vector<Label> TraversalTree::path_to(int index) const {
    std::vector<Label> path;
    for (int i = index; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
        path.push_back(nodes[static_cast<std::size_t>(i)].label);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int TraversalTree::depth_of(int index) const {
    auto it = std::upper_bound(layer_start.begin(), layer_start.end(), index);
    return static_cast<int>(it - layer_start.begin()) - 1;
}

namespace {

struct DenseFirstSeen {
    std::vector<int> slot;
    int get(Label x) const { return slot[static_cast<std::size_t>(x - 1)]; }
    void set(Label x, int i) { slot[static_cast<std::size_t>(x - 1)] = i; }
};

}  // namespace

TraversalTree traverse(Label root, const HbGraph& graph) {
    const int n = graph.order();
    if (root < 1 || root > n) {
        throw Error(ErrorCode::RootOutOfRange,
                    "root " + std::to_string(root) + " outside 1.." + std::to_string(n));
    }
    DenseFirstSeen seen{std::vector<int>(static_cast<std::size_t>(n), -1)};
    auto neighbor = [&graph](Label x, EdgeKind kind) {
        const auto nb = graph.neighbors0(x - 1);
        switch (kind) {
        case EdgeKind::Prev: return nb[0] + 1;
        case EdgeKind::Next: return nb[1] + 1;
        default: return nb[2] + 1;
        }
    };
    // n distinct labels force a repeat no later than depth n.
    return detail::grow_tree(root, neighbor, seen, n);
}

TraversalTree traverse(Label root, const ChordIndexSpec& spec) {
    require_valid(spec);
    if (root < 1 || root > 2 * spec.sym_factor) {
        throw Error(ErrorCode::RootOutOfRange,
                    "root " + std::to_string(root) + " outside 1.." +
                        std::to_string(2 * spec.sym_factor));
    }
    return traverse(root, build_graph(spec));
}

std::vector<Label> extract_witness(const TraversalTree& tree) {
    if (!tree.repeat) return {};
    std::vector<int> a;
    std::vector<int> b;
    for (int i = tree.repeat->first_node; i >= 0; i = tree.nodes[static_cast<std::size_t>(i)].parent) {
        a.push_back(i);
    }
    for (int i = tree.repeat->second_node; i >= 0; i = tree.nodes[static_cast<std::size_t>(i)].parent) {
        b.push_back(i);
    }
    // Both lists end at the root; strip the common tail except the branch node.
    while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
        a.pop_back();
        b.pop_back();
    }
    std::vector<Label> cycle;
    for (int i : b) cycle.push_back(tree.nodes[static_cast<std::size_t>(i)].label);
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        cycle.push_back(tree.nodes[static_cast<std::size_t>(*it)].label);
    }
    return cycle;
}

bool is_cycle_in(const HbGraph& graph, std::span<const Label> cycle) {
    if (cycle.size() < 4 || cycle.front() != cycle.back()) return false;
    const int n = graph.order();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        const Label x = cycle[i];
        if (x < 1 || x > n || used[static_cast<std::size_t>(x - 1)]) return false;
        used[static_cast<std::size_t>(x - 1)] = 1;
        if (!graph.adjacent(x, cycle[i + 1])) return false;
    }
    // A 2-vertex back-and-forth is not a cycle.
    return cycle.size() >= 4;
}

GirthResult girth_symmetric(const ChordIndexSpec& spec) {
    require_valid(spec);
    const HbGraph graph = build_graph(spec);
    GirthResult result;
    result.girth = std::numeric_limits<int>::max();
    TraversalTree best_tree;
    for (Label h = 1; h <= 2 * spec.sym_factor; ++h) {
        TraversalTree tree = traverse(h, graph);
        if (!tree.repeat) continue;
        const int length = tree.repeat->first_depth + tree.repeat->second_depth;
        if (length < result.girth) {
            result.girth = length;
            result.root_used = h;
            best_tree = std::move(tree);
        }
    }
    result.witness = extract_witness(best_tree);
    if (result.witness.size() != static_cast<std::size_t>(result.girth) + 1 ||
        !is_cycle_in(graph, result.witness)) {
        throw std::logic_error("girth witness failed verification for " + to_string(spec));
    }
#ifndef NDEBUG
    if (const int oracle = girth_oracle(graph); oracle != result.girth) {
        throw std::logic_error("girth engine disagrees with oracle for " + to_string(spec) +
                               ": " + std::to_string(result.girth) + " vs " +
                               std::to_string(oracle));
    }
#endif
    return result;
}

int girth_oracle(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    for (int u = 0; u < n; ++u) {
        for (int w : adjacency[static_cast<std::size_t>(u)]) {
            if (w < 0 || w >= n) {
                throw Error(ErrorCode::MalformedGraph,
                            "neighbor out of range at vertex " + std::to_string(u));
            }
            const auto& back = adjacency[static_cast<std::size_t>(w)];
            const auto& own = adjacency[static_cast<std::size_t>(u)];
            if (w == u || std::count(back.begin(), back.end(), u) != 1 ||
                std::count(own.begin(), own.end(), w) != 1) {
                throw Error(ErrorCode::MalformedGraph,
                            "adjacency not simple and symmetric at vertex " + std::to_string(u));
            }
        }
    }
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int u = queue[head++];
            const int du = dist[static_cast<std::size_t>(u)];
            if (2 * du >= best) break;
            for (int w : adjacency[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    // Non-tree edge: closes a walk through s of this length.
                    best = std::min(best, du + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

int girth_oracle(const HbGraph& graph) {
    const int n = graph.order();
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto nb = graph.neighbors0(v);
        adjacency[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
    }
    return girth_oracle(adjacency);
}

}  // namespace hbg
