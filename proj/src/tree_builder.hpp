#pragma once

#include <optional>

#include "hbg/girth.hpp"

namespace hbg::detail {

// Shared by the finite and the unrolled (integer-label) traversals.
// neighbor(x, kind) returns the label reached from x along `kind`;
// first_seen maps a label to the index of its first tree node, or -1.
template <typename Neighbor, typename FirstSeen>
TraversalTree grow_tree(Label root, Neighbor&& neighbor, FirstSeen& first_seen, int max_depth) {
    TraversalTree tree;
    tree.root = root;
    tree.nodes.push_back({root, -1, EdgeKind::Root});
    tree.layer_start = {0, 1};
    first_seen.set(root, 0);

    for (int depth = 1; depth <= max_depth; ++depth) {
        const int begin = tree.layer_start[static_cast<std::size_t>(depth - 1)];
        const int end = tree.layer_start[static_cast<std::size_t>(depth)];
        std::optional<RepeatEvent> best;
        for (int p = begin; p < end; ++p) {
            const TraversalNode parent = tree.nodes[static_cast<std::size_t>(p)];
            for (EdgeKind kind : {EdgeKind::Prev, EdgeKind::Next, EdgeKind::Chord}) {
                // The edge back to the parent is never re-traversed.
                if ((parent.via == EdgeKind::Prev && kind == EdgeKind::Next) ||
                    (parent.via == EdgeKind::Next && kind == EdgeKind::Prev) ||
                    (parent.via == EdgeKind::Chord && kind == EdgeKind::Chord)) {
                    continue;
                }
                const Label child = neighbor(parent.label, kind);
                const int index = static_cast<int>(tree.nodes.size());
                tree.nodes.push_back({child, p, kind});
                const int first = first_seen.get(child);
                if (first < 0) {
                    first_seen.set(child, index);
                    continue;
                }
                const int s = tree.depth_of(first);
                // Shortest closed walk first, then the repeat whose first
                // occurrence was discovered earliest, closed through the
                // last node of the layer carrying that label.
                if (!best || s < best->first_depth ||
                    (s == best->first_depth && first <= best->first_node)) {
                    best = RepeatEvent{child, s, depth, first, index};
                }
            }
        }
        tree.layer_start.push_back(static_cast<int>(tree.nodes.size()));
        if (best) {
            tree.repeat = best;
            break;
        }
    }
    return tree;
}

}  // namespace hbg::detail
