#include "hbg/graph.hpp"

#include <string>

namespace hbg {

namespace {

void check_label(Label x, int order) {
    if (x < 1 || x > order) {
        throw Error(ErrorCode::LabelOutOfRange,
                    "label " + std::to_string(x) + " outside 1.." + std::to_string(order));
    }
}

}  // namespace

HbGraph HbGraph::from_chord_map(std::span<const Label> chord_of) {
    const int n = static_cast<int>(chord_of.size());
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorCode::MalformedGraph, "order must be even and at least 4");
    }
    std::vector<int> partner(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const Label y = chord_of[static_cast<std::size_t>(v)];
        if (y < 1 || y > n) {
            throw Error(ErrorCode::MalformedGraph, "chord target out of range at label " +
                                                       std::to_string(v + 1));
        }
        partner[static_cast<std::size_t>(v)] = y - 1;
    }
    for (int v = 0; v < n; ++v) {
        const int w = partner[static_cast<std::size_t>(v)];
        if (w == v || partner[static_cast<std::size_t>(w)] != v) {
            throw Error(ErrorCode::MalformedGraph,
                        "chords are not an involution at label " + std::to_string(v + 1));
        }
        if ((v - w) % 2 == 0) {
            throw Error(ErrorCode::MalformedGraph,
                        "chord joins labels of equal parity at " + std::to_string(v + 1));
        }
        const int gap = (w - v + n) % n;
        if (gap == 1 || gap == n - 1) {
            throw Error(ErrorCode::MalformedGraph,
                        "chord parallel to a cycle edge at label " + std::to_string(v + 1));
        }
    }
    return HbGraph(std::move(partner));
}

Label HbGraph::chord_of(Label x) const {
    check_label(x, order());
    return partner(x - 1) + 1;
}

std::array<Label, 3> HbGraph::neighbors(Label x) const {
    check_label(x, order());
    auto nb = neighbors0(x - 1);
    return {nb[0] + 1, nb[1] + 1, nb[2] + 1};
}

bool HbGraph::adjacent(Label x, Label y) const {
    for (Label z : neighbors(x)) {
        if (z == y) return true;
    }
    return false;
}

HbGraph build_graph(const ChordIndexSpec& spec) {
    require_valid(spec);
    const int n = spec.order;
    const int b = spec.sym_factor;
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; v += 2) {
        const int d = spec.chords[static_cast<std::size_t>((v / 2) % b)];
        const int w = (v + d) % n;
        partner[static_cast<std::size_t>(v)] = w;
        partner[static_cast<std::size_t>(w)] = v;
    }
    return HbGraph(std::move(partner));
}

}  // namespace hbg
