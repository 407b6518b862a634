#pragma once

#include <array>
#include <span>
#include <vector>

#include "hbg/spec.hpp"

namespace hbg {

// Explicit cubic realization: Hamiltonian edges x <-> x+1 are implicit, the
// third edge of every vertex is stored in a fixed-point-free involution.
class HbGraph {
public:
    // Validates the involution and parity constraints; throws MalformedGraph.
    // chord_of[x-1] is the 1-based chord partner of label x.
    static HbGraph from_chord_map(std::span<const Label> chord_of);

    int order() const noexcept { return static_cast<int>(partner_.size()); }

    Label chord_of(Label x) const;
    // Neighbors as {prev, next, chord}.
    std::array<Label, 3> neighbors(Label x) const;
    bool adjacent(Label x, Label y) const;

    // 0-based access for hot loops: vertex v is label v+1.
    int partner(int v) const noexcept { return partner_[static_cast<std::size_t>(v)]; }
    std::array<int, 3> neighbors0(int v) const noexcept {
        const int n = order();
        return {v == 0 ? n - 1 : v - 1, v + 1 == n ? 0 : v + 1, partner(v)};
    }

    friend bool operator==(const HbGraph&, const HbGraph&) = default;

private:
    explicit HbGraph(std::vector<int> partner) : partner_(std::move(partner)) {}
    friend HbGraph build_graph(const ChordIndexSpec& spec);

    std::vector<int> partner_;
};

// Throws Error(InvalidSpec) with the validation report when spec is invalid.
HbGraph build_graph(const ChordIndexSpec& spec);

}  // namespace hbg
