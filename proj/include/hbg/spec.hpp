#pragma once

#include <string>
#include <vector>

#include "hbg/error.hpp"

namespace hbg {

// Vertex labels on the public surface are 1-based positions along the
// Hamiltonian cycle 1 -> 2 -> ... -> order -> 1.
using Label = int;

// D3 chord-index description of a Hamiltonian bipartite trivalent graph.
// Odd label 2j-1 is joined by a chord to label 2j-1 + chords[(j-1) mod b]
// (taken cyclically), so the pattern repeats every 2b labels.
struct ChordIndexSpec {
    int order = 0;
    int sym_factor = 0;
    std::vector<int> chords;

    int half_order() const noexcept { return order / 2; }

    friend bool operator==(const ChordIndexSpec&, const ChordIndexSpec&) = default;
};

enum class ViolationCode {
    OrderNotEven,
    OrderTooSmall,
    SymFactorNotPositive,
    DivisibilityViolation,
    ChordCountMismatch,
    EvenChordIndex,
    ChordOutOfRange,
    NotAMatching,
};

const char* to_string(ViolationCode code) noexcept;

struct Violation {
    ViolationCode code;
    int index = -1;  // 1-based chord position, -1 when not tied to one chord
    long value = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool has(ViolationCode code) const noexcept;
    std::string to_string() const;
};

// Collects every violated invariant rather than stopping at the first one.
ValidationReport validate_spec(const ChordIndexSpec& spec);

// Throws Error(InvalidSpec) carrying the rendered report.
void require_valid(const ChordIndexSpec& spec);

// Periodic extension l_1..l_m of the b chord indices.
std::vector<int> expand_indices(const ChordIndexSpec& spec);

// Same graph, described with the full symmetry factor b = m.
ChordIndexSpec expand_to_full(const ChordIndexSpec& spec);

Label chord_target(Label x, const ChordIndexSpec& spec);
Label prev_label(Label x, int order);
Label next_label(Label x, int order);

std::string format_chords(const std::vector<int>& chords);
std::string to_string(const ChordIndexSpec& spec);

}  // namespace hbg
