#pragma once

#include <span>
#include <vector>

#include "hbg/spec.hpp"

namespace hbg {

// A fixed chord tuple describes one graph per order 2m with b | m. Every
// order >= threshold_order (and a multiple of 2b) has girth stable_girth.
struct FamilyCertificate {
    int sym_factor = 0;
    std::vector<int> chords;
    long threshold_order = 0;
    int stable_girth = 0;
    // Largest spread of unrolled labels within one layer of depth
    // < stable_girth / 2, over all 2b roots.
    long span_bound = 0;
    Label witness_root = 0;
    // Girth cycle on the unrolled (integer-labelled) cover; front() == back().
    std::vector<long> cover_cycle;
};

// Traverses the 2b trees on unreduced integer labels (no wrap-around), which
// is the common cover of every member of the family.
// Throws InvalidSpec for malformed chords, DegenerateChords when the residue
// condition fails (no member graph exists at any order).
FamilyCertificate stabilization(std::span<const int> chords, int sym_factor);

ChordIndexSpec family_member(const FamilyCertificate& cert, long order);

struct SpotCheck {
    long order = 0;
    int girth = 0;
    bool agrees = false;
};

// girth_symmetric at threshold, threshold + 2b, threshold + 40b, plus the
// first `extra` consecutive members.
std::vector<SpotCheck> spot_check(const FamilyCertificate& cert, int extra = 0);

// Direct girth of every member from `from` up to just below the threshold.
std::vector<SpotCheck> check_below_threshold(const FamilyCertificate& cert, long from);

}  // namespace hbg
