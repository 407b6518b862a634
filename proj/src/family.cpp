#include "hbg/family.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hbg/girth.hpp"
#include "tree_builder.hpp"

namespace hbg {

namespace {

long floor_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

struct SparseFirstSeen {
    std::unordered_map<Label, int> slot;
    int get(Label x) const {
        auto it = slot.find(x);
        return it == slot.end() ? -1 : it->second;
    }
    void set(Label x, int i) { slot.emplace(x, i); }
};

}  // namespace

FamilyCertificate stabilization(std::span<const int> chords, int sym_factor) {
    const int b = sym_factor;
    if (b <= 0 || static_cast<int>(chords.size()) != b) {
        throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(b) + " chord indices");
    }
    for (int d : chords) {
        if (d < 3 || d % 2 == 0) {
            throw Error(ErrorCode::InvalidSpec,
                        "chord index " + std::to_string(d) + " must be odd and >= 3");
        }
    }
    const long period = 2L * b;
    // even residue -> class whose chords land there
    std::vector<int> lands(static_cast<std::size_t>(period), -1);
    for (int i = 0; i < b; ++i) {
        const auto r = static_cast<std::size_t>(floor_mod(2L * i + 1 + chords[static_cast<std::size_t>(i)], period));
        if (lands[r] >= 0) {
            throw Error(ErrorCode::DegenerateChords,
                        "chord classes " + std::to_string(lands[r] + 1) + " and " +
                            std::to_string(i + 1) + " land on the same residue mod " +
                            std::to_string(period));
        }
        lands[r] = i;
    }

    auto neighbor = [&](Label x, EdgeKind kind) -> Label {
        if (kind == EdgeKind::Prev) return x - 1;
        if (kind == EdgeKind::Next) return x + 1;
        if (floor_mod(x, 2) == 1) {
            const auto cls = static_cast<std::size_t>(floor_mod((x - 1) / 2, b));
            return x + chords[cls];
        }
        const int cls = lands[static_cast<std::size_t>(floor_mod(x, period))];
        return x - chords[static_cast<std::size_t>(cls)];
    };

    FamilyCertificate cert;
    cert.sym_factor = b;
    cert.chords.assign(chords.begin(), chords.end());
    cert.stable_girth = std::numeric_limits<int>::max();

    std::vector<TraversalTree> trees;
    for (Label h = 1; h <= 2 * b; ++h) {
        SparseFirstSeen seen;
        // The cover is quasi one-dimensional, so a repeat always appears; the
        // cap only guards against a broken neighbor function.
        TraversalTree tree = detail::grow_tree(h, neighbor, seen, 64);
        if (!tree.repeat) {
            throw std::logic_error("unrolled traversal found no cycle");
        }
        const int length = tree.repeat->first_depth + tree.repeat->second_depth;
        if (length < cert.stable_girth) {
            cert.stable_girth = length;
            cert.witness_root = h;
            const auto cycle = extract_witness(tree);
            cert.cover_cycle.assign(cycle.begin(), cycle.end());
        }
        trees.push_back(std::move(tree));
    }

    // A shorter cycle in a finite member lifts to two same-depth walks from one
    // root whose endpoints differ by a nonzero multiple of the order.
    for (const auto& tree : trees) {
        for (int k = 1; k < cert.stable_girth / 2; ++k) {
            const auto layer = tree.layer(k);
            auto [lo, hi] = std::minmax_element(layer.begin(), layer.end(),
                                                [](const auto& a, const auto& c) { return a.label < c.label; });
            cert.span_bound = std::max<long>(cert.span_bound, static_cast<long>(hi->label) - lo->label);
        }
    }

    const long max_chord = *std::max_element(chords.begin(), chords.end());
    const long floor_order = std::max<long>(max_chord + 3, 4);
    long threshold = period * (cert.span_bound / period + 1);  // strictly above span
    if (threshold < floor_order) {
        threshold = period * ((floor_order + period - 1) / period);
    }
    cert.threshold_order = threshold;
    return cert;
}

ChordIndexSpec family_member(const FamilyCertificate& cert, long order) {
    return {static_cast<int>(order), cert.sym_factor, cert.chords};
}

std::vector<SpotCheck> spot_check(const FamilyCertificate& cert, int extra) {
    const long step = 2L * cert.sym_factor;
    std::set<long> offsets{0, 1, 20};
    for (int i = 0; i < extra; ++i) offsets.insert(i);
    std::vector<SpotCheck> out;
    for (long i : offsets) {
        const long order = cert.threshold_order + step * i;
        const int g = girth_symmetric(family_member(cert, order)).girth;
        out.push_back({order, g, g == cert.stable_girth});
    }
    return out;
}

std::vector<SpotCheck> check_below_threshold(const FamilyCertificate& cert, long from) {
    const long step = 2L * cert.sym_factor;
    if (from <= 0 || from % step != 0) {
        throw Error(ErrorCode::InvalidRange,
                    "start order must be a positive multiple of " + std::to_string(step));
    }
    std::vector<SpotCheck> out;
    for (long order = from; order < cert.threshold_order; order += step) {
        const ChordIndexSpec spec = family_member(cert, order);
        if (!validate_spec(spec).valid()) {
            out.push_back({order, 0, false});
            continue;
        }
        const int g = girth_symmetric(spec).girth;
        out.push_back({order, g, g == cert.stable_girth});
    }
    return out;
}

}  // namespace hbg
