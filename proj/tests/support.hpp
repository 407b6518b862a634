#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "hbg/spec.hpp"

namespace hbg::support {

// Uniform-ish random valid spec with b <= max_b and order <= max_order.
inline ChordIndexSpec random_spec(std::mt19937& rng, int max_b = 8, int max_order = 200) {
    for (;;) {
        const int b = std::uniform_int_distribution<int>(1, max_b)(rng);
        const int max_k = max_order / (2 * b);
        if (max_k < 1) continue;
        const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
        const int m = b * k;
        if (m < 3) continue;
        const int n = 2 * m;
        // (2i - 1 + d_i) mod 2b must be a permutation of the even residues.
        std::vector<int> residues(static_cast<std::size_t>(b));
        std::iota(residues.begin(), residues.end(), 0);
        std::shuffle(residues.begin(), residues.end(), rng);
        std::vector<int> chords;
        bool ok = true;
        for (int i = 1; i <= b && ok; ++i) {
            const int cls = (((2 * residues[i - 1] - (2 * i - 1)) % (2 * b)) + 2 * b) % (2 * b);
            std::vector<int> candidates;
            for (int d = 3; d <= n - 3; d += 2) {
                if (d % (2 * b) == cls) candidates.push_back(d);
            }
            if (candidates.empty()) {
                ok = false;
                break;
            }
            chords.push_back(candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)]);
        }
        if (ok) return ChordIndexSpec{n, b, chords};
    }
}

inline std::vector<std::vector<int>> cycle_plus_chords(int n, const std::vector<int>& chord_of) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[v] = {(v + n - 1) % n, (v + 1) % n, chord_of[v] - 1};
    }
    return adj;
}

// Shortest cycle by exhaustive simple-cycle enumeration; fine up to ~20 vertices.
inline int brute_force_girth(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int)> extend = [&](int start, int v, int len) {
        if (best && len + 1 >= best) return;
        for (int w : adj[v]) {
            if (w == start && len >= 2) {
                best = len + 1;
                return;
            }
            if (w > start && !used[w]) {
                used[w] = 1;
                extend(start, w, len + 1);
                used[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        extend(s, s, 0);
        used[s] = 0;
    }
    return best;
}

// Independent spec expansion straight from the defining formula.
inline std::vector<int> chord_map_from_formula(const ChordIndexSpec& spec) {
    const int n = spec.order;
    std::vector<int> chord(static_cast<std::size_t>(n), 0);
    for (int j = 1; 2 * j - 1 <= n; ++j) {
        const int x = 2 * j - 1;
        const int d = spec.chords[static_cast<std::size_t>((j - 1) % spec.sym_factor)];
        const int y = ((x + d - 1) % n) + 1;
        chord[x - 1] = y;
        chord[y - 1] = x;
    }
    return chord;
}

}  // namespace hbg::support
