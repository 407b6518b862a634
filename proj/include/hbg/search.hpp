#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbg/spec.hpp"

namespace hbg {

struct SearchTask {
    int girth = 6;       // target: every cycle must have length >= girth
    int order = 0;       // 2m
    int sym_factor = 1;  // b, must divide m
    std::uint64_t budget = 0;  // max search-tree nodes, 0 = unbounded
    bool prune_canonical = true;
};

void validate_task(const SearchTask& task);  // throws InvalidTask

enum class Verdict { Exists, NonExistent, Inconclusive };

const char* to_string(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(const std::string& text);

struct LevelStats {
    std::uint64_t nodes = 0;
    std::uint64_t girth_prunes = 0;
    std::uint64_t matching_prunes = 0;
    std::uint64_t canonical_prunes = 0;

    LevelStats& operator+=(const LevelStats& o);
    friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t girth_prunes = 0;
    std::uint64_t matching_prunes = 0;
    std::uint64_t canonical_prunes = 0;
    std::uint64_t solutions = 0;
    double seconds = 0.0;
    std::vector<LevelStats> per_level;  // index = chord position (0-based)

    void add(const SearchStats& o);
};

// Replay information for a refutation.
struct EnumerationCertificate {
    std::string reduction;        // symmetry reductions applied
    std::uint64_t leaves_refuted = 0;  // pruned branches of the explored tree
    std::vector<LevelStats> per_level;
    int value_min = 0;  // chord values tried: odd integers in [value_min, value_max]
    int value_max = 0;
};

struct SearchOutcome {
    SearchTask task;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ChordIndexSpec> witness;
    int witness_girth = 0;
    SearchStats stats;
    std::optional<EnumerationCertificate> certificate;  // NonExistent only
};

struct SearchProgress {
    std::uint64_t nodes;
    int depth;
    std::uint64_t prunes;
};

struct SearchOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    // When false, the search may stop at any witness; otherwise the
    // lexicographically least one is reported.
    bool minimal_witness = true;
    // Count every solution instead of stopping at the first.
    bool count_all = false;
    std::function<void(const SearchProgress&)> progress;
    std::uint64_t progress_every = 1u << 22;
};

// Depth-first assignment of d_1..d_b with matching forward checks, a local
// girth check around each new chord and optional dihedral canonical pruning.
SearchOutcome search(const SearchTask& task, const SearchOptions& options = {});

// Unbounded search; never Inconclusive.
SearchOutcome certify_nonexistence(int girth, int order, int sym_factor,
                                   const SearchOptions& options = {});

// Images of a spec's chord tuple under the dihedral relabelings of the
// Hamiltonian cycle that keep the symmetry factor. Always contains the spec
// itself; duplicates removed, sorted.
std::vector<std::vector<int>> symmetric_images(const ChordIndexSpec& spec);
bool is_canonical(const ChordIndexSpec& spec);

enum class SymPolicy { Ascending, Descending, FullOnly, Explicit };

struct ScanRequest {
    int girth = 6;
    int order_from = 0;
    int order_to = 0;
    SymPolicy policy = SymPolicy::Ascending;
    std::vector<int> explicit_factors;  // used with SymPolicy::Explicit
    std::uint64_t budget = 0;
    bool prune_canonical = true;
};

struct ScanEntry {
    int order = 0;
    Verdict verdict = Verdict::Inconclusive;
    // Outcome that decided the entry (the Exists hit, or the b = m refutation);
    // for Inconclusive the last attempt.
    SearchOutcome decisive;
    std::vector<SearchOutcome> attempts;
};

// Symmetry factors tried for one order under a policy (divisors of m).
std::vector<int> factors_for(int order, SymPolicy policy, const std::vector<int>& explicit_factors);

std::vector<ScanEntry> scan_orders(const ScanRequest& request, const SearchOptions& options = {},
                                   const std::function<void(const ScanEntry&)>& on_entry = {});

}  // namespace hbg
