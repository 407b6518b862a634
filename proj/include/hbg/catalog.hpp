#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbg/search.hpp"

namespace hbg {

inline constexpr int kCatalogSchema = 1;

// One line of the catalog file:
// {schema:1, g, order, b, chords?, verdict, verified, nodes, seconds, ts}
struct CatalogRecord {
    int girth = 0;
    int order = 0;
    int sym_factor = 0;
    std::optional<std::vector<int>> chords;  // present iff verdict == Exists
    Verdict verdict = Verdict::Inconclusive;
    bool verified = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    std::string timestamp;  // ISO 8601 UTC

    std::optional<ChordIndexSpec> spec() const;
};

std::string to_json_line(const CatalogRecord& record);
// Throws CorruptStore on malformed input.
CatalogRecord parse_record_line(std::string_view line);

std::string utc_timestamp();
CatalogRecord record_from_outcome(const SearchOutcome& outcome);

// Re-runs the girth engine on an Exists record; false when the chords are
// invalid or fall short of the claimed girth.
bool verify_record(const CatalogRecord& record);

struct CatalogFilter {
    std::optional<int> girth;
    std::optional<int> order_min;
    std::optional<int> order_max;
    std::optional<Verdict> verdict;

    bool matches(const CatalogRecord& record) const;
};

// Append-only JSON Lines store. Appends are serialized with an exclusive file
// lock and written with a single write + fsync; an unterminated trailing line
// (a torn write) is invisible to readers and trimmed by the next append.
class CatalogStore {
public:
    explicit CatalogStore(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

    // Throws VerificationFailed when an Exists record does not re-verify.
    CatalogRecord append(CatalogRecord record);

    // Throws CorruptStore on a malformed or non-verifying line.
    std::vector<CatalogRecord> load(const CatalogFilter& filter = {}) const;

private:
    std::filesystem::path path_;
};

// Per order, the Exists record with the largest symmetry factor.
std::map<int, CatalogRecord> representatives(const std::vector<CatalogRecord>& records, int girth);

}  // namespace hbg
