#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbg/catalog.hpp"

namespace hbg {

enum class ReferenceClass { Symmetric, VertexTransitive, Custom };

const char* to_string(ReferenceClass cls) noexcept;
// "symmetric"/"sym", "vertex-transitive"/"vt", anything else is Custom.
ReferenceClass classify_reference(std::string_view name);

// An externally supplied list of orders for which (3, g) graphs of some class
// are known. Orders are even and strictly increasing.
struct ReferenceList {
    ReferenceClass cls = ReferenceClass::Custom;
    std::string name;
    int girth = 0;
    std::vector<int> orders;
    std::string source;
};

// CSV with an "order" column; '#' starts a comment; blank lines ignored.
// Throws ParseError (with the line number) or OddOrderRejected.
ReferenceList parse_reference_csv(std::string_view text, std::string name, int girth,
                                  std::string source = {});
// Only "csv" is understood; anything else is UnsupportedFormat.
ReferenceList ingest_reference(const std::filesystem::path& path, std::string_view format,
                               std::string name, int girth);

struct CageBounds {
    int girth = 0;
    long lower = 0;
    long upper = 0;
    std::string attribution;
};

// Known bounds on n(3, g) for even g in 6..32.
// Throws OutOfTable elsewhere.
CageBounds reference_bounds(int girth);

struct KnownCage {
    int girth;
    long order;
    int count;
};
const std::vector<KnownCage>& known_cages();

// Order counts previously published for this catalog family, keyed by girth.
struct PublishedCounts {
    int girth;
    int until;
    int hamiltonian_bipartite;
    int vertex_transitive;
    int symmetric;
};
std::optional<PublishedCounts> published_counts(int girth);

struct ReferenceComparison {
    std::string name;
    ReferenceClass cls = ReferenceClass::Custom;
    std::vector<int> orders;          // reference orders <= until
    std::vector<int> covered;         // also on the catalog
    std::vector<int> reference_only;  // not on the catalog
    std::vector<int> catalog_only;    // on the catalog, not on the reference
};

struct ComparisonReport {
    int girth = 0;
    int until = 0;
    std::vector<int> catalog_orders;      // orders with an Exists record
    std::vector<int> nonexistent_orders;  // orders refuted at full symmetry
    std::vector<ReferenceComparison> references;
    std::optional<PublishedCounts> published;
    std::optional<CageBounds> bounds;
    std::vector<std::string> notes;

    std::string to_text() const;
    std::string to_json() const;
};

ComparisonReport compare_report(const std::vector<CatalogRecord>& catalog,
                                const std::vector<ReferenceList>& references, int girth, int until);

}  // namespace hbg
