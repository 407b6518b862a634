#include "hbg/reference.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hbg {

const char* to_string(ReferenceClass cls) noexcept {
    switch (cls) {
    case ReferenceClass::Symmetric: return "symmetric";
    case ReferenceClass::VertexTransitive: return "vertex-transitive";
    case ReferenceClass::Custom: return "custom";
    }
    return "custom";
}

ReferenceClass classify_reference(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "symmetric" || lower == "sym") return ReferenceClass::Symmetric;
    if (lower == "vertex-transitive" || lower == "vt") return ReferenceClass::VertexTransitive;
    return ReferenceClass::Custom;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return v.empty() ? "-" : out.str();
}

}  // namespace

ReferenceList parse_reference_csv(std::string_view text, std::string name, int girth, std::string source) {
    ReferenceList list;
    list.cls = classify_reference(name);
    list.name = std::move(name);
    list.girth = girth;
    list.source = std::move(source);

    std::optional<std::size_t> column;
    std::set<int> orders;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto cells = split_csv(line);
        if (!column) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] == "order") column = i;
            }
            if (!column) {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": expected a header with an 'order' column");
            }
            continue;
        }
        if (*column >= cells.size()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing order cell");
        }
        const std::string cell(cells[*column]);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(cell, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != cell.size() || value <= 0 || value > 1'000'000'000L) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": '" + cell + "' is not a positive integer");
        }
        if (value % 2 != 0) {
            throw Error(ErrorCode::OddOrderRejected,
                        "line " + std::to_string(line_no) + ": order " + cell + " is odd");
        }
        orders.insert(static_cast<int>(value));
    }
    list.orders.assign(orders.begin(), orders.end());
    return list;
}

ReferenceList ingest_reference(const std::filesystem::path& path, std::string_view format,
                               std::string name, int girth) {
    if (format != "csv") {
        throw Error(ErrorCode::UnsupportedFormat, "reference format '" + std::string(format) + "'");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_reference_csv(buffer.str(), std::move(name), girth, path.string());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

CageBounds reference_bounds(int girth) {
    static const std::vector<CageBounds> table = {
        {6, 14, 14, "Heawood"},
        {8, 30, 30, "Tutte"},
        {10, 70, 70, "O'Keefe-Wong"},
        {12, 126, 126, "Benson"},
        {14, 258, 384, "Exoo; lower bound McKay"},
        {16, 512, 960, "Exoo"},
        {18, 1024, 2560, "Exoo"},
        {20, 2048, 5376, "Exoo"},
        {22, 4096, 16206, "Biggs-Hoare"},
        {24, 8192, 49608, "Bray-Parker-Rowley"},
        {26, 16384, 109200, "Bray-Parker-Rowley"},
        {28, 32768, 415104, "Bray-Parker-Rowley"},
        {30, 65536, 1143408, "Exoo-Jajcay"},
        {32, 131072, 3650304, "Bray-Parker-Rowley"},
    };
    for (const auto& row : table) {
        if (row.girth == girth) return row;
    }
    throw Error(ErrorCode::OutOfTable, "no cage bounds recorded for girth " + std::to_string(girth));
}

const std::vector<KnownCage>& known_cages() {
    static const std::vector<KnownCage> table = {
        {5, 10, 1}, {6, 14, 1}, {7, 24, 1}, {8, 30, 1},
        {9, 58, 18}, {10, 70, 3}, {11, 112, 1}, {12, 126, 1},
    };
    return table;
}

std::optional<PublishedCounts> published_counts(int girth) {
    static const std::vector<PublishedCounts> table = {
        {6, 50, 19, 19, 10},
        {8, 90, 29, 21, 6},
        {10, 160, 29, 15, 7},
        {12, 400, 84, 26, 16},
        {14, 1000, 164, 35, 11},
    };
    for (const auto& row : table) {
        if (row.girth == girth) return row;
    }
    return std::nullopt;
}

ComparisonReport compare_report(const std::vector<CatalogRecord>& catalog,
                                const std::vector<ReferenceList>& references, int girth, int until) {
    ComparisonReport report;
    report.girth = girth;
    report.until = until;

    std::set<int> have;
    std::set<int> refuted;
    for (const auto& [order, record] : representatives(catalog, girth)) {
        if (order <= until) have.insert(order);
    }
    for (const auto& r : catalog) {
        if (r.girth == girth && r.verdict == Verdict::NonExistent && r.order <= until &&
            r.sym_factor == r.order / 2) {
            refuted.insert(r.order);
        }
    }
    report.catalog_orders.assign(have.begin(), have.end());
    report.nonexistent_orders.assign(refuted.begin(), refuted.end());

    for (const auto& ref : references) {
        if (ref.girth != 0 && ref.girth != girth) continue;
        ReferenceComparison cmp;
        cmp.name = ref.name;
        cmp.cls = ref.cls;
        std::set<int> theirs;
        for (int o : ref.orders) {
            if (o <= until) theirs.insert(o);
        }
        cmp.orders.assign(theirs.begin(), theirs.end());
        for (int o : theirs) (have.count(o) ? cmp.covered : cmp.reference_only).push_back(o);
        for (int o : have) {
            if (!theirs.count(o)) cmp.catalog_only.push_back(o);
        }
        report.references.push_back(std::move(cmp));
    }

    report.published = published_counts(girth);
    if (report.published && report.published->until != until) report.published.reset();

    try {
        report.bounds = reference_bounds(girth);
    } catch (const Error&) {
        report.bounds.reset();
    }
    if (report.bounds) {
        const auto& b = *report.bounds;
        if (have.count(static_cast<int>(b.lower)) && b.lower == b.upper) {
            report.notes.push_back("catalog contains the cage order " + std::to_string(b.lower) + " (" +
                                   b.attribution + ")");
        } else if (have.count(static_cast<int>(b.lower))) {
            report.notes.push_back("catalog contains an order equal to the lower bound " +
                                   std::to_string(b.lower));
        }
        if (b.upper != b.lower && have.count(static_cast<int>(b.upper))) {
            report.notes.push_back("catalog contains the record order " + std::to_string(b.upper) + " (" +
                                   b.attribution + ")");
        }
        if (!have.empty() && *have.begin() < b.lower) {
            report.notes.push_back("catalog order " + std::to_string(*have.begin()) +
                                   " lies below the known lower bound; check the inputs");
        }
    }
    return report;
}

std::string ComparisonReport::to_text() const {
    std::ostringstream out;
    out << "(3, " << girth << ") comparison until order " << until << "\n";
    out << "  catalog (Hamiltonian bipartite): " << catalog_orders.size() << " orders\n";
    out << "    " << join(catalog_orders) << "\n";
    out << "  refuted at full symmetry factor: " << join(nonexistent_orders) << "\n";
    for (const auto& ref : references) {
        out << "  reference " << ref.name << " (" << hbg::to_string(ref.cls) << "): " << ref.orders.size()
            << " orders, " << ref.covered.size() << " covered by catalog\n";
        out << "    reference-only: " << join(ref.reference_only) << "\n";
        out << "    catalog-only:   " << join(ref.catalog_only) << "\n";
    }
    if (published) {
        out << "  published counts until " << published->until << ": Hamiltonian bipartite "
            << published->hamiltonian_bipartite << ", vertex-transitive " << published->vertex_transitive
            << ", symmetric " << published->symmetric << "\n";
    }
    if (bounds) {
        out << "  n(3, " << girth << "): ";
        if (bounds->lower == bounds->upper) {
            out << bounds->lower;
        } else {
            out << bounds->lower << " .. " << bounds->upper;
        }
        out << " (" << bounds->attribution << ")\n";
    }
    for (const auto& note : notes) out << "  note: " << note << "\n";
    return out.str();
}

std::string ComparisonReport::to_json() const {
    nlohmann::json j;
    j["girth"] = girth;
    j["until"] = until;
    j["catalog"] = {{"count", catalog_orders.size()}, {"orders", catalog_orders}};
    j["nonexistent_full_symmetry"] = nonexistent_orders;
    j["references"] = nlohmann::json::array();
    for (const auto& ref : references) {
        nlohmann::json coverage = nlohmann::json::object();
        for (int o : ref.orders) {
            coverage[std::to_string(o)] = std::binary_search(catalog_orders.begin(), catalog_orders.end(), o);
        }
        j["references"].push_back({{"name", ref.name},
                                   {"class", hbg::to_string(ref.cls)},
                                   {"count", ref.orders.size()},
                                   {"orders", ref.orders},
                                   {"covered", ref.covered},
                                   {"reference_only", ref.reference_only},
                                   {"catalog_only", ref.catalog_only},
                                   {"coverage", coverage}});
    }
    if (published) {
        j["published"] = {{"until", published->until},
                          {"hamiltonian_bipartite", published->hamiltonian_bipartite},
                          {"vertex_transitive", published->vertex_transitive},
                          {"symmetric", published->symmetric}};
    }
    if (bounds) {
        j["cage_bounds"] = {{"lower", bounds->lower}, {"upper", bounds->upper}, {"attribution", bounds->attribution}};
    }
    j["notes"] = notes;
    return j.dump(2);
}

}  // namespace hbg
