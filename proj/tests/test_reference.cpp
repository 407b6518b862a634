#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hbg/reference.hpp"

using namespace hbg;

namespace {

ErrorCode code_of(std::string_view text) {
    try {
        (void)parse_reference_csv(text, "custom", 6);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorCode::Io;
}

CatalogRecord exists(int g, int n, int b, std::vector<int> d) {
    CatalogRecord r;
    r.girth = g;
    r.order = n;
    r.sym_factor = b;
    r.chords = std::move(d);
    r.verdict = Verdict::Exists;
    return r;
}

CatalogRecord refuted(int g, int n) {
    CatalogRecord r;
    r.girth = g;
    r.order = n;
    r.sym_factor = n / 2;
    r.verdict = Verdict::NonExistent;
    return r;
}

std::vector<int> evens(int from, int to) {
    std::vector<int> v;
    for (int n = from; n <= to; n += 2) v.push_back(n);
    return v;
}

std::string csv(const std::vector<int>& orders) {
    std::string s = "# test list\norder\n";
    for (int o : orders) s += std::to_string(o) + "\n";
    return s;
}

const std::vector<int> kSym6 = {14, 16, 18, 20, 24, 26, 32, 38, 42, 50};
const std::vector<int> kVt8 = {30, 40, 42, 48, 50, 52, 54, 56, 58, 60, 64,
                               66, 68, 70, 72, 74, 78, 80, 82, 84, 90};

}  // namespace

TEST(ReferenceCsv, Parses) {
    const auto list = parse_reference_csv(csv(kSym6), "symmetric", 6, "unit");
    EXPECT_EQ(list.orders, kSym6);
    EXPECT_EQ(list.cls, ReferenceClass::Symmetric);
    EXPECT_EQ(parse_reference_csv("", "vt", 6).orders.size(), 0u);
    EXPECT_EQ(parse_reference_csv("name,order\nheawood,14\n\n# c\nx,16\n", "vt", 6).orders,
              (std::vector<int>{14, 16}));
    EXPECT_EQ(classify_reference("VT"), ReferenceClass::VertexTransitive);
    EXPECT_EQ(classify_reference("foster"), ReferenceClass::Custom);
}

TEST(ReferenceCsv, Errors) {
    EXPECT_EQ(code_of("order\n15\n"), ErrorCode::OddOrderRejected);
    EXPECT_EQ(code_of("order\n14\nabc\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("orders\n14\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("order\n-4\n"), ErrorCode::ParseError);
    try {
        (void)parse_reference_csv("order\n14\n\n16x\n", "custom", 6);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(ReferenceCsv, IngestFromFile) {
    const auto path = std::filesystem::temp_directory_path() / ("hbg-ref-" + std::to_string(::getpid()) + ".csv");
    {
        std::ofstream out(path);
        out << csv(kSym6);
    }
    EXPECT_EQ(ingest_reference(path, "csv", "symmetric", 6).orders.size(), 10u);
    try {
        (void)ingest_reference(path, "xlsx", "symmetric", 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedFormat);
    }
    std::filesystem::remove(path);
    EXPECT_THROW((void)ingest_reference(path, "csv", "symmetric", 6), Error);
}

TEST(Bounds, Table) {
    const auto g8 = reference_bounds(8);
    EXPECT_EQ(g8.lower, 30);
    EXPECT_EQ(g8.upper, 30);
    EXPECT_EQ(g8.attribution, "Tutte");
    const auto g14 = reference_bounds(14);
    EXPECT_EQ(g14.lower, 258);
    EXPECT_EQ(g14.upper, 384);
    EXPECT_EQ(g14.attribution, "Exoo; lower bound McKay");
    const auto g16 = reference_bounds(16);
    EXPECT_EQ(g16.lower, 512);
    EXPECT_EQ(g16.upper, 960);
    EXPECT_EQ(g16.attribution, "Exoo");
    for (int g : {4, 7, 34}) {
        try {
            (void)reference_bounds(g);
            FAIL() << g;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::OutOfTable);
        }
    }
    EXPECT_EQ(known_cages().size(), 8u);
}

TEST(Compare, GirthSix) {
    std::vector<CatalogRecord> catalog = {refuted(6, 10), refuted(6, 12)};
    for (int n : evens(14, 50)) catalog.push_back(exists(6, n, 1, {5}));
    const std::vector<ReferenceList> refs = {parse_reference_csv(csv(evens(14, 50)), "vt", 6),
                                             parse_reference_csv(csv(kSym6), "symmetric", 6)};
    const auto report = compare_report(catalog, refs, 6, 50);
    EXPECT_EQ(report.catalog_orders.size(), 19u);
    EXPECT_EQ(report.references[0].orders.size(), 19u);
    EXPECT_EQ(report.references[1].orders.size(), 10u);
    EXPECT_EQ(report.nonexistent_orders, (std::vector<int>{10, 12}));
    ASSERT_TRUE(report.published);
    EXPECT_EQ(report.published->hamiltonian_bipartite, 19);
    EXPECT_EQ(report.published->vertex_transitive, 19);
    EXPECT_EQ(report.published->symmetric, 10);
    for (const auto& ref : report.references) {
        EXPECT_TRUE(ref.reference_only.empty());
        EXPECT_EQ(ref.covered.size() + ref.catalog_only.size(), report.catalog_orders.size());
    }
    const auto text = report.to_text();
    EXPECT_NE(text.find("19 orders"), std::string::npos);
    EXPECT_NE(text.find("Heawood"), std::string::npos);

    const auto j = nlohmann::json::parse(report.to_json());
    EXPECT_EQ(j["catalog"]["count"], 19);
    EXPECT_EQ(j["references"][1]["count"], 10);
    EXPECT_EQ(j["references"][1]["coverage"]["50"], true);
}

TEST(Compare, GirthEightCoversVertexTransitiveList) {
    std::vector<CatalogRecord> catalog;
    catalog.push_back(exists(8, 30, 3, {7, 9, 17}));
    for (int n : evens(34, 90)) catalog.push_back(exists(8, n, 1, {7}));  // orders only matter here
    const auto report = compare_report(catalog, {parse_reference_csv(csv(kVt8), "vt", 8)}, 8, 90);
    EXPECT_EQ(report.catalog_orders.size(), 30u);
    EXPECT_EQ(report.references[0].orders.size(), 21u);
    EXPECT_TRUE(report.references[0].reference_only.empty());
    ASSERT_TRUE(report.published);
    EXPECT_EQ(report.published->hamiltonian_bipartite, 29);
}

TEST(Compare, EmptyCatalog) {
    const auto report = compare_report({}, {parse_reference_csv(csv(kSym6), "sym", 6)}, 6, 50);
    EXPECT_TRUE(report.catalog_orders.empty());
    EXPECT_EQ(report.references[0].reference_only, kSym6);
    EXPECT_TRUE(report.references[0].covered.empty());
}

TEST(Compare, UntilTruncatesAndOtherGirthsIgnored) {
    std::vector<CatalogRecord> catalog = {exists(6, 14, 1, {5}), exists(6, 60, 1, {5}), exists(8, 30, 3, {7, 9, 17})};
    const auto report = compare_report(catalog, {parse_reference_csv(csv(kSym6), "sym", 6)}, 6, 20);
    EXPECT_EQ(report.catalog_orders, (std::vector<int>{14}));
    EXPECT_EQ(report.references[0].orders, (std::vector<int>{14, 16, 18, 20}));
    EXPECT_FALSE(report.published);  // published row is for until = 50
}
