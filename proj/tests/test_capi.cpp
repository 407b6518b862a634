#include <gtest/gtest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hbg/hbg.h"

namespace {

hbg_spec* make(int order, int sym, std::vector<int> chords) {
    hbg_spec* spec = nullptr;
    EXPECT_EQ(hbg_spec_new(order, sym, chords.data(), chords.size(), &spec), HBG_OK);
    return spec;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / (std::string("hbg-capi-") + std::to_string(::getpid()) + name))
        .string();
}

}  // namespace

TEST(CApi, GirthAndWitness) {
    hbg_spec* spec = make(12, 1, {5});
    int girth = 0;
    int root = 0;
    int* witness = nullptr;
    size_t len = 0;
    ASSERT_EQ(hbg_girth(spec, &girth, &witness, &len, &root), HBG_OK);
    EXPECT_EQ(girth, 4);
    EXPECT_EQ(std::vector<int>(witness, witness + len), (std::vector<int>{7, 6, 1, 12, 7}));
    EXPECT_EQ(root, 1);
    hbg_array_free(witness);
    int oracle = 0;
    EXPECT_EQ(hbg_girth_oracle(spec, &oracle), HBG_OK);
    EXPECT_EQ(oracle, 4);
    hbg_spec_free(spec);
}

TEST(CApi, ValidationReport) {
    hbg_spec* spec = make(20, 3, {3, 5, 7});
    char* report = nullptr;
    EXPECT_EQ(hbg_spec_validate(spec, &report), HBG_E_INVALID_SPEC);
    EXPECT_NE(std::string(report).find("DivisibilityViolation"), std::string::npos);
    EXPECT_NE(std::string(hbg_last_error()).find("DivisibilityViolation"), std::string::npos);
    hbg_string_free(report);
    int girth = 0;
    EXPECT_EQ(hbg_girth(spec, &girth, nullptr, nullptr, nullptr), HBG_E_INVALID_SPEC);
    EXPECT_STREQ(hbg_status_name(HBG_E_INVALID_SPEC), "InvalidSpec");
    EXPECT_STREQ(hbg_status_name(HBG_E_IO), "Io");
    hbg_spec_free(spec);
}

TEST(CApi, NullArguments) {
    EXPECT_EQ(hbg_spec_new(14, 1, nullptr, 1, nullptr), HBG_E_NULL_ARGUMENT);
    EXPECT_EQ(hbg_girth(nullptr, nullptr, nullptr, nullptr, nullptr), HBG_E_NULL_ARGUMENT);
    EXPECT_EQ(hbg_search(nullptr, nullptr), HBG_E_NULL_ARGUMENT);
    EXPECT_EQ(hbg_outcome_verdict(nullptr), HBG_INCONCLUSIVE);
    hbg_spec_free(nullptr);
    hbg_outcome_free(nullptr);
}

TEST(CApi, ParseChords) {
    int* chords = nullptr;
    size_t n = 0;
    ASSERT_EQ(hbg_parse_chords("15, 53,73", &chords, &n), HBG_OK);
    EXPECT_EQ(std::vector<int>(chords, chords + n), (std::vector<int>{15, 53, 73}));
    hbg_array_free(chords);
    EXPECT_EQ(hbg_parse_chords("5,,7", &chords, &n), HBG_E_PARSE);
    EXPECT_EQ(hbg_parse_chords("5x", &chords, &n), HBG_E_PARSE);
    EXPECT_EQ(hbg_parse_chords("", &chords, &n), HBG_E_PARSE);
}

TEST(CApi, Export) {
    hbg_spec* spec = make(14, 1, {5});
    char* text = nullptr;
    ASSERT_EQ(hbg_export(spec, "graph6", &text), HBG_OK);
    EXPECT_STREQ(text, "MhEGHC@AI?_PC@_G_\n");
    hbg_string_free(text);
    EXPECT_EQ(hbg_export(spec, "sparse6", &text), HBG_E_UNSUPPORTED_FORMAT);
    hbg_spec_free(spec);
}

TEST(CApi, SearchAndCatalog) {
    const auto path = temp_path("-search.jsonl");
    std::filesystem::remove(path);
    hbg_catalog* catalog = nullptr;
    ASSERT_EQ(hbg_catalog_open(path.c_str(), &catalog), HBG_OK);

    hbg_search_params p;
    hbg_search_params_init(&p);
    p.girth = 6;
    p.order = 14;
    p.sym_factor = 1;
    p.threads = 1;
    hbg_outcome* outcome = nullptr;
    ASSERT_EQ(hbg_search(&p, &outcome), HBG_OK);
    EXPECT_EQ(hbg_outcome_verdict(outcome), HBG_EXISTS);
    const int* chords = nullptr;
    ASSERT_EQ(hbg_outcome_witness(outcome, &chords), 1u);
    EXPECT_EQ(chords[0], 5);
    EXPECT_EQ(hbg_outcome_witness_girth(outcome), 6);
    EXPECT_EQ(hbg_catalog_append(catalog, outcome), HBG_OK);
    hbg_outcome_free(outcome);

    p.girth = 8;
    p.order = 20;
    p.sym_factor = 10;
    ASSERT_EQ(hbg_search(&p, &outcome), HBG_OK);
    EXPECT_EQ(hbg_outcome_verdict(outcome), HBG_NONEXISTENT);
    EXPECT_EQ(hbg_outcome_witness(outcome, &chords), 0u);
    char* text = nullptr;
    ASSERT_EQ(hbg_outcome_describe(outcome, &text), HBG_OK);
    EXPECT_NE(std::string(text).find("certificate"), std::string::npos);
    hbg_string_free(text);
    hbg_search_stats stats;
    hbg_outcome_stats(outcome, &stats);
    EXPECT_GT(stats.nodes, 0u);
    EXPECT_EQ(hbg_catalog_append(catalog, outcome), HBG_OK);
    hbg_outcome_free(outcome);

    p.order = 21;
    EXPECT_EQ(hbg_search(&p, &outcome), HBG_E_INVALID_TASK);

    size_t count = 0;
    char* jsonl = nullptr;
    ASSERT_EQ(hbg_catalog_query(catalog, -1, -1, -1, -1, &jsonl, &count), HBG_OK);
    EXPECT_EQ(count, 2u);
    hbg_string_free(jsonl);
    ASSERT_EQ(hbg_catalog_query(catalog, 8, -1, -1, HBG_NONEXISTENT, nullptr, &count), HBG_OK);
    EXPECT_EQ(count, 1u);
    hbg_catalog_free(catalog);
    std::filesystem::remove(path);
}

TEST(CApi, ScanAppendsPerOrder) {
    const auto path = temp_path("-scan.jsonl");
    std::filesystem::remove(path);
    hbg_catalog* catalog = nullptr;
    ASSERT_EQ(hbg_catalog_open(path.c_str(), &catalog), HBG_OK);
    hbg_scan_params p;
    hbg_scan_params_init(&p);
    p.girth = 6;
    p.order_from = 10;
    p.order_to = 20;
    p.threads = 1;
    struct Seen {
        std::vector<int> orders;
        std::vector<int> verdicts;
    } seen;
    auto cb = [](int order, hbg_verdict v, const hbg_outcome* decisive, void* user) {
        auto* s = static_cast<Seen*>(user);
        s->orders.push_back(order);
        s->verdicts.push_back(v);
        EXPECT_EQ(hbg_outcome_order(decisive), order);
    };
    ASSERT_EQ(hbg_scan(&p, catalog, cb, &seen), HBG_OK);
    EXPECT_EQ(seen.orders, (std::vector<int>{10, 12, 14, 16, 18, 20}));
    EXPECT_EQ(seen.verdicts, (std::vector<int>{1, 1, 0, 0, 0, 0}));
    size_t count = 0;
    ASSERT_EQ(hbg_catalog_query(catalog, 6, -1, -1, -1, nullptr, &count), HBG_OK);
    EXPECT_EQ(count, 6u);

    char* report = nullptr;
    ASSERT_EQ(hbg_report(catalog, nullptr, 0, 6, 20, 1, &report), HBG_OK);
    EXPECT_NE(std::string(report).find("\"count\": 4"), std::string::npos) << report;
    hbg_string_free(report);
    hbg_reference_source bad{"vt", "/nonexistent/file.csv"};
    EXPECT_EQ(hbg_report(catalog, &bad, 1, 6, 20, 0, &report), HBG_E_IO);

    p.order_from = 30;
    EXPECT_EQ(hbg_scan(&p, nullptr, nullptr, nullptr), HBG_E_INVALID_RANGE);
    hbg_catalog_free(catalog);
    std::filesystem::remove(path);
}

TEST(CApi, Family) {
    const int d[] = {5};
    hbg_family* family = nullptr;
    ASSERT_EQ(hbg_family_certify(1, d, 1, &family), HBG_OK);
    hbg_family_info info;
    hbg_family_get(family, &info);
    EXPECT_EQ(info.stable_girth, 6);
    EXPECT_LE(info.threshold_order, 14);
    hbg_spot* spots = nullptr;
    size_t n = 0;
    ASSERT_EQ(hbg_family_spot_check(family, 3, &spots, &n), HBG_OK);
    ASSERT_GT(n, 0u);
    for (size_t i = 0; i < n; ++i) EXPECT_TRUE(spots[i].agrees);
    hbg_array_free(spots);
    ASSERT_EQ(hbg_family_check_below(family, 6, &spots, &n), HBG_OK);
    ASSERT_EQ(n, 4u);  // 6, 8, 10, 12
    EXPECT_EQ(spots[3].girth, 4);
    hbg_array_free(spots);
    hbg_family_free(family);

    const int degenerate[] = {3, 5};
    EXPECT_EQ(hbg_family_certify(2, degenerate, 2, &family), HBG_E_DEGENERATE_CHORDS);
}
