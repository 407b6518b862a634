#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hbg/graph.hpp"
#include "support.hpp"

using namespace hbg;

TEST(Validate, AcceptsHeawoodDescription) {
    EXPECT_TRUE(validate_spec({14, 1, {5}}).valid());
}

TEST(Validate, CollectsEveryViolation) {
    const auto report = validate_spec({20, 3, {3, 5, 7}});
    EXPECT_TRUE(report.has(ViolationCode::DivisibilityViolation));

    const auto many = validate_spec({15, 2, {4}});
    EXPECT_TRUE(many.has(ViolationCode::OrderNotEven));
    EXPECT_TRUE(many.has(ViolationCode::ChordCountMismatch));
    EXPECT_TRUE(many.has(ViolationCode::EvenChordIndex));
}

TEST(Validate, RangeAndMatching) {
    EXPECT_TRUE(validate_spec({14, 1, {13}}).has(ViolationCode::ChordOutOfRange));
    EXPECT_TRUE(validate_spec({14, 1, {1}}).has(ViolationCode::ChordOutOfRange));
    EXPECT_TRUE(validate_spec({2, 1, {3}}).has(ViolationCode::OrderTooSmall));
    EXPECT_TRUE(validate_spec({12, 0, {}}).has(ViolationCode::SymFactorNotPositive));

    // Labels 1 and 3 would both chord to 8 at order 12: d = (7, 5).
    const auto clash = validate_spec({12, 2, {7, 5}});
    ASSERT_TRUE(clash.has(ViolationCode::NotAMatching));
    EXPECT_NE(clash.to_string().find("8"), std::string::npos);
}

TEST(Validate, MatchingAgreesWithDirectCheck) {
    // Every odd-tuple at small orders: the residue test must agree with
    // literally building the chord map and checking it is a perfect matching.
    for (int n : {8, 10, 12, 16}) {
        for (int b : {1, 2, 4}) {
            if ((n / 2) % b) continue;
            std::vector<int> d(static_cast<std::size_t>(b), 3);
            for (;;) {
                std::vector<int> hits(static_cast<std::size_t>(n), 0);
                for (int x = 1; x <= n; x += 2) {
                    const int y = ((x + d[((x + 1) / 2 - 1) % b] - 1) % n) + 1;
                    ++hits[y - 1];
                }
                bool perfect = true;
                for (int y = 2; y <= n; y += 2) perfect = perfect && hits[y - 1] == 1;
                EXPECT_EQ(validate_spec({n, b, d}).has(ViolationCode::NotAMatching), !perfect)
                    << to_string(ChordIndexSpec{n, b, d});
                int i = 0;
                while (i < b && d[i] + 2 > n - 3) d[i++] = 3;
                if (i == b) break;
                d[i] += 2;
            }
        }
    }
}

TEST(Graph, Order14Neighbors) {
    const auto g = build_graph({14, 1, {5}});
    EXPECT_EQ(g.order(), 14);
    const auto nb = g.neighbors(1);
    EXPECT_EQ(std::set<int>(nb.begin(), nb.end()), (std::set<int>{2, 6, 14}));
    EXPECT_EQ(g.chord_of(6), 1);
    EXPECT_TRUE(g.adjacent(14, 1));
    EXPECT_THROW((void)g.chord_of(15), Error);
}

TEST(Graph, InvalidSpecThrows) {
    try {
        (void)build_graph({20, 3, {3, 5, 7}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
    }
}

TEST(Graph, FromChordMapChecksStructure) {
    auto code_of = [](std::vector<Label> chords) {
        try {
            (void)HbGraph::from_chord_map(chords);
        } catch (const Error& e) {
            return static_cast<int>(e.code());
        }
        return -1;
    };
    const int malformed = static_cast<int>(ErrorCode::MalformedGraph);
    EXPECT_EQ(code_of({4, 5, 6, 1, 3, 2}), malformed);            // not an involution
    EXPECT_EQ(code_of({3, 6, 1, 8, 7, 2, 5, 4}), malformed);      // odd-odd chord
    EXPECT_EQ(code_of({2, 1, 6, 5, 4, 3}), malformed);            // chord doubles a cycle edge
    EXPECT_EQ(code_of({4, 5, 6, 1, 2, 3}), -1);                   // K_{3,3}
}

class Structure : public ::testing::Test {
protected:
    std::mt19937 rng{20240601};
};

TEST_F(Structure, RandomSpecsAreCubicBipartiteHamiltonian) {
    for (int trial = 0; trial < 500; ++trial) {
        const auto spec = support::random_spec(rng);
        ASSERT_TRUE(validate_spec(spec).valid()) << to_string(spec);
        const auto g = build_graph(spec);
        const int n = spec.order;
        const auto formula = support::chord_map_from_formula(spec);
        for (Label x = 1; x <= n; ++x) {
            const auto nb = g.neighbors(x);
            std::set<int> distinct(nb.begin(), nb.end());
            ASSERT_EQ(distinct.size(), 3u) << to_string(spec) << " label " << x;
            for (Label y : nb) {
                ASSERT_NE(x % 2, y % 2) << "bipartition broken at " << x << "-" << y;
                ASSERT_TRUE(g.adjacent(y, x));
            }
            ASSERT_TRUE(g.adjacent(x, x % n + 1)) << "Hamiltonian edge " << x;
            ASSERT_EQ(g.chord_of(g.chord_of(x)), x);
            ASSERT_EQ(g.chord_of(x), formula[x - 1]);
            if (x % 2 == 1) {
                ASSERT_EQ(g.chord_of(x), chord_target(x, spec));
            }
        }
    }
}

TEST_F(Structure, RotationByTwoBIsAnAutomorphism) {
    for (int trial = 0; trial < 500; ++trial) {
        const auto spec = support::random_spec(rng);
        const auto g = build_graph(spec);
        const int n = spec.order;
        auto rot = [&](Label x) { return ((x + 2 * spec.sym_factor - 1) % n) + 1; };
        for (Label x = 1; x <= n; ++x) {
            for (Label y : g.neighbors(x)) ASSERT_TRUE(g.adjacent(rot(x), rot(y))) << to_string(spec);
        }
    }
}

TEST_F(Structure, ExpandIndicesRoundTrip) {
    for (int trial = 0; trial < 500; ++trial) {
        const auto spec = support::random_spec(rng);
        const auto full = expand_to_full(spec);
        ASSERT_EQ(full.sym_factor, spec.half_order());
        ASSERT_EQ(full.chords, expand_indices(spec));
        ASSERT_TRUE(validate_spec(full).valid());
        ASSERT_EQ(build_graph(full), build_graph(spec));
        // Folding the full list back to its first b entries recovers the spec.
        ASSERT_EQ(std::vector<int>(full.chords.begin(), full.chords.begin() + spec.sym_factor), spec.chords);
        for (int i = 0; i < spec.half_order(); ++i) {
            ASSERT_EQ(full.chords[i], spec.chords[i % spec.sym_factor]);
        }
    }
}

TEST(Labels, PrevNextWrap) {
    EXPECT_EQ(prev_label(1, 14), 14);
    EXPECT_EQ(next_label(14, 14), 1);
    EXPECT_EQ(chord_target(13, {14, 1, {5}}), 4);
    EXPECT_EQ(chord_target(4, {14, 1, {5}}), 13);
}
