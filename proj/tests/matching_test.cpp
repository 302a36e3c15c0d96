#include <gtest/gtest.h>

#include <cstdlib>

#include "brute.hpp"
#include "splitperm/matching.hpp"

using namespace splitperm;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
Matching M(const char* s) { return parse_matching(s); }

}  // namespace

TEST(Relation, Examples) {
    EXPECT_EQ(relation(Arc{1, 3}, Arc{2, 4}), ArcRelation::crosses_from_left);
    EXPECT_EQ(relation(Arc{2, 4}, Arc{1, 3}), ArcRelation::crosses_from_right);
    EXPECT_EQ(relation(Arc{2, 3}, Arc{1, 4}), ArcRelation::nested_below);
    EXPECT_EQ(relation(Arc{1, 4}, Arc{2, 3}), ArcRelation::nests_above);
    EXPECT_EQ(relation(Arc{1, 2}, Arc{3, 4}), ArcRelation::series_before);
    EXPECT_EQ(relation(Arc{3, 4}, Arc{1, 2}), ArcRelation::series_after);
    EXPECT_THROW(relation(Arc{1, 3}, Arc{3, 4}), PreconditionError);
}

TEST(Construction, NormalizesCoordinates) {
    const std::vector<std::pair<double, double>> arcs{{2.5, 3}, {2, 4}};
    EXPECT_EQ(Matching::from_coordinates(arcs), M("1-4 2-3"));
    EXPECT_EQ(M("10-30 20-40"), M("1-3 2-4"));
    EXPECT_THROW(M("1-2 2-3"), ParseError);
    EXPECT_THROW(M("3-1"), ParseError);
    EXPECT_THROW(M("1_2"), ParseError);
    EXPECT_EQ(to_string(M("")), "");
    EXPECT_EQ(to_string(M("4-6 1-5 2-3")), "1-5 2-3 4-6");
}

TEST(PermutationMatching, Examples) {
    EXPECT_EQ(m_of(P("231")), M("1-5 2-4 3-6"));
    EXPECT_EQ(m_of(P("21")), M("1-3 2-4"));
    EXPECT_EQ(m_of(P("1")), M("1-2"));
    EXPECT_EQ(perm_of(M("1-5 2-4 3-6")), P("231"));
    EXPECT_FALSE(perm_of(M("1-2 3-4")));
    EXPECT_EQ(perm_of(M("1-2")), P("1"));
    EXPECT_EQ(perm_of(Matching{}), Permutation{});
}

TEST(PermutationMatching, RoundTripAndConnectivity) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& p : brute::all_perms(n)) {
            const Matching m = m_of(p);
            ASSERT_EQ(perm_of(m), p);
            ASSERT_EQ(blocks(m).size(), n == 0 ? 0u : 1u);
            if (n > 0) ASSERT_EQ(is_connected(m), !is_sum_decomposable(p)) << to_string(p);
        }
}

TEST(PermutationMatching, CrossingsAreInversions) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& p : brute::all_perms(n)) {
            const Matching m = m_of(p);
            const int half = static_cast<int>(n);
            for (const auto& a : m)
                for (const auto& b : m) {
                    if (a == b) continue;
                    const int i = a.right - half - 1, j = b.right - half - 1;
                    const bool inversion = (i < j) == (p[i] > p[j]);
                    ASSERT_EQ(crosses(a, b), inversion);
                }
        }
}

TEST(MatchingContains, Examples) {
    EXPECT_TRUE(matching_contains(m_of(P("21")), m_of(P("321"))));
    EXPECT_TRUE(matching_contains(M("1-2"), M("1-4 2-3")));
    EXPECT_FALSE(matching_contains(m_of(P("21")), M("1-2 3-4")));
    EXPECT_TRUE(matching_contains(Matching{}, Matching{}));
    EXPECT_FALSE(matching_contains(M("1-2"), Matching{}));
}

TEST(MatchingContains, AgreesWithSubsetScan) {
    const auto patterns = brute::all_matchings_upto(3);
    const auto hosts = brute::all_matchings_upto(5);
    for (const auto& pat : patterns)
        for (const auto& host : hosts) ASSERT_EQ(matching_contains(pat, host), brute::matching_contains(pat, host));
}

TEST(MatchingContains, EncodesPermutationContainment) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& s : brute::all_perms(k))
            for (std::size_t n = 0; n <= 6; ++n)
                for (const auto& p : brute::all_perms(n))
                    ASSERT_EQ(matching_contains(m_of(s), m_of(p)), contains(s, p).has_value());
}

TEST(Blocks, Examples) {
    EXPECT_EQ(blocks(M("1-2 3-4")), (std::vector{M("1-2"), M("1-2")}));
    EXPECT_EQ(blocks(m_of(P("21"))), (std::vector{m_of(P("21"))}));
    EXPECT_EQ(blocks(M("1-4 2-3 5-6")), (std::vector{M("1-4 2-3"), M("1-2")}));
    EXPECT_TRUE(blocks(Matching{}).empty());
}

TEST(Blocks, ReassembleAndAreIndecomposable) {
    for (const auto& m : brute::all_matchings_upto(5)) {
        Matching joined;
        for (const auto& b : blocks(m)) {
            ASSERT_EQ(blocks(b).size(), 1u);
            joined = disjoint_union(joined, b);
        }
        ASSERT_EQ(joined, m);
    }
}

TEST(Levels, Examples) {
    const Matching chain = M("1-3 2-5 4-6");
    EXPECT_EQ(levels(chain), (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
    EXPECT_FALSE(is_connected(M("1-2 3-4")));
    EXPECT_EQ(levels(m_of(P("21"))), (std::vector<std::vector<std::size_t>>{{0}, {1}}));
    EXPECT_THROW(levels(M("1-2 3-4")), PreconditionError);
    EXPECT_FALSE(is_connected(Matching{}));
    EXPECT_TRUE(is_connected(M("1-2")));
}

TEST(Levels, ArcsOnlyCrossNeighbouringLevels) {
    for (const auto& m : brute::all_matchings_upto(5)) {
        ASSERT_EQ(is_connected(m), brute::connected(m));
        if (!is_connected(m)) continue;
        const auto lv = levels(m);
        std::vector<int> level(m.size(), -1);
        for (std::size_t i = 0; i < lv.size(); ++i)
            for (auto a : lv[i]) level[a] = static_cast<int>(i);
        EXPECT_EQ(lv[0], std::vector<std::size_t>{0});
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = 0; b < m.size(); ++b)
                if (crosses(m[a], m[b])) ASSERT_LE(std::abs(level[a] - level[b]), 1);
    }
}

TEST(Weight, Examples) {
    EXPECT_EQ(weight(M("1-2")), 1);
    EXPECT_EQ(weight(m_of(P("21"))), 4);
    EXPECT_EQ(weight(M("1-4 2-3")), 3);
    EXPECT_EQ(weight(m_of(P("321"))), 6);
    EXPECT_EQ(crossing_count(m_of(P("321"))), 3);
}

TEST(Weight, AdditiveOverDisjointUnion) {
    const auto ms = brute::all_matchings_upto(3);
    for (const auto& a : ms)
        for (const auto& b : ms) ASSERT_EQ(weight(disjoint_union(a, b)), weight(a) + weight(b));
}

TEST(Mirror, IsAnInvolutionAndMapsPermutationMatchings) {
    for (const auto& m : brute::all_matchings_upto(4)) ASSERT_EQ(mirror(mirror(m)), m);
    for (const auto& p : brute::all_perms(5))
        ASSERT_EQ(mirror(m_of(p)), m_of(apply(Symmetry::inverse, p)));
}
