#include <gtest/gtest.h>

#include "brute.hpp"
#include "splitperm/enumerate.hpp"
#include "splitperm/permutation.hpp"

using namespace splitperm;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<std::size_t> one_based(const Embedding& e) {
    std::vector<std::size_t> out;
    for (auto i : e.positions) out.push_back(i + 1);
    return out;
}

}  // namespace

TEST(Contains, Examples) {
    auto e = contains(P("132"), P("2413"));
    ASSERT_TRUE(e);
    EXPECT_EQ(one_based(*e), (std::vector<std::size_t>{1, 2, 4}));
    ASSERT_TRUE(contains(P("1"), P("1")));
    EXPECT_EQ(one_based(*contains(P("1"), P("1"))), (std::vector<std::size_t>{1}));
    EXPECT_FALSE(contains(P("1324"), P("2413")));
    EXPECT_TRUE(contains(Permutation{}, P("21")));
    EXPECT_TRUE(contains(Permutation{}, Permutation{}));
    EXPECT_FALSE(contains(P("1"), Permutation{}));
}

TEST(Contains, LeastEmbeddingMatchesSubsetScan) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& pattern : brute::all_perms(k))
            for (std::size_t n = k; n <= 6; ++n)
                for (const auto& host : brute::all_perms(n)) {
                    const auto got = contains(pattern, host);
                    const auto want = brute::occurrence(pattern, host);
                    ASSERT_EQ(got.has_value(), want.has_value()) << to_string(pattern) << " in " << to_string(host);
                    if (got) ASSERT_EQ(got->positions, *want);
                }
}

TEST(Contains, ReflexiveTransitiveAndEqualOrder) {
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto perms = brute::all_perms(n);
        for (const auto& a : perms)
            for (const auto& b : perms) ASSERT_EQ(contains(a, b).has_value(), a == b);
    }
    const auto small = enumerate_avoiders(std::vector<Permutation>{}, 3);
    const auto mid = all_permutations(4);
    const auto big = all_permutations(5);
    for (const auto& a : small)
        for (const auto& b : mid) {
            if (!contains(a, b)) continue;
            for (const auto& c : big)
                if (contains(b, c)) ASSERT_TRUE(contains(a, c));
        }
}

TEST(Contains, InvariantUnderSymmetries) {
    for (std::size_t k = 0; k <= 3; ++k)
        for (const auto& pattern : brute::all_perms(k))
            for (std::size_t n = 0; n <= 5; ++n)
                for (const auto& host : brute::all_perms(n))
                    for (Symmetry s : all_symmetries)
                        ASSERT_EQ(contains(pattern, host).has_value(), contains(apply(s, pattern), apply(s, host)).has_value());
}

TEST(Sums, Examples) {
    EXPECT_EQ(direct_sum(P("231"), P("321")), P("231654"));
    EXPECT_EQ(direct_sum(Permutation{}, P("21")), P("21"));
    EXPECT_EQ(direct_sum(P("1"), P("21")), P("132"));
    EXPECT_EQ(skew_sum(P("21"), P("1")), P("321"));
    EXPECT_EQ(skew_sum(P("1"), P("1")), P("21"));
    EXPECT_EQ(skew_sum(P("12"), P("12")), P("3412"));
}

TEST(Sums, SummandsAreContained) {
    for (std::size_t i = 0; i <= 5; ++i)
        for (std::size_t j = 0; i + j <= 5; ++j)
            for (const auto& a : brute::all_perms(i))
                for (const auto& b : brute::all_perms(j)) {
                    const auto s = direct_sum(a, b);
                    ASSERT_TRUE(contains(a, s));
                    ASSERT_TRUE(contains(b, s));
                }
}

TEST(Symmetry, Examples) {
    EXPECT_EQ(apply(Symmetry::complement, P("132")), P("312"));
    EXPECT_EQ(apply(Symmetry::reverse, P("132")), P("231"));
    EXPECT_EQ(apply(Symmetry::reverse_complement, P("213")), P("132"));
    EXPECT_EQ(apply(Symmetry::reverse_complement, P("21")), P("21"));
    EXPECT_EQ(apply(Symmetry::inverse, P("231")), P("312"));
}

TEST(Symmetry, ReverseComplementOfSumWithOne) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& s : brute::all_perms(n))
            ASSERT_EQ(apply(Symmetry::reverse_complement, direct_sum(s, P("1"))),
                      direct_sum(P("1"), apply(Symmetry::reverse_complement, s)));
}

TEST(Symmetry, TransportedPositionFollowsTheElement) {
    for (const auto& p : brute::all_perms(5))
        for (Symmetry s : all_symmetries) {
            const auto q = apply(s, p);
            // the transported element keeps its relative order with every other element up to the symmetry
            for (std::size_t i = 0; i < p.size(); ++i) {
                const std::size_t j = transported_position(s, p, i);
                const int expected = s == Symmetry::inverse ? static_cast<int>(i + 1)
                                     : (s == Symmetry::complement || s == Symmetry::reverse_complement) ? 6 - p[i]
                                                                                                         : p[i];
                ASSERT_EQ(q[j], expected);
            }
        }
}

TEST(Inflate, Examples) {
    EXPECT_EQ(inflate(P("231"), std::vector{P("213"), P("21"), P("12")}), P("4357612"));
    EXPECT_EQ(inflate(P("1"), std::vector{P("3142")}), P("3142"));
    EXPECT_EQ(inflate(P("21"), std::vector{P("12"), P("1")}), P("231"));
    EXPECT_THROW(inflate(P("21"), std::vector{P("1")}), PreconditionError);
    EXPECT_THROW(inflate(P("21"), std::vector{P("1"), Permutation{}}), PreconditionError);
}

TEST(Simple, Examples) {
    EXPECT_TRUE(is_simple(P("2413")));
    EXPECT_TRUE(is_simple(P("3142")));
    EXPECT_FALSE(is_simple(P("231")));
    EXPECT_TRUE(is_simple(P("1")));
    EXPECT_TRUE(is_simple(P("12")));
    EXPECT_TRUE(is_simple(P("21")));
    EXPECT_FALSE(is_simple(P("123")));
}

TEST(Simple, SimpleIffNotANontrivialInflation) {
    // brute: p is simple iff it is not sigma[parts] for any sigma with 1 < |sigma| < n
    for (std::size_t n = 3; n <= 6; ++n)
        for (const auto& p : brute::all_perms(n)) {
            bool interval = false;
            for (std::size_t i = 0; i < n && !interval; ++i)
                for (std::size_t len = 2; i + len <= n && len < n && !interval; ++len) {
                    std::vector<int> vals(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(i + len));
                    std::sort(vals.begin(), vals.end());
                    interval = vals.back() - vals.front() + 1 == static_cast<int>(len);
                }
            ASSERT_EQ(is_simple(p), !interval) << to_string(p);
        }
}

TEST(Decompose, Examples) {
    auto s = sum_decompose(P("1324"));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->first, P("1"));
    EXPECT_EQ(s->second, P("213"));
    EXPECT_FALSE(sum_decompose(P("231")));
    s = sum_decompose(P("12"));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->first, P("1"));
    EXPECT_EQ(s->second, P("1"));
    auto k = skew_decompose(P("3412"));
    ASSERT_TRUE(k);
    EXPECT_EQ(k->first, P("12"));
    EXPECT_EQ(k->second, P("12"));
    EXPECT_EQ(sum_components(P("1324")), (std::vector{P("1"), P("21"), P("1")}));
}

TEST(Decompose, RareIndecomposableNonSimple) {
    const auto p = P("25134");
    EXPECT_FALSE(sum_decompose(p));
    EXPECT_FALSE(skew_decompose(p));
    EXPECT_FALSE(is_simple(p));
}

TEST(Decompose, RoundTrip) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& p : brute::all_perms(n)) {
            if (auto s = sum_decompose(p)) ASSERT_EQ(direct_sum(s->first, s->second), p);
            if (auto s = skew_decompose(p)) ASSERT_EQ(skew_sum(s->first, s->second), p);
        }
}

TEST(LrMinima, Examples) {
    EXPECT_EQ(lr_minima(P("58641273")), (std::vector<std::size_t>{0, 3, 4}));
    EXPECT_EQ(lr_minima(P("123")), (std::vector<std::size_t>{0}));
    EXPECT_EQ(lr_minima(P("321")), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(InflateLrMinima, Examples) {
    EXPECT_EQ(inflate_lr_minima(P("21"), P("12")), P("3412"));
    EXPECT_EQ(inflate_lr_minima(P("12"), P("21")), P("213"));
    EXPECT_EQ(inflate_lr_minima(P("1"), P("2413")), P("2413"));
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_avoiders({P("21")}, 4), (std::vector{P("1234")}));
    const std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132, 429};
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_avoiders({P("132")}, n).size(), catalan[n - 1]);
    EXPECT_EQ(enumerate_avoiders({P("1")}, 0).size(), 1u);
    EXPECT_TRUE(enumerate_avoiders({Permutation{}}, 0).empty());
}

TEST(Enumerate, AgreesWithFilteringEverySinglePatternBasis) {
    for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& pattern : brute::all_perms(k))
            for (std::size_t n = 0; n <= 7; ++n) ASSERT_EQ(enumerate_avoiders({pattern}, n), brute::avoiders({pattern}, n)) << to_string(pattern);
}

TEST(Enumerate, AgreesWithFilteringTwoPatternBases) {
    const std::vector<std::vector<Permutation>> bases{
        {P("123"), P("321")}, {P("132"), P("213")}, {P("2413"), P("3142")}, {P("1324"), P("4231")}, {P("12"), P("4321")}};
    for (const auto& basis : bases)
        for (std::size_t n = 0; n <= 7; ++n) ASSERT_EQ(enumerate_avoiders(basis, n), brute::avoiders(basis, n));
}

TEST(Enumerate, Av1324OrderEight) {
    // 15793: fixed by filtering all of S_8 with the subset-scan oracle
    const auto fast = enumerate_avoiders({P("1324")}, 8);
    EXPECT_EQ(fast.size(), 15793u);
    EXPECT_EQ(fast, brute::avoiders({P("1324")}, 8));
}

TEST(Text, ParseAndPrint) {
    EXPECT_EQ(to_string(P("2413")), "2 4 1 3");
    EXPECT_EQ(parse_permutation("10 1 2 3 4 5 6 7 8 9"), Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(to_string(Permutation{}), "ε");
    EXPECT_EQ(parse_permutation(""), Permutation{});
    EXPECT_EQ(parse_permutation("ε"), Permutation{});
    EXPECT_EQ(parse_permutation(to_string(P("31524"))), P("31524"));
    EXPECT_THROW(parse_permutation("122"), ParseError);
    EXPECT_THROW(parse_permutation("1a"), ParseError);
    EXPECT_THROW(parse_permutation("0 1"), ParseError);
    EXPECT_THROW(Permutation({1, 3}), PreconditionError);
    EXPECT_EQ(parse_basis("132, 213"), (std::vector{P("132"), P("213")}));
}
