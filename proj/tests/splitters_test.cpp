#include <gtest/gtest.h>

#include "brute.hpp"
#include "splitperm/enumerate.hpp"
#include "splitperm/oracle.hpp"
#include "splitperm/splitters.hpp"

using namespace splitperm;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
Matching M(const char* s) { return parse_matching(s); }

// Each class avoids its part, checked with the subset-scan reference.
bool valid(const ColoringCertificate& cert) {
    const auto& p = std::get<Permutation>(cert.subject);
    for (std::size_t c = 0; c < cert.spec.size(); ++c)
        if (brute::contains(cert.spec.parts[c], restrict_to(p, color_class(cert.colors, c)))) return false;
    return cert.colors.size() == p.size();
}

}  // namespace

TEST(Spec, ParseAndPrint) {
    const auto spec = parse_spec("2*132, 213");
    EXPECT_EQ(spec.parts, (std::vector{P("132"), P("132"), P("213")}));
    EXPECT_EQ(to_string(spec), "2*1 3 2,2 1 3");
    EXPECT_EQ(parse_spec(to_string(spec)), spec);
    EXPECT_THROW(parse_spec(""), ParseError);
    EXPECT_THROW(parse_spec("12,,21"), ParseError);
    EXPECT_THROW(parse_spec("0*12"), ParseError);
    EXPECT_THROW(parse_spec("x*12"), ParseError);
    EXPECT_EQ(SplittingSpec{{P("1")}}.repeated(3).size(), 3u);
}

TEST(GreedyThreeSum, Example) {
    const auto cert = greedy_three_sum(P("1"), P("21"), P("1"), P("2413"));
    EXPECT_EQ(cert.colors, (std::vector<std::size_t>{0, 0, 0, 1}));
    EXPECT_EQ(cert.spec.parts, (std::vector{P("132"), P("213")}));
}

TEST(GreedyThreeSum, Av1324UpToSeven) {
    for (const auto& p : enumerate_avoiders_upto({P("1324")}, 7)) ASSERT_TRUE(valid(greedy_three_sum(P("1"), P("21"), P("1"), p))) << to_string(p);
}

TEST(GreedyThreeSum, SecondTriple) {
    for (const auto& p : enumerate_avoiders_upto({P("21345")}, 6)) ASSERT_TRUE(valid(greedy_three_sum(P("21"), P("1"), P("12"), p)));
}

TEST(GreedyThreeSum, RejectsContainingInput) {
    EXPECT_THROW(greedy_three_sum(P("1"), P("21"), P("1"), P("1324")), PreconditionError);
    EXPECT_THROW(greedy_three_sum(Permutation{}, P("21"), P("1"), P("1")), PreconditionError);
}

TEST(EasySplit, Av2143) {
    EXPECT_EQ(easy_split_parts(P("21"), P("21")).parts, (std::vector{P("213"), P("132")}));
    EXPECT_THROW(easy_split_parts(P("1"), P("21")), PreconditionError);
    for (const auto& p : enumerate_avoiders_upto({P("2143")}, 7)) ASSERT_TRUE(valid(easy_split(P("21"), P("21"), p)));
}

TEST(Dilworth, ColorsAreIncreasingClasses) {
    EXPECT_EQ(dilworth_colors(P("321")), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(dilworth_parts(4).size(), 3u);
    EXPECT_THROW(dilworth_parts(1), PreconditionError);
    EXPECT_THROW(dilworth_split(3, P("321")), PreconditionError);
    for (const auto& p : enumerate_avoiders_upto({P("4321")}, 7)) ASSERT_TRUE(valid(dilworth_split(4, p)));
}

TEST(Refine, SplitsADecomposablePart) {
    // Dilworth colors Av(321) into two increasing classes, so {132, 21} is a splitting with 132 = 1 (+) 21
    const Permutation pi = P("321");
    const SplittingSpec spec{{P("132"), P("21")}};
    const PermutationColorer colorer = [](const Permutation& p) { return dilworth_colors(p); };
    for (const auto& p : enumerate_avoiders_upto({pi}, 6)) {
        const auto cert = refine_colorer(pi, spec, 0, colorer, p);
        ASSERT_TRUE(valid(cert)) << to_string(p);
        ASSERT_TRUE(cert.spec.parts[0] == P("1") || cert.spec.parts[0] == P("21"));
    }
}

TEST(Refine, ErrorPaths) {
    const SplittingSpec spec{{P("132"), P("21")}};
    const PermutationColorer dil = [](const Permutation& p) { return dilworth_colors(p); };
    EXPECT_THROW(refine_colorer(P("321"), spec, 2, dil, P("1")), PreconditionError);
    EXPECT_THROW(refine_colorer(P("321"), spec, 1, dil, P("1")), PreconditionError);
    EXPECT_THROW(refine_colorer(P("12"), spec, 0, dil, P("1")), PreconditionError);
    EXPECT_THROW(refine_colorer(P("321"), spec, 0, dil, P("321")), PreconditionError);
    const PermutationColorer bad = [](const Permutation& p) { return std::vector<std::size_t>(p.size(), 1); };
    EXPECT_THROW(refine_colorer(P("321"), spec, 0, bad, P("21")), InvalidColorerError);
    // the empty permutation refines trivially
    const auto cert = refine_colorer(P("321"), spec, 0, dil, Permutation{});
    EXPECT_TRUE(cert.colors.empty());
}

TEST(LiftToMatchings, ColorsArcsByElement) {
    const auto base = lift_to_matchings(dilworth_base(3));
    EXPECT_EQ(base.colorer(m_of(P("21"))), (std::vector<std::size_t>{0, 1}));
    EXPECT_THROW(base.colorer(M("1-2 3-4")), PreconditionError);
}

TEST(MatchSplit, ValidOnSmallMatchings) {
    const Permutation sigma = P("321");
    const auto base = lift_to_matchings(dilworth_base(3));
    for (const auto& m : brute::all_matchings_upto(5)) {
        if (matching_contains(m_of(sigma), m)) continue;
        const auto r = match_split(m, sigma, m_of(sigma), base);
        const auto& cert = r.certificate;
        ASSERT_EQ(cert.colors.size(), m.size());
        for (std::size_t c = 0; c < cert.spec.size(); ++c)
            ASSERT_FALSE(brute::matching_contains(m_of(cert.spec.parts[c]), restrict_to(m, color_class(cert.colors, c))));
        ASSERT_EQ(r.trace.empty(), m.empty());
    }
}

TEST(MatchSplit, Preconditions) {
    const auto base = lift_to_matchings(dilworth_base(3));
    EXPECT_THROW(match_split(m_of(P("321")), P("321"), m_of(P("321")), base), PreconditionError);
    MatchingBase decomposable{SplittingSpec{{P("12")}}, base.colorer};
    EXPECT_THROW(match_split(M("1-2"), P("321"), m_of(P("321")), decomposable), PreconditionError);
}

TEST(CircleColor, ProperOnSmallMatchings) {
    const auto tri = m_of(P("321"));
    for (const auto& m : brute::all_matchings_upto(5)) {
        if (brute::matching_contains(tri, m)) continue;
        const auto c = circle_color(m, 3);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (crosses(m[i], m[j])) ASSERT_NE(c.colors[i], c.colors[j]);
        ASSERT_LE(c.count, 2u * 4096u);
    }
    EXPECT_EQ(circle_color(M("1-3 2-4"), 3).count, 2u);
    EXPECT_EQ(circle_color(M("1-2 3-4"), 3).count, 1u);
    EXPECT_THROW(circle_color(M("1-2"), 1), PreconditionError);
}

TEST(OnePlus, Example) {
    const auto cert = oneplus_split(P("321"), dilworth_base(3), P("3142"));
    EXPECT_EQ(cert.colors, (std::vector<std::size_t>{0, 0, 0, 2}));
    EXPECT_EQ(cert.spec.size(), 4u);
    for (const auto& part : cert.spec.parts) EXPECT_EQ(part, P("132"));
}

TEST(OnePlus, Av1432UpToSix) {
    for (const auto& p : enumerate_avoiders_upto({P("1432")}, 6)) ASSERT_TRUE(valid(oneplus_split(P("321"), dilworth_base(3), p))) << to_string(p);
}

TEST(OnePlus, Preconditions) {
    EXPECT_THROW(oneplus_split(P("12"), dilworth_base(3), P("1")), PreconditionError);
    EXPECT_THROW(oneplus_split(P("321"), dilworth_base(3), P("1432")), PreconditionError);
}
