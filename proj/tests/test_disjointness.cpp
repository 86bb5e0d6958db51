#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fewears/counting.hpp"
#include "fewears/disjointness.hpp"
#include "fewears/errors.hpp"
#include "oracles.hpp"

using namespace fewears;

namespace {

Triangulation T(const std::string& s) { return parse_triangulation(s); }

oracle::ChordSet chords(const Triangulation& t) {
    oracle::ChordSet out;
    for (const auto& d : t.diagonals()) out.emplace_back(d.a, d.b);
    return out;
}

ExactCount oracle_disj(const Triangulation& t) {
    return oracle::disjoint_partners(chords(t), oracle::triangulations(t.n()));
}

std::vector<EarType> all_types(int n) {
    std::vector<EarType> out;
    for (int p = 1; p <= n - 5; ++p)
        for (int q = 1; p + q <= n - 4; ++q) out.push_back({p, q, n - 3 - p - q});
    return out;
}

}  // namespace

TEST(Shapes, Arrow) {
    EXPECT_EQ(arrow(4), T("4:1-3"));
    EXPECT_EQ(arrow(6), T("6:1-3,1-4,1-5"));
    const auto e = ears_of(arrow(6));
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].v, (std::array<int, 3>{0, 1, 5}));
    EXPECT_EQ(e[1].v, (std::array<int, 3>{1, 2, 3}));
    EXPECT_THROW(arrow(3), InputError);
}

TEST(Shapes, Snake) {
    EXPECT_EQ(snake(6), T("6:0-2,2-5,3-5"));
    EXPECT_EQ(snake(11), T("11:0-2,2-10,3-10,3-9,4-9,4-8,5-8,5-7"));
    for (int n = 4; n <= 16; ++n) {
        EXPECT_EQ(ear_count(snake(n)), 2) << n;
        const Triangulation s = snake(n);
        std::set<int> residues;
        for (const auto& d : s.diagonals()) residues.insert(parallel_residue(n, d.a, d.b));
        EXPECT_EQ(residues, (n == 4 ? std::set<int>{2} : std::set<int>{1, 2})) << n;
    }
    EXPECT_THROW(snake(3), InputError);
}

TEST(Shapes, ThreeEarRepresentatives) {
    EXPECT_EQ(three_ear_rep(6, {1, 1, 1}), T("6:0-2,2-4,0-4"));
    EXPECT_EQ(three_ear_rep(7, {1, 1, 2}), T("7:0-2,2-4,4-6,0-4"));
    EXPECT_EQ(internal_triangles_of(three_ear_rep(9, {2, 2, 2}))[0].v, (std::array<int, 3>{0, 3, 6}));
    EXPECT_THROW(three_ear_rep(7, {1, 1, 1}), InputError);
    EXPECT_THROW(three_ear_rep(7, {0, 2, 2}), InputError);

    EXPECT_TRUE(same_type(three_ear_type(T("6:0-2,2-4,0-4")), {1, 1, 1}));
    EXPECT_TRUE(same_type(three_ear_type(T("7:0-2,2-4,4-6,0-4")), {1, 2, 1}));
    EXPECT_THROW(three_ear_type(arrow(7)), DomainError);

    for (int n = 6; n <= 12; ++n)
        for (const auto& t : all_types(n)) {
            const auto rep = three_ear_rep(n, t);
            EXPECT_EQ(ear_count(rep), 3);
            EXPECT_TRUE(same_type(three_ear_type(rep), t));
        }
}

TEST(EarTypes, TextFormat) {
    EXPECT_EQ(format_ear_type({1, 1, 2}), "(1,1,2)");
    const EarType t = parse_ear_type("2,1,1");
    EXPECT_EQ(t.p, 2);
    EXPECT_THROW(parse_ear_type("1,1"), InputError);
    EXPECT_THROW(parse_ear_type("a,b,c"), InputError);
}

TEST(CountAvoiding, Examples) {
    const std::vector<Diagonal> none;
    const std::vector<Diagonal> one{{0, 2}};
    const std::vector<Diagonal> pin{{0, 2}, {2, 4}, {0, 4}};
    EXPECT_EQ(count_avoiding(6, none), 14);
    EXPECT_EQ(count_avoiding(6, one), 9);
    EXPECT_EQ(count_avoiding(6, pin), 4);
    const std::vector<Diagonal> bad{{0, 1}};
    EXPECT_THROW(count_avoiding(6, bad), InputError);
}

TEST(CountAvoiding, LargeNStaysExact) {
    const std::vector<Diagonal> none;
    EXPECT_EQ(count_avoiding(40, none), catalan(38));
    EXPECT_EQ(count_avoiding(60, none), catalan(58));
    EXPECT_EQ(disj_count(arrow(50)), catalan(47));
}

TEST(DisjCount, Examples) {
    EXPECT_EQ(disj_count(arrow(6)), 5);
    EXPECT_EQ(disj_count(T("6:0-2,2-4,0-4")), 4);
    EXPECT_EQ(disj_count(arrow(4)), 1);
}

TEST(DisjCount, PropertyMatchesPairwiseOracle) {
    for (int n = 4; n <= 9; ++n) {
        const auto all = oracle::triangulations(n);
        for_each_triangulation(n, [&](const Triangulation& t) {
            const ExactCount ref = oracle::disjoint_partners(chords(t), all);
            EXPECT_EQ(disj_count(t), ref) << format_triangulation(t);
            if (n <= 7) EXPECT_EQ(disj_count_by_enumeration(t), ref);
        });
    }
}

TEST(DisjCount, PropertyEveryTwoEaredHasCatalanPartners) {
    EXPECT_EQ(disj_2ear_formula(4), 1);
    EXPECT_EQ(disj_2ear_formula(5), 2);
    EXPECT_EQ(disj_2ear_formula(6), 5);
    for (int n = 4; n <= 11; ++n) {
        std::size_t seen = 0;
        for_each_triangulation(n, [&](const Triangulation& t) {
            if (ear_count(t) != 2) return;
            ++seen;
            EXPECT_EQ(disj_count(t), disj_2ear_formula(n)) << format_triangulation(t);
        });
        EXPECT_EQ(seen, n == 4 ? 2u : std::size_t(n) << (n - 5)) << n;
    }
}

TEST(DisjCount, PropertyArrowPartnersContainZeroTwo) {
    for (int n = 4; n <= 10; ++n) {
        const auto a = arrow(n);
        for_each_triangulation(n, [&](const Triangulation& t) {
            EXPECT_EQ(are_disjoint(a, t), t.contains({0, 2})) << format_triangulation(t);
        });
    }
}

TEST(InclusionExclusion, Values) {
    EXPECT_EQ(disj_inclusion_exclusion(5), 2);
    EXPECT_EQ(disj_inclusion_exclusion(6), 5);
    EXPECT_EQ(disj_inclusion_exclusion(10), 429);
    for (int n = 4; n <= 18; ++n) EXPECT_EQ(disj_inclusion_exclusion(n), catalan(n - 3)) << n;
}

TEST(Series, CoefficientsAreCatalan) {
    const auto c = disj_series_coefficients(20);
    ASSERT_EQ(c.size(), 21u);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[3], 5);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(c[k], oracle::catalan(k)) << k;
}

TEST(MForb, Values) {
    EXPECT_EQ(m_forb_formula(6, 1), 9);
    EXPECT_EQ(m_forb_formula(6, 3), 5);
    EXPECT_EQ(m_forb_formula(6, 0), 14);
    EXPECT_THROW(m_forb_formula(6, 4), InputError);
}

TEST(MForb, PropertyMatchesAvoidCountAtEveryApex) {
    for (int n = 4; n <= 12; ++n)
        for (int m = 0; m <= n - 3; ++m)
            for (int a = 0; a < n; ++a)
                EXPECT_EQ(m_forb_formula(n, m), count_avoiding(n, m_forb_diagonals(n, m, a))) << n << "," << m << "," << a;
}

TEST(Pqr, Values) {
    EXPECT_EQ(disj_3ear_cases(6, {1, 1, 1}), 4);
    EXPECT_EQ(disj_3ear_cases(7, {1, 1, 2}), 11);
    EXPECT_EQ(disj_3ear_cases(7, {2, 1, 1}), 11);
    EXPECT_EQ(disj_3ear_printed(6, {1, 1, 1}), 1);
    EXPECT_EQ(disj_3ear_printed(7, {1, 1, 2}), 5);
}

TEST(Pqr, PropertyCaseSumMatchesOracleAndIsSymmetric) {
    for (int n = 6; n <= 12; ++n) {
        for (const auto& t : all_types(n)) {
            const ExactCount want = disj_count(three_ear_rep(n, t));
            EXPECT_EQ(disj_3ear_cases(n, t), want);
            EXPECT_EQ(disj_3ear_shifted(n, t), want);
            for (EarType s : {EarType{t.q, t.p, t.r}, EarType{t.r, t.q, t.p}, EarType{t.p, t.r, t.q}})
                EXPECT_EQ(disj_3ear_cases(n, s), want);
            if (n <= 8) EXPECT_EQ(oracle_disj(three_ear_rep(n, t)), want);
        }
    }
}

TEST(Pqr, PropertyEveryThreeEaredMatchesItsType) {
    for (int n = 6; n <= 10; ++n)
        for_each_triangulation(n, [&](const Triangulation& t) {
            if (ear_count(t) != 3) return;
            EXPECT_EQ(disj_count(t), disj_3ear_cases(n, three_ear_type(t))) << format_triangulation(t);
        });
}

TEST(Pqr, DegenerateBranchGivesCatalan) {
    for (int n = 5; n <= 15; ++n)
        for (int p = 1; p <= n - 4; ++p)
            EXPECT_EQ(disj_3ear_shifted(n, {p, n - 3 - p, 0}), catalan(n - 3)) << n << "," << p;
}

TEST(Parallel, Residues) {
    EXPECT_EQ(parallel_residue(9, 0, 1), 1);
    EXPECT_EQ(parallel_residue(9, 0, 2), 2);
    EXPECT_EQ(parallel_class_diagonals(6, {1, 2}), (std::vector<Diagonal>{{0, 2}, {2, 5}, {3, 5}}));
    EXPECT_EQ(parallel_class_diagonals(6, {1}), (std::vector<Diagonal>{{2, 5}}));
}

TEST(Parallel, Counts) {
    EXPECT_EQ(count_avoiding_parallel(6, {1, 2}), 5);
    EXPECT_EQ(count_avoiding_parallel(11, {1, 2}), 1430);
    EXPECT_EQ(count_avoiding_parallel(6, {1}), 10);
    for (int n = 4; n <= 12; ++n) {
        EXPECT_EQ(count_avoiding_parallel(n, {1, 2}), catalan(n - 3));
        EXPECT_EQ(disj_count(snake(n)), catalan(n - 3));
    }
    for (int m = 6; m <= 12; m += 2) EXPECT_EQ(count_avoiding_parallel(m, {1}), 2 * catalan(m - 3)) << m;
}

TEST(Signatures, Examples) {
    EXPECT_TRUE(internal_signature(arrow(7)).triangles.empty());
    EXPECT_EQ(internal_signature(T("6:0-2,2-4,0-4")).triangles.at(0).v, (std::array<int, 3>{0, 2, 4}));
    EXPECT_EQ(internal_signature(three_ear_rep(9, {2, 2, 2})).triangles.at(0).v, (std::array<int, 3>{0, 3, 6}));

    const auto six = signature_invariance_check(6, 2);
    EXPECT_TRUE(six.ok());
    std::map<std::string, std::pair<std::size_t, std::string>> groups;
    for (const auto& g : six.groups) groups[format_signature(g.signature)] = {g.size, to_string(g.disj)};
    ASSERT_EQ(groups.size(), 3u);
    EXPECT_EQ(groups.at(format_signature({})), (std::pair<std::size_t, std::string>{12, "5"}));
    for (const auto& [sig, v] : groups)
        if (sig != format_signature({})) EXPECT_EQ(v, (std::pair<std::size_t, std::string>{1, "4"}));

    const auto four = signature_invariance_check(4, 1);
    ASSERT_EQ(four.groups.size(), 1u);
    EXPECT_EQ(four.groups[0].disj, 1);
    EXPECT_THROW(signature_invariance_check(12, 1), InputError);
}

TEST(Signatures, PropertyInvariantUpToTen) {
    for (int n = 4; n <= 9; ++n) EXPECT_TRUE(signature_invariance_check(n).ok()) << n;
}

TEST(Totals, DisjointPairs) {
    // Ordered pairs; 14 hexagon triangulations, checked against the pairwise oracle.
    for (int n = 4; n <= 8; ++n) {
        const auto all = oracle::triangulations(n);
        ExactCount want = 0;
        for (const auto& t : all) want += oracle::disjoint_partners(t, all);
        EXPECT_EQ(total_disjoint_pairs(n, 2), want) << n;
    }
}
