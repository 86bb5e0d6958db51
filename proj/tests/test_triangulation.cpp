#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fewears/errors.hpp"
#include "fewears/triangulation.hpp"
#include "oracles.hpp"

using namespace fewears;

namespace {

Triangulation T(const std::string& s) { return parse_triangulation(s); }

std::vector<std::array<int, 3>> triples(const std::vector<Triangle>& ts) {
    std::vector<std::array<int, 3>> out;
    for (const auto& t : ts) out.push_back(t.v);
    return out;
}

oracle::ChordSet chords(const Triangulation& t) {
    oracle::ChordSet out;
    for (const auto& d : t.diagonals()) out.emplace_back(d.a, d.b);
    return out;
}

}  // namespace

TEST(Crosses, Examples) {
    EXPECT_TRUE(crosses(4, {0, 2}, {1, 3}));
    EXPECT_FALSE(crosses(6, {0, 2}, {2, 4}));
    EXPECT_TRUE(crosses(6, {0, 3}, {1, 5}));
    EXPECT_THROW(crosses(6, {0, 1}, {2, 4}), InputError);
    EXPECT_THROW(crosses(6, {0, 7}, {2, 4}), InputError);
}

TEST(Crosses, AgreesWithOracleOnAllPairs) {
    for (int n = 4; n <= 9; ++n) {
        const auto all = oracle::all_chords(n);
        for (auto x : all)
            for (auto y : all)
                EXPECT_EQ(crosses(n, {x.first, x.second}, {y.first, y.second}), oracle::chords_cross(x, y));
    }
}

TEST(IsTriangulation, Examples) {
    const std::vector<Diagonal> fan{{0, 2}, {0, 3}, {0, 4}};
    const std::vector<Diagonal> short_set{{0, 2}, {0, 3}};
    const std::vector<Diagonal> crossing{{0, 2}, {0, 4}, {1, 3}};
    EXPECT_TRUE(is_triangulation(6, fan));
    EXPECT_FALSE(is_triangulation(6, short_set));
    EXPECT_FALSE(is_triangulation(6, crossing));
}

TEST(Enumerate, SmallCases) {
    ASSERT_EQ(enumerate_triangulations(3).size(), 1u);
    EXPECT_TRUE(enumerate_triangulations(3)[0].diagonals().empty());
    const auto four = enumerate_triangulations(4);
    ASSERT_EQ(four.size(), 2u);
    EXPECT_EQ(format_triangulation(four[0]), "4:0-2");
    EXPECT_EQ(format_triangulation(four[1]), "4:1-3");
    EXPECT_EQ(enumerate_triangulations(6).size(), 14u);
    EXPECT_THROW(enumerate_triangulations(2), InputError);
}

TEST(Enumerate, CatalanTotals) {
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(enumerate_triangulations(n).size(), oracle::catalan(n - 2)) << n;
    EXPECT_EQ(enumerate_triangulations(12).size(), 16796u);
}

TEST(Enumerate, SameSetAsSubsetOracle) {
    for (int n = 3; n <= 9; ++n) {
        std::set<oracle::ChordSet> mine;
        for (const auto& t : enumerate_triangulations(n)) {
            EXPECT_TRUE(mine.insert(chords(t)).second) << "duplicate at n=" << n;
        }
        const auto ref = oracle::triangulations(n);
        EXPECT_EQ(mine, std::set<oracle::ChordSet>(ref.begin(), ref.end())) << n;
    }
}

TEST(Enumerate, ApexPartitionCoversEverything) {
    for (int n = 4; n <= 9; ++n) {
        std::size_t total = 0;
        for (int apex = 2; apex < n; ++apex)
            for_each_triangulation_with_apex(n, apex, [&](const Triangulation&) { ++total; });
        EXPECT_EQ(total, oracle::catalan(n - 2));
    }
}

TEST(Triangles, Examples) {
    using A = std::array<int, 3>;
    EXPECT_EQ(triples(triangles_of(T("4:0-2"))), (std::vector<A>{{0, 1, 2}, {0, 2, 3}}));
    EXPECT_EQ(triples(triangles_of(T("6:0-2,0-3,0-4"))), (std::vector<A>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}}));
    const auto pin = triples(triangles_of(T("6:0-2,2-4,0-4")));
    EXPECT_EQ(std::set<A>(pin.begin(), pin.end()), (std::set<A>{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 2, 4}}));
}

TEST(Ears, Examples) {
    using A = std::array<int, 3>;
    EXPECT_EQ(triples(ears_of(T("6:0-2,0-3,0-4"))), (std::vector<A>{{0, 1, 2}, {0, 4, 5}}));
    const auto pin = triples(ears_of(T("6:0-2,2-4,0-4")));
    EXPECT_EQ(std::set<A>(pin.begin(), pin.end()), (std::set<A>{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}));
    EXPECT_EQ(ear_count(T("4:0-2")), 2);
}

TEST(InternalTriangles, Examples) {
    using A = std::array<int, 3>;
    EXPECT_EQ(triples(internal_triangles_of(T("6:0-2,2-4,0-4"))), (std::vector<A>{{0, 2, 4}}));
    EXPECT_TRUE(internal_triangles_of(T("6:0-2,0-3,0-4")).empty());
}

TEST(Ears, PropertyEarsEqualInternalPlusTwoAndMatchOracle) {
    for (int n = 4; n <= 10; ++n) {
        for_each_triangulation(n, [&](const Triangulation& t) {
            const int ears = ear_count(t);
            EXPECT_EQ(ears, static_cast<int>(internal_triangles_of(t).size()) + 2);
            EXPECT_EQ(triangles_of(t).size(), static_cast<std::size_t>(n - 2));
            if (n >= 5) EXPECT_EQ(ears, oracle::ears(n, chords(t)));
            EXPECT_LE(ears, n / 2);
        });
    }
}

TEST(DualTree, Examples) {
    const auto fan = dual_tree(T("6:0-2,0-3,0-4"));
    EXPECT_EQ(fan.nodes.size(), 4u);
    EXPECT_TRUE(fan.is_tree());
    EXPECT_EQ(fan.leaves().size(), 2u);
    EXPECT_EQ(fan.nodes_of_degree(2).size(), 2u);

    const auto star = dual_tree(T("6:0-2,2-4,0-4"));
    const auto centre = star.nodes_of_degree(3);
    ASSERT_EQ(centre.size(), 1u);
    EXPECT_EQ(star.nodes[centre[0]].v, (std::array<int, 3>{0, 2, 4}));
    EXPECT_EQ(star.leaves().size(), 3u);

    for (const auto& t : enumerate_triangulations(5)) {
        const auto d = dual_tree(t);
        EXPECT_EQ(d.nodes.size(), 3u);
        EXPECT_EQ(d.leaves().size(), 2u);
    }
}

TEST(DualTree, PropertyTreeWithLeavesAsEars) {
    for (int n = 4; n <= 9; ++n) {
        for_each_triangulation(n, [&](const Triangulation& t) {
            const auto d = dual_tree(t);
            EXPECT_TRUE(d.is_tree());
            EXPECT_EQ(d.edge_count(), static_cast<std::size_t>(n - 3));
            EXPECT_EQ(static_cast<int>(d.leaves().size()), ear_count(t));
            EXPECT_EQ(d.nodes_of_degree(3).size(), internal_triangles_of(t).size());
        });
    }
}

TEST(GroupAction, Examples) {
    EXPECT_EQ(rotate(T("4:0-2"), 1), T("4:1-3"));
    EXPECT_EQ(reflect(T("6:0-2,0-3,0-4")), T("6:0-2,0-3,0-4"));
    EXPECT_EQ(rotate(T("6:0-2,2-4,0-4"), 1), T("6:1-3,3-5,1-5"));
    EXPECT_THROW(rotate(T("4:0-2"), 4), InputError);
}

TEST(GroupAction, PropertyDihedralRelations) {
    for (int n = 4; n <= 9; ++n) {
        for_each_triangulation(n, [&](const Triangulation& t) {
            EXPECT_EQ(reflect(reflect(t)), t);
            Triangulation r = t;
            for (int i = 0; i < n; ++i) r = rotate(r, 1);
            EXPECT_EQ(r, t);
            // s r s = r^{-1}
            EXPECT_EQ(reflect(rotate(reflect(t), 1)), rotate(t, n - 1));
            EXPECT_EQ(ear_count(rotate(t, 1)), ear_count(t));
            EXPECT_EQ(ear_count(reflect(t)), ear_count(t));
            EXPECT_TRUE(is_triangulation(n, reflect(t).diagonals()));
        });
    }
}

TEST(CanonicalForm, Examples) {
    EXPECT_EQ(canonical_form(T("4:1-3")), T("4:0-2"));
}

TEST(CanonicalForm, PropertyOrbitInvariantAndOrbitCountMatchesOracle) {
    for (int n = 4; n <= 9; ++n) {
        std::size_t fixed = 0;
        for_each_triangulation(n, [&](const Triangulation& t) {
            const auto c = canonical_form(t);
            EXPECT_LE(c, t);
            for (int s = 0; s < n; ++s) {
                EXPECT_EQ(canonical_form(apply_dihedral(t, s, false)), c);
                EXPECT_EQ(canonical_form(apply_dihedral(t, s, true)), c);
            }
            if (c == t) ++fixed;
        });
        EXPECT_EQ(fixed, oracle::orbits(n)) << n;
    }
}

TEST(Disjoint, Examples) {
    EXPECT_TRUE(are_disjoint(T("4:0-2"), T("4:1-3")));
    EXPECT_TRUE(are_disjoint(T("6:0-2,2-4,0-4"), T("6:1-3,3-5,1-5")));
    for (int n = 4; n <= 7; ++n)
        for (const auto& t : enumerate_triangulations(n)) EXPECT_FALSE(are_disjoint(t, t));
    EXPECT_THROW(are_disjoint(T("4:0-2"), T("5:0-2,0-3")), InputError);
}

TEST(TextFormat, RoundTripAndCanonicalOrder) {
    EXPECT_EQ(format_triangulation(T("6:0-2,2-4,0-4")), "6:0-2,0-4,2-4");
    for (int n = 3; n <= 8; ++n)
        for (const auto& t : enumerate_triangulations(n)) EXPECT_EQ(T(format_triangulation(t)), t);
    std::ostringstream os;
    os << T("4:1-3");
    EXPECT_EQ(os.str(), "4:1-3");
}

TEST(TextFormat, ParserRejectsBadInput) {
    for (const char* bad : {"", "6", "6:", "6:0-2,0-3", "6:0-2,0-2,0-3", "6:0-1,0-2,0-3", "6:0-2,1-3,0-4",
                            "6:0-2,0-3,0-9", "6:2-0,0-3,0-4", "x:0-2", "6:0-2;0-3;0-4", "2:"}) {
        EXPECT_THROW(parse_triangulation(bad), InputError) << bad;
    }
    EXPECT_NO_THROW(parse_triangulation("3:"));
}

TEST(Constructor, RejectsInvalidSets) {
    EXPECT_THROW(Triangulation(6, {{0, 2}, {1, 3}, {0, 4}}), InputError);
    EXPECT_THROW(Triangulation(2, {}), InputError);
}
