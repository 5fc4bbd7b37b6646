#include "catch_amalgamated.hpp"

#include "rgl/mcatalan.hpp"

#include <algorithm>
#include <set>

using namespace rgl;

namespace {

// Fuss-Catalan number by the binomial formula.
BigInt fuss(long n, long m) {
    return binomial((m + 1) * n + 1, n) / BigInt((m + 1) * n + 1);
}

YoungTableau grid(int rows, int cols, std::vector<std::vector<int>> filled) {
    YoungTableau t(rows, cols);
    for (int i = 0; i < static_cast<int>(filled.size()); ++i)
        for (int j = 0; j < static_cast<int>(filled[i].size()); ++j) t.at(i + 1, j + 1) = filled[i][j];
    return t;
}

std::vector<Word> permutations(int n) {
    Word w = identity_word(n);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

TEST_CASE("m-Dyck paths are counted by Fuss-Catalan numbers") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n) {
            auto paths = enumerate_m_dyck(n, m);
            CHECK(BigInt(static_cast<unsigned long>(paths.size())) == fuss(n, m));
            CHECK(std::is_sorted(paths.begin(), paths.end(),
                                 [](const MDyckPath& a, const MDyckPath& b) { return a.heights < b.heights; }));
        }
    auto small = enumerate_m_dyck(2, 2);
    REQUIRE(small.size() == 3);
    CHECK(small[0].heights == std::vector<int>{0, 0});
    CHECK(small[2].heights == std::vector<int>{0, 2});
    CHECK(small[2].steps() == "ESSESS");
    CHECK(small[0].steps() == "EESSSS");
    CHECK_THROWS_AS(enumerate_m_dyck(8, 3, 10), ResourceLimit);
}

TEST_CASE("m-Dyck path validation and multiset") {
    MDyckPath p{6, 6, {0, 2, 4, 5, 6, 12}};
    CHECK_NOTHROW(p.validate());
    CHECK(p.multiset() == std::vector<int>{2, 2, 3, 3, 4, 5, 6, 6, 6, 6, 6, 6});
    CHECK_THROWS_AS((MDyckPath{3, 1, {0, 2, 2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MDyckPath{3, 1, {0, 1, 0}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((MDyckPath{3, 1, {1, 1, 1}}).validate(), std::invalid_argument);
}

TEST_CASE("outer corners and validity of tableaux") {
    YoungTableau t(3, 3);
    CHECK(t.outer_corners() == std::vector<std::pair<int, int>>{{1, 1}});
    t.at(1, 1) = 2;
    t.at(1, 2) = 3;
    CHECK(t.outer_corners() == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}});
    CHECK(t.is_valid());
    t.at(2, 2) = 3;
    CHECK_FALSE(t.is_valid());
    auto bad = grid(2, 2, {{3, 2}});
    CHECK_FALSE(bad.is_valid());
}

TEST_CASE("worked tableau example, literal insertion") {
    MDyckPath p{6, 6, {0, 2, 4, 5, 6, 12}};
    auto trace = tableau_insert_verbatim(p);
    auto expected = grid(5, 6, {{2, 2, 3, 4, 6}, {3, 5, 6}, {6, 6}, {6}, {6}});
    CHECK(trace.tableau == expected);
    CHECK(trace.positions.front() == std::pair<int, int>{1, 1});
    CHECK(trace.positions.size() == 12);
    CHECK(h_matrix(trace.tableau, 6) == std::vector<std::vector<int>>{{0, 0, 0, 0, 0, 0},
                                                                      {0, 0, 0, 0, 0, 1},
                                                                      {0, 0, 0, 1, 1, 1},
                                                                      {0, 0, 1, 1, 1, 2},
                                                                      {0, 1, 1, 1, 2, 3},
                                                                      {0, 1, 2, 2, 2, 5}});
    CHECK(tableau_insert(p) == expected);
}

TEST_CASE("the drawn tableau of the worked example is not realizable") {
    // The drawn final tableau puts the last 6 at (1,6); its tuple admits no point.
    auto drawn = grid(5, 6, {{2, 2, 3, 4, 6, 6}, {3, 5, 6}, {6}, {6}, {6}});
    CHECK(drawn.is_valid());
    CHECK(h_matrix(drawn, 6) == std::vector<std::vector<int>>{{0, 0, 0, 0, 0, 1},
                                                             {0, 0, 0, 0, 0, 1},
                                                             {0, 0, 0, 1, 1, 1},
                                                             {0, 0, 1, 1, 1, 2},
                                                             {0, 1, 1, 1, 2, 2},
                                                             {0, 1, 2, 2, 2, 5}});
    auto t = tableau_to_tuple(drawn, 6);
    t.label = parse_word("543261");
    CHECK_FALSE(tuple_feasible(t, m_catalan_spec(Kind::Catalan, 6, 6)));

    // The quoted point lies in a region whose first path already has five plus entries.
    std::vector<Rational> x;
    for (const char* s : {"6.1", "12.53", "13.45", "14.51", "16.6", "12.49"}) x.push_back(parse_rational(s));
    auto r = region_of_point(m_catalan_spec(Kind::Catalan, 6, 6), x);
    CHECK(dyck_tuple(r).paths[0].heights() == std::vector<int>{0, 0, 0, 0, 0, 5});
    CHECK_FALSE(m_dyck_to_region(MDyckPath{6, 6, {0, 2, 4, 5, 6, 12}}, parse_word("543261")) == r);
}

TEST_CASE("trivial paths") {
    MDyckPath flat{4, 2, {0, 0, 0, 0}};
    auto t = tableau_insert(flat);
    CHECK(t.entries().empty());
    auto tuple = tableau_to_tuple(t, 4);
    for (const auto& d : tuple.paths) CHECK(d.alpha == std::vector<int>{0, 0, 0, 0});
    // Only the braid relations remain: every difference sits in (0, a_m).
    auto r = m_dyck_to_region(flat, identity_word(4));
    CHECK(level(r) == 1);
    CHECK(m_dyck_to_region(MDyckPath{1, 3, {0}}, {1}).spec.n == 1);
}

TEST_CASE("tableau insertion gives nested tuples with matching shape") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 5; ++n)
            for (const auto& p : enumerate_m_dyck(n, m)) {
                auto t = tableau_insert(p);
                CHECK(t.is_valid());
                auto entries = t.entries();
                std::sort(entries.begin(), entries.end());
                CHECK(entries == p.multiset());
                auto tuple = tableau_to_tuple(t, n);
                CHECK(tuple.nested());
                CHECK(static_cast<int>(tuple.paths.size()) == m);
            }
}

TEST_CASE("tableau map is injective onto all regions") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        INFO("n=" << n << " m=" << m);
        auto regions = enumerate_regions(m_catalan_spec(Kind::Catalan, n, m));
        std::set<std::vector<int>> image;
        std::size_t pairs = 0;
        for (const auto& pi : permutations(n))
            for (const auto& p : enumerate_m_dyck(n, m)) {
                image.insert(m_dyck_to_region(p, pi).intervals);
                ++pairs;
            }
        CHECK(image.size() == pairs);
        CHECK(image.size() == regions.size());
        CHECK(BigInt(static_cast<unsigned long>(pairs)) == factorial(n) * fuss(n, m));
    }
}

TEST_CASE("h matrix rejects rows that are not height sequences") {
    auto t = grid(2, 1, {{2}, {2}});
    CHECK(t.is_valid());
    CHECK_THROWS_AS(tableau_to_tuple(t, 3), std::invalid_argument);
}
