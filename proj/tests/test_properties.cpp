#include "catch_amalgamated.hpp"

#include "rgl/bijections.hpp"
#include "rgl/mcatalan.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace rgl;

namespace {

std::vector<Rational> random_offsets(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> num(1, 12);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational q(num(rng), 3);
        q.canonicalize();
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Rational> random_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coord(-400, 400);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) {
        Rational q(coord(rng), 97);
        q.canonicalize();
        x.push_back(q);
    }
    return x;
}

std::optional<Region> try_region(const ArrangementSpec& spec, const std::vector<Rational>& x) {
    try {
        return region_of_point(spec, x);
    } catch (const OnHyperplane&) {
        return std::nullopt;
    }
}

}  // namespace

TEST_CASE("level equals recession cone dimension at random points") {
    std::mt19937 rng(101);
    int seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto offs = random_offsets(rng, 1 + static_cast<int>(rng() % 3));
        auto kind = trial % 2 ? Kind::Catalan : Kind::Semiorder;
        auto r = try_region(make_spec(kind, n, offs), random_point(rng, n));
        if (!r) continue;
        ++seen;
        INFO(r->spec.describe());
        CHECK(level(*r) == recession_cone_dim(*r));
    }
    CHECK(seen > 200);
}

TEST_CASE("Dyck tuples of random regions are nested and rebuild the region") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto offs = random_offsets(rng, 1 + static_cast<int>(rng() % 3));
        auto kind = trial % 2 ? Kind::Catalan : Kind::Semiorder;
        auto spec = make_spec(kind, n, offs);
        auto r = try_region(spec, random_point(rng, n));
        if (!r) continue;
        auto t = dyck_tuple(*r);
        CHECK(t.nested());
        CHECK(is_permutation(t.label));
        for (const auto& d : t.paths) CHECK(DyckPath::from_steps(d.steps()) == d);
        auto fr = tuple_feasible(t, spec);
        REQUIRE(fr);
        CHECK(*fr.region == *r);
    }
}

TEST_CASE("region map round trips at random points") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto offs = random_offsets(rng, 1 + static_cast<int>(rng() % 2));
        auto delta = try_region(make_spec(Kind::Catalan, n, offs), random_point(rng, n));
        if (!delta) continue;
        auto pre = phi_inverse(*delta);
        CHECK(pre.omega.is_standard());
        CHECK(pre.omega.size() == n);
        CHECK(phi(pre.omega, pre.region) == *delta);
        CHECK(level(pre.region) == level(*delta));
    }
}

TEST_CASE("semiorder split round trips at random points") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto offs = random_offsets(rng, 1 + static_cast<int>(rng() % 2));
        auto r = try_region(make_spec(Kind::Semiorder, n, offs), random_point(rng, n));
        if (!r) continue;
        auto split = phi_omega(*r);
        CHECK(static_cast<int>(split.parts.size()) == level(*r));
        int total = 0;
        for (const auto& p : split.parts) {
            CHECK(level(p) == 1);
            total += p.spec.n;
        }
        CHECK(total == n);
        CHECK(phi_omega_inverse(split) == *r);
    }
}

TEST_CASE("fundamental bijection round trips on random words") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Word w = identity_word(n);
        std::shuffle(w.begin(), w.end(), rng);
        auto c = inverse_fundamental(w);
        CHECK(c.is_standard());
        CHECK(fundamental_bijection(c) == w);
        CHECK(CycleForm::from_function(c.as_function()) == c);
    }
}

TEST_CASE("scaling every offset leaves the level census unchanged") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        auto offs = random_offsets(rng, 2);
        Rational s(2 + static_cast<int>(rng() % 5), 3);
        std::vector<Rational> scaled;
        for (const auto& a : offs) scaled.push_back(a * s);
        for (auto kind : {Kind::Catalan, Kind::Semiorder}) {
            auto a = level_census(make_spec(kind, 3, offs));
            auto b = level_census(make_spec(kind, 3, scaled));
            CHECK(a.counts == b.counts);
        }
    }
}

TEST_CASE("censuses sum to totals and chambers divide evenly") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 6; ++trial) {
        auto offs = random_offsets(rng, 1 + trial % 2);
        for (int n = 1; n <= 3; ++n) {
            auto c = level_census(make_spec(Kind::Catalan, n, offs), true);
            CHECK(std::accumulate(c.counts.begin(), c.counts.end(), BigInt(0)) == c.total);
            auto ch = chamber_census(make_spec(Kind::Catalan, n, offs));
            for (int l = 1; l <= n; ++l) CHECK(c.count(l) == factorial(n) * ch.count(l));
        }
    }
}

TEST_CASE("tableau regions satisfy their own tuple") {
    std::mt19937 rng(808);
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 4; ++n) {
            auto paths = enumerate_m_dyck(n, m);
            for (int trial = 0; trial < 10; ++trial) {
                const auto& p = paths[rng() % paths.size()];
                Word pi = identity_word(n);
                std::shuffle(pi.begin(), pi.end(), rng);
                auto r = m_dyck_to_region(p, pi);
                auto t = tableau_to_tuple(tableau_insert(p), n);
                t.label = pi;
                auto fr = tuple_feasible(t, r.spec);
                REQUIRE(fr);
                CHECK(*fr.region == r);
            }
        }
}
