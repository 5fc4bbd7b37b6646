#include "catch_amalgamated.hpp"

#include "rgl/arrangement.hpp"

#include <algorithm>
#include <random>

using namespace rgl;

namespace {

// Integer-bounded systems are feasible iff some point of the grid (1/n)Z, x_1 = 0, satisfies them.
bool grid_feasible(const std::vector<DifferenceConstraint>& cs, int n, int radius) {
    std::vector<Rational> x(n, 0);
    const int steps = 2 * radius * n;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return satisfies(cs, x);
        for (int s = 0; s <= steps; ++s) {
            x[i] = Rational(s - radius * n, n);
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 1);
}

Rational cycle_weight(const std::vector<DifferenceConstraint>& cycle, long& eps) {
    Rational w = 0;
    eps = 0;
    for (const auto& c : cycle) {
        w += c.bound.real;
        eps += c.bound.eps;
    }
    return w;
}

}  // namespace

TEST_CASE("band constraint gets the midpoint witness") {
    std::vector<DifferenceConstraint> cs{strictly_greater(0, 1, 1), strictly_less(0, 1, 2)};
    auto r = feasible(cs, 2);
    REQUIRE(r);
    CHECK(r.witness[0] - r.witness[1] == Rational(3, 2));
    CHECK(std::min(r.witness[0], r.witness[1]) == 0);
}

TEST_CASE("opposite strict inequalities are infeasible with a certificate") {
    std::vector<DifferenceConstraint> cs{strictly_less(0, 1, 0), strictly_less(1, 0, 0)};
    auto r = feasible(cs, 2);
    REQUIRE_FALSE(r);
    REQUIRE_FALSE(r.cycle.empty());
    long eps = 0;
    Rational w = cycle_weight(r.cycle, eps);
    CHECK((w < 0 || (w == 0 && eps < 0)));
}

TEST_CASE("weak inequalities allow equality") {
    std::vector<DifferenceConstraint> cs{at_most(0, 1, 0), at_most(1, 0, 0), strictly_greater(2, 0, 5)};
    auto r = feasible(cs, 3);
    REQUIRE(r);
    CHECK(r.witness[0] == r.witness[1]);
    CHECK(satisfies(cs, r.witness));
}

TEST_CASE("unconstrained system is feasible") {
    auto r = feasible({}, 4);
    REQUIRE(r);
    CHECK(r.witness.size() == 4);
}

TEST_CASE("decision agrees with grid search on random integer systems") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> idx(0, 2), bound(-2, 2), kind(0, 2), count(1, 6);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<DifferenceConstraint> cs;
        int k = count(rng);
        for (int c = 0; c < k; ++c) {
            int i = idx(rng), j = idx(rng);
            if (i == j) continue;
            int b = bound(rng);
            switch (kind(rng)) {
                case 0: cs.push_back(strictly_less(i, j, b)); break;
                case 1: cs.push_back(strictly_greater(i, j, b)); break;
                default: cs.push_back(at_most(i, j, b)); break;
            }
        }
        auto r = feasible(cs, 3);
        CHECK(static_cast<bool>(r) == grid_feasible(cs, 3, 6));
        if (r) {
            ++feasible_seen;
            CHECK(satisfies(cs, r.witness));
        } else {
            ++infeasible_seen;
            long eps = 0;
            Rational w = cycle_weight(r.cycle, eps);
            CHECK((w < 0 || (w == 0 && eps < 0)));
        }
    }
    CHECK(feasible_seen > 50);
    CHECK(infeasible_seen > 50);
}

TEST_CASE("systems built around a point are feasible") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5;
        std::vector<Rational> p(n);
        for (auto& v : p) v = Rational(coord(rng), 4);
        std::vector<DifferenceConstraint> cs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) cs.push_back(strictly_less(i, j, p[i] - p[j] + Rational(1, 8)));
        auto r = feasible(cs, n);
        REQUIRE(r);
        CHECK(satisfies(cs, r.witness));
    }
}
