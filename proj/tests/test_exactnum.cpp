#include "catch_amalgamated.hpp"

#include "rgl/exactnum.hpp"

#include <random>

using namespace rgl;

namespace {

// Pascal triangle, independent of the GMP binomial.
BigInt pascal(int n, int k) {
    std::vector<std::vector<BigInt>> t(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : BigInt(0));
    }
    return (k < 0 || k > n) ? BigInt(0) : t[n][k];
}

// Number of nondecreasing h with h_1 = 0, h_i <= m(i-1).
long count_m_dyck(int n, int m) {
    long total = 0;
    std::vector<int> h(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            ++total;
            return;
        }
        for (int v = h[i - 1]; v <= m * i; ++v) {
            h[i] = v;
            self(self, i + 1);
        }
    };
    if (n <= 1) return 1;
    rec(rec, 1);
    return total;
}

}  // namespace

TEST_CASE("binomial matches Pascal recurrence") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    for (int n = 0; n <= 20; ++n)
        for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == pascal(n, k));
}

TEST_CASE("Stirling tables") {
    auto t = stirling(10);
    CHECK(t.c(3, 1) == 2);
    CHECK(t.c(3, 3) == 1);
    CHECK(t.c(4, 2) == 11);
    CHECK(t.S(4, 2) == 7);
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.c(n, 0) == 0);
        CHECK(t.S(n, 0) == 0);
        CHECK(t.c(n, n) == 1);
        CHECK(t.c(n, 1) == factorial(n - 1));
    }
    SECTION("signed inversion") {
        for (int n = 0; n <= 10; ++n)
            for (int j = 0; j <= 10; ++j) {
                BigInt s = 0;
                for (int k = 0; k <= 10; ++k) s += ((n - k) % 2 == 0 ? 1 : -1) * t.S(n, k) * t.c(k, j);
                CHECK(s == (n == j ? 1 : 0));
            }
    }
}

TEST_CASE("Raney numbers") {
    CHECK(raney(3, 1, 1) == 5);
    CHECK(raney(0, 3, 7) == 1);
    CHECK(raney(2, 2, 1) == 3);
    CHECK_THROWS_AS(raney(1, 1, -2), RaneyPole);
    // negative l stays a value of the same formula
    CHECK(raney(1, 1, -1) == Rational(-1, 1));
    for (int n = 0; n <= 12; ++n)
        for (int m = 1; m <= 4; ++m) CHECK(raney(n, m, 1).get_den() == 1);
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(raney(n, m, 1) == count_m_dyck(n, m));
}

TEST_CASE("level closed form per chamber") {
    CHECK(mcat_level_closed_form(3, 1, 1) == 2);
    CHECK(mcat_level_closed_form(3, 1, 3) == 1);
    CHECK(mcat_level_closed_form(2, 1, 2) == 1);
    CHECK(mcat_level_closed_form(4, 1, 0) == 0);
    CHECK_THROWS(mcat_level_closed_form(3, 1, 4));
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 3; ++m) {
            BigInt s = 0;
            for (int l = 1; l <= n; ++l) s += mcat_level_closed_form(n, m, l);
            CHECK(Rational(s) == raney(n, m, 1));
        }
}

TEST_CASE("Catalan convolution") {
    CHECK(catalan_convolution(3, 1) == 2);
    CHECK(catalan_convolution(4, 2) == 5);
    for (int n = 1; n <= 8; ++n) CHECK(catalan_convolution(n, n) == 1);
    CHECK_THROWS(catalan_convolution(3, 0));
    // convolve 1,1,2,5,14 directly
    std::vector<BigInt> cat = {1, 1, 2, 5, 14, 42};
    BigInt conv = 0;
    for (int i = 0; i <= 3; ++i) conv += cat[i] * cat[3 - i];
    CHECK(catalan_convolution(5, 2) == conv);
}

TEST_CASE("truncated EGF arithmetic") {
    auto f = TruncatedEGF::from_egf({0, 1, 1, 1, 1});
    CHECK(egf_pow(f, 0) == TruncatedEGF::constant(1, 4));
    CHECK(egf_pow(f, 5) == egf_pow(f, 2) * egf_pow(f, 3));
    CHECK_THROWS(f * TruncatedEGF(3));

    SECTION("composition with 1 - e^{-t} and its inverse") {
        // r_1(C*_k) = 1, 1, 7 for k = 1..3 with A = {1}; forward Stirling gives 1, 2, 12 for C_k.
        auto fstar = TruncatedEGF::from_egf({0, 1, 1, 7});
        auto f = egf_compose_log(fstar);
        CHECK(f.egf_coeffs() == std::vector<Rational>{0, 1, 2, 12});
        CHECK(egf_compose_exp(f) == fstar);
        auto id = TruncatedEGF::from_ordinary({0, 1, 0, 0, 0, 0});
        CHECK(egf_compose_exp(egf_compose_log(id)) == id);
    }
    SECTION("reciprocal") {
        auto g = TruncatedEGF::from_ordinary({1, 2, 3, 4, 5});
        CHECK(g * g.reciprocal() == TruncatedEGF::constant(1, 4));
        CHECK(egf_pow(g, -2) * egf_pow(g, 2) == TruncatedEGF::constant(1, 4));
    }
    SECTION("binomial series squared vs Raney") {
        auto b = binomial_series(2, 6);
        auto b2 = egf_pow(b, 2);
        CHECK(b2.ordinary_coeff(3) == 14);
        for (int n = 0; n <= 6; ++n) CHECK(b2.ordinary_coeff(n) == raney(n, 1, 2));
    }
}

TEST_CASE("polynomial interpolation") {
    auto p = poly_interpolate({{1, -2}, {2, -2}, {3, 0}, {4, 4}});
    CHECK(p.coeffs == std::vector<BigInt>{0, -3, 1});
    CHECK(to_string(p) == "t^2 - 3t");
    auto c = poly_interpolate({{1, 7}, {5, 7}});
    CHECK(c.degree() == 0);
    CHECK(c.coeffs[0] == 7);
    auto q = poly_interpolate({{3, 3}, {5, 15}, {7, 35}});
    CHECK(to_string(q) == "t^2 - 2t");
    CHECK_THROWS_AS(poly_interpolate({{1, 1}, {1, 2}}), InterpolationError);
    CHECK(binomial_poly(2).eval(5) == 10);
    CHECK(binomial_poly(3).eval(2) == 0);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational(" 4 ") == 4);
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK_THROWS(parse_rational("1.5.2"));
    CHECK_THROWS(parse_rational("a"));
}

TEST_CASE("Eps is an ordered group") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    auto draw = [&] { return EpsRational(Rational(d(rng), 3), d(rng)); };
    for (int trial = 0; trial < 2000; ++trial) {
        auto a = draw(), b = draw(), c = draw();
        if (a < b) CHECK(a + c < b + c);
        CHECK((a < b) + (b < a) + (a == b) == 1);
        CHECK(a - a == EpsRational(0, 0));
        if (a < b && b < c) CHECK(a < c);
    }
    CHECK(EpsRational(1, -1) < EpsRational(1, 0));
    CHECK(EpsRational(0, 5) < EpsRational(Rational(1, 1000), -5));
}
