#include "catch_amalgamated.hpp"

#include "rgl/arrangement.hpp"

using namespace rgl;

namespace {

// Direct count over all of F_p^n.
BigInt brute_count(const ArrangementSpec& spec, unsigned p) {
    std::vector<long> offs;
    for (const auto& a : spec.offsets) offs.push_back(a.get_num().get_si());
    const int n = spec.n;
    std::vector<unsigned> x(n, 0);
    unsigned long total = 0;
    auto ok = [&] {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                long d = (static_cast<long>(x[i]) - static_cast<long>(x[j])) % static_cast<long>(p);
                if (d < 0) d += p;
                if (spec.kind == Kind::Catalan && d == 0) return false;
                for (long a : offs) {
                    long pa = a % p, na = (p - pa) % p;
                    if (d == pa || d == na) return false;
                }
            }
        return true;
    };
    while (true) {
        if (ok()) ++total;
        int i = 0;
        while (i < n && ++x[i] == p) x[i++] = 0;
        if (i == n) break;
    }
    return BigInt(total);
}

CharPoly poly(std::initializer_list<long> c) {
    CharPoly p;
    for (long v : c) p.coeffs.emplace_back(v);
    return p;
}

}  // namespace

TEST_CASE("finite-field counts agree with direct counting") {
    for (auto spec : {make_spec(Kind::Catalan, 3, {1}), make_spec(Kind::Semiorder, 3, {2, 1}),
                      make_spec(Kind::Catalan, 2, {3, 1}), make_spec(Kind::Catalan, 3, {})}) {
        for (unsigned p : {11u, 13u, 17u}) {
            INFO(spec.describe() << " p=" << p);
            CHECK(finite_field_count(spec, p) == brute_count(spec, p));
        }
    }
}

TEST_CASE("small characteristic polynomials") {
    CHECK(char_poly_finite_field(make_spec(Kind::Catalan, 2, {1})) == poly({0, -3, 1}));
    CHECK(char_poly_finite_field(make_spec(Kind::Semiorder, 2, {1})) == poly({0, -2, 1}));
    CHECK(char_poly_finite_field(make_spec(Kind::Catalan, 2, {})) == poly({0, -1, 1}));
    CHECK(char_poly_finite_field(make_spec(Kind::Catalan, 1, {1})) == poly({0, 1}));
    CHECK(to_string(char_poly_finite_field(make_spec(Kind::Catalan, 2, {1}))) == "t^2 - 3t");
}

TEST_CASE("braid arrangement gives the falling factorial") {
    for (int n = 1; n <= 5; ++n) {
        auto chi = char_poly_finite_field(make_spec(Kind::Catalan, n, {}));
        for (long t = 0; t <= 8; ++t) {
            BigInt ff = 1;
            for (int k = 0; k < n; ++k) ff *= t - k;
            CHECK(chi.eval(BigInt(t)) == ff);
        }
    }
}

TEST_CASE("known closed forms") {
    // Catalan arrangement: t (t - n - 1)(t - n - 2)...(t - 2n + 1).
    for (int n = 2; n <= 4; ++n) {
        auto chi = char_poly_finite_field(make_spec(Kind::Catalan, n, {1}));
        for (long t = 0; t <= 10; ++t) {
            BigInt v = t;
            for (int k = n + 1; k <= 2 * n - 1; ++k) v *= t - k;
            CHECK(chi.eval(BigInt(t)) == v);
        }
    }
}

TEST_CASE("rational offsets scale to integers") {
    auto half = char_poly_finite_field(make_spec(Kind::Catalan, 3, {Rational(1, 2)}));
    auto one = char_poly_finite_field(make_spec(Kind::Catalan, 3, {1}));
    CHECK(half == one);
}

TEST_CASE("non-prime moduli are rejected") {
    CHECK_THROWS_AS(finite_field_count(make_spec(Kind::Catalan, 2, {1}), 15), std::invalid_argument);
}
