#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or an integer literal; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(long n);

/// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

/// r + e*eps for a positive infinitesimal eps, ordered lexicographically.
template <class T>
struct Eps {
    T real{};
    std::int64_t eps = 0;

    Eps() = default;
    Eps(T r, std::int64_t e = 0) : real(std::move(r)), eps(e) {}

    friend Eps operator+(const Eps& a, const Eps& b) { return {a.real + b.real, a.eps + b.eps}; }
    friend Eps operator-(const Eps& a, const Eps& b) { return {a.real - b.real, a.eps - b.eps}; }
    friend Eps operator-(const Eps& a) { return {-a.real, -a.eps}; }
    Eps& operator+=(const Eps& b) {
        real += b.real;
        eps += b.eps;
        return *this;
    }

    friend bool operator==(const Eps& a, const Eps& b) { return a.real == b.real && a.eps == b.eps; }
    friend bool operator!=(const Eps& a, const Eps& b) { return !(a == b); }
    friend bool operator<(const Eps& a, const Eps& b) {
        if (a.real != b.real) return a.real < b.real;
        return a.eps < b.eps;
    }
    friend bool operator>(const Eps& a, const Eps& b) { return b < a; }
    friend bool operator<=(const Eps& a, const Eps& b) { return !(b < a); }
    friend bool operator>=(const Eps& a, const Eps& b) { return !(a < b); }
};

using EpsRational = Eps<Rational>;

struct StirlingTable {
    int n_max = 0;
    std::vector<std::vector<BigInt>> unsigned_first;  // c(n,k)
    std::vector<std::vector<BigInt>> second;          // S(n,k)

    const BigInt& c(int n, int k) const { return unsigned_first.at(n).at(k); }
    const BigInt& S(int n, int k) const { return second.at(n).at(k); }
};

StirlingTable stirling(int n_max);

class RaneyPole : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A_n(m, l) = l/(n(m+1)+l) * binom(n(m+1)+l, n); l may be negative.
Rational raney(long n, long m, long l);

/// Regions of level l of C_{n,[m]} inside one chamber.
BigInt mcat_level_closed_form(long n, long m, long l);

/// Coefficient of t^n in (t C(t))^l.
BigInt catalan_convolution(long n, long l);

/// Power series truncated at t^order, read as an exponential generating function.
/// Stored as ordinary coefficients a_n; the EGF coefficient is c_n = n! a_n.
class TruncatedEGF {
public:
    explicit TruncatedEGF(int order = 0);

    static TruncatedEGF from_egf(const std::vector<Rational>& c);
    static TruncatedEGF from_ordinary(const std::vector<Rational>& a);
    static TruncatedEGF constant(const Rational& v, int order);
    /// 1 - e^{-t}
    static TruncatedEGF one_minus_exp_neg(int order);
    /// -log(1 - t), the compositional inverse of 1 - e^{-t}
    static TruncatedEGF neg_log_one_minus(int order);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    Rational egf_coeff(int n) const;
    const Rational& ordinary_coeff(int n) const { return a_.at(n); }
    std::vector<Rational> egf_coeffs() const;

    TruncatedEGF operator+(const TruncatedEGF& o) const;
    TruncatedEGF operator-(const TruncatedEGF& o) const;
    TruncatedEGF operator*(const TruncatedEGF& o) const;
    bool operator==(const TruncatedEGF& o) const { return a_ == o.a_; }

    TruncatedEGF reciprocal() const;
    /// this(inner(t)); inner must have zero constant term.
    TruncatedEGF compose(const TruncatedEGF& inner) const;

private:
    void require_same_order(const TruncatedEGF& o) const;
    std::vector<Rational> a_;
};

/// f^l; negative l requires f(0) != 0.
TruncatedEGF egf_pow(const TruncatedEGF& f, int l);
/// f(1 - e^{-t}); maps the Catalan-type level series to the semiorder-type one.
TruncatedEGF egf_compose_exp(const TruncatedEGF& f);
/// f(-log(1 - t)); maps the semiorder-type level series to the Catalan-type one.
TruncatedEGF egf_compose_log(const TruncatedEGF& f);

/// B_s(t) as the solution of B = 1 + t B^s, truncated at t^order.
TruncatedEGF binomial_series(int s, int order);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational eval(const Rational& t) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

/// binom(t, l) as a polynomial in t.
RatPoly binomial_poly(int l);

/// Integer-coefficient polynomial, constant term first.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& t) const;
    RatPoly as_rational() const;
    bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
};

std::string to_string(const CharPoly& p);

class InterpolationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lagrange interpolation; throws on duplicate abscissae or a non-integral interpolant.
CharPoly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points);
RatPoly poly_interpolate_rational(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace rgl
