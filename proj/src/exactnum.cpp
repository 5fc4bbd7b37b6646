#include "rgl/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rgl {

namespace {

Rational frac(long p, long q) {
    Rational r{BigInt(p), BigInt(q)};
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto dot = s.find('.');
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
        std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational: " + text);
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        s = whole + frac + "/1" + std::string(frac.size(), '0');
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num.size() > 1 && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: " + text);
    BigInt d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(BigInt(num, 10), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

StirlingTable stirling(int n_max) {
    if (n_max < 0) throw std::invalid_argument("stirling: negative n_max");
    StirlingTable t;
    t.n_max = n_max;
    t.unsigned_first.assign(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
    t.second.assign(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
    t.unsigned_first[0][0] = 1;
    t.second[0][0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            t.unsigned_first[n][k] = t.unsigned_first[n - 1][k - 1] + (n - 1) * t.unsigned_first[n - 1][k];
            t.second[n][k] = t.second[n - 1][k - 1] + k * t.second[n - 1][k];
        }
    }
    return t;
}

Rational raney(long n, long m, long l) {
    if (n < 0 || m < 1) throw std::invalid_argument("raney: need n >= 0, m >= 1");
    if (n == 0) return 1;
    long top = n * (m + 1) + l;
    if (top == 0) throw RaneyPole("raney: n(m+1)+l = 0");
    // binom(top, n) as a polynomial in top, valid for negative top as well.
    Rational falling = 1;
    for (long i = 0; i < n; ++i) falling *= Rational(top - i);
    Rational value = frac(l, top) * falling / Rational(factorial(n));
    value.canonicalize();
    return value;
}

BigInt mcat_level_closed_form(long n, long m, long l) {
    if (m < 1 || n < 0) throw std::invalid_argument("mcat_level_closed_form: need n >= 0, m >= 1");
    if (l < 0 || l > n) throw std::out_of_range("mcat_level_closed_form: level outside [0, n]");
    if (n == 0) return l == 0 ? 1 : 0;
    if (l == 0) return 0;
    long top = (m + 1) * n - l;
    Rational v = frac(m * l, top) * Rational(binomial(top, m * n));
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("mcat_level_closed_form: non-integral value");
    return v.get_num();
}

BigInt catalan_convolution(long n, long l) {
    if (l < 1 || l > n) throw std::out_of_range("catalan_convolution: need 1 <= l <= n");
    long top = 2 * n - l;
    Rational v = frac(l, top) * Rational(binomial(top, n));
    v.canonicalize();
    return v.get_num();
}

TruncatedEGF::TruncatedEGF(int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    a_.assign(order + 1, Rational(0));
}

TruncatedEGF TruncatedEGF::from_egf(const std::vector<Rational>& c) {
    if (c.empty()) throw std::invalid_argument("empty series");
    TruncatedEGF f(static_cast<int>(c.size()) - 1);
    for (std::size_t n = 0; n < c.size(); ++n) {
        f.a_[n] = c[n] / Rational(factorial(static_cast<long>(n)));
        f.a_[n].canonicalize();
    }
    return f;
}

TruncatedEGF TruncatedEGF::from_ordinary(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("empty series");
    TruncatedEGF f(static_cast<int>(a.size()) - 1);
    f.a_ = a;
    for (auto& x : f.a_) x.canonicalize();
    return f;
}

TruncatedEGF TruncatedEGF::constant(const Rational& v, int order) {
    TruncatedEGF f(order);
    f.a_[0] = v;
    return f;
}

TruncatedEGF TruncatedEGF::one_minus_exp_neg(int order) {
    TruncatedEGF f(order);
    for (int n = 1; n <= order; ++n) f.a_[n] = Rational(n % 2 == 1 ? 1 : -1) / Rational(factorial(n));
    return f;
}

TruncatedEGF TruncatedEGF::neg_log_one_minus(int order) {
    TruncatedEGF f(order);
    for (int n = 1; n <= order; ++n) f.a_[n] = frac(1, n);
    return f;
}

Rational TruncatedEGF::egf_coeff(int n) const {
    Rational c = a_.at(n) * Rational(factorial(n));
    c.canonicalize();
    return c;
}

std::vector<Rational> TruncatedEGF::egf_coeffs() const {
    std::vector<Rational> out;
    for (int n = 0; n <= order(); ++n) out.push_back(egf_coeff(n));
    return out;
}

void TruncatedEGF::require_same_order(const TruncatedEGF& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
}

TruncatedEGF TruncatedEGF::operator+(const TruncatedEGF& o) const {
    require_same_order(o);
    TruncatedEGF r(order());
    for (int n = 0; n <= order(); ++n) r.a_[n] = a_[n] + o.a_[n];
    return r;
}

TruncatedEGF TruncatedEGF::operator-(const TruncatedEGF& o) const {
    require_same_order(o);
    TruncatedEGF r(order());
    for (int n = 0; n <= order(); ++n) r.a_[n] = a_[n] - o.a_[n];
    return r;
}

TruncatedEGF TruncatedEGF::operator*(const TruncatedEGF& o) const {
    require_same_order(o);
    TruncatedEGF r(order());
    for (int i = 0; i <= order(); ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) r.a_[i + j] += a_[i] * o.a_[j];
    }
    return r;
}

TruncatedEGF TruncatedEGF::reciprocal() const {
    if (a_[0] == 0) throw std::domain_error("reciprocal of series with zero constant term");
    TruncatedEGF r(order());
    r.a_[0] = 1 / a_[0];
    for (int n = 1; n <= order(); ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) s += a_[k] * r.a_[n - k];
        r.a_[n] = -s / a_[0];
    }
    return r;
}

TruncatedEGF TruncatedEGF::compose(const TruncatedEGF& inner) const {
    require_same_order(inner);
    if (inner.a_[0] != 0) throw std::domain_error("composition needs zero constant term");
    // Horner: a_0 + g(a_1 + g(a_2 + ...)).
    TruncatedEGF r = constant(a_[order()], order());
    for (int n = order() - 1; n >= 0; --n) r = constant(a_[n], order()) + inner * r;
    return r;
}

TruncatedEGF egf_pow(const TruncatedEGF& f, int l) {
    if (l < 0) return egf_pow(f.reciprocal(), -l);
    TruncatedEGF result = TruncatedEGF::constant(1, f.order());
    TruncatedEGF base = f;
    while (l > 0) {
        if (l & 1) result = result * base;
        l >>= 1;
        if (l > 0) base = base * base;
    }
    return result;
}

TruncatedEGF egf_compose_exp(const TruncatedEGF& f) {
    return f.compose(TruncatedEGF::one_minus_exp_neg(f.order()));
}

TruncatedEGF egf_compose_log(const TruncatedEGF& f) {
    return f.compose(TruncatedEGF::neg_log_one_minus(f.order()));
}

TruncatedEGF binomial_series(int s, int order) {
    std::vector<Rational> ta(order + 1, Rational(0));
    if (order >= 1) ta[1] = 1;
    TruncatedEGF t = TruncatedEGF::from_ordinary(ta);
    TruncatedEGF one = TruncatedEGF::constant(1, order);
    TruncatedEGF b = one;
    // Each pass fixes one more coefficient.
    for (int it = 0; it <= order; ++it) b = one + t * egf_pow(b, s);
    return b;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(v);
}

void RatPoly::trim() {
    for (auto& x : c_) x.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rational RatPoly::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(v);
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o * Rational(-1); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(v);
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return RatPoly(v);
}

RatPoly binomial_poly(int l) {
    if (l < 0) return RatPoly();
    RatPoly p({Rational(1)});
    for (int i = 0; i < l; ++i) p = p * RatPoly({Rational(-i), Rational(1)});
    return p * (Rational(1) / Rational(factorial(l)));
}

BigInt CharPoly::eval(const BigInt& t) const {
    BigInt r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + *it;
    return r;
}

RatPoly CharPoly::as_rational() const {
    std::vector<Rational> v;
    for (const auto& z : coeffs) v.emplace_back(z);
    return RatPoly(v);
}

std::string to_string(const CharPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& c = p.coeffs[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

RatPoly poly_interpolate_rational(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw InterpolationError("duplicate abscissa");
    RatPoly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly basis({Rational(1)});
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

CharPoly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RatPoly p = poly_interpolate_rational(points);
    CharPoly out;
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw InterpolationError("interpolant has non-integral coefficients");
        out.coeffs.push_back(c.get_num());
    }
    return out;
}

}  // namespace rgl
