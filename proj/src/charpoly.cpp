#include "rgl/arrangement.hpp"
#include "rgl/kernels.hpp"

namespace rgl {

namespace {

// Offsets scaled by the common denominator, so every hyperplane has an integer constant.
std::vector<BigInt> integer_offsets(const ArrangementSpec& spec) {
    BigInt l = 1;
    for (const auto& a : spec.offsets) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<BigInt> out;
    for (const auto& a : spec.offsets) out.push_back(a.get_num() * (l / a.get_den()));
    return out;
}

bool is_prime(unsigned long v) {
    if (v < 2) return false;
    for (unsigned long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

struct Counter {
    int n;
    std::uint32_t p;
    std::vector<std::uint32_t> shifts;  // residues c with x_i - x_j = c forbidden, closed under negation
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> forbidden;
    std::vector<char> blocked;

    std::uint64_t run(int i) {
        std::size_t base = forbidden.size();
        for (int j = 0; j < i; ++j)
            for (auto c : shifts) forbidden.push_back((x[j] + c) % p);
        std::uint64_t total = 0;
        if (i == n - 1) {
            total = kernels::count_allowed(p, forbidden.data(), forbidden.size());
        } else {
            std::fill(blocked.begin(), blocked.end(), 0);
            for (auto f : forbidden) blocked[f] = 1;
            std::vector<std::uint32_t> choices;
            for (std::uint32_t v = 0; v < p; ++v)
                if (!blocked[v]) choices.push_back(v);
            for (auto v : choices) {
                x[i] = v;
                total += run(i + 1);
            }
        }
        forbidden.resize(base);
        return total;
    }
};

}  // namespace

BigInt finite_field_count(const ArrangementSpec& spec, unsigned p) {
    spec.validate();
    if (!is_prime(p)) throw std::invalid_argument("finite_field_count needs a prime");
    auto offs = integer_offsets(spec);
    Counter c{spec.n, p, {}, std::vector<std::uint32_t>(spec.n, 0), {}, std::vector<char>(p, 0)};
    auto residue = [p](const BigInt& v) {
        BigInt r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r.get_ui());
    };
    if (spec.kind == Kind::Catalan) c.shifts.push_back(0);
    for (const auto& a : offs) {
        c.shifts.push_back(residue(a));
        c.shifts.push_back(residue(-a));
    }
    if (spec.n == 1) return BigInt(p);
    // Translation invariance: fix x_1 = 0 and multiply by p.
    c.x[0] = 0;
    return BigInt(static_cast<unsigned long>(c.run(1))) * p;
}

CharPoly char_poly_finite_field(const ArrangementSpec& spec) {
    spec.validate();
    auto offs = integer_offsets(spec);
    BigInt a1 = offs.empty() ? BigInt(0) : offs.front();
    BigInt bound = 2 * spec.n * a1 + 1;
    if (!bound.fits_ulong_p()) throw std::invalid_argument("offsets too large for finite-field counting");
    unsigned long start = bound.get_ui();
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<unsigned long> primes;
        for (unsigned long q = start + 1; static_cast<int>(primes.size()) < spec.n + 2; ++q)
            if (is_prime(q)) primes.push_back(q);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int k = 0; k <= spec.n; ++k)
            pts.emplace_back(Rational(primes[k]), Rational(finite_field_count(spec, primes[k])));
        CharPoly chi = poly_interpolate(pts);
        unsigned long extra = primes.back();
        if (chi.eval(BigInt(extra)) == finite_field_count(spec, extra)) return chi;
        start *= 2;
    }
    throw ValidationMismatch("characteristic polynomial failed cross-validation");
}

}  // namespace rgl
