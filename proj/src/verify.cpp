#include "rgl/verify.hpp"

#include "rgl/dyckmodel.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rgl {

void VerificationReport::merge(const VerificationReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerificationReport::render(const RatPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << (k ? ", " : "") << to_string(p.coeffs()[k]);
    os << "]";
    return os.str();
}

std::string offsets_string(const std::vector<Rational>& offsets) {
    std::string s;
    for (std::size_t k = 0; k < offsets.size(); ++k) s += (k ? "," : "") + to_string(offsets[k]);
    return s;
}

CensusCache::Key CensusCache::key(Kind kind, int n, const std::vector<Rational>& offsets, bool chamber) {
    std::vector<std::string> text;
    for (const auto& a : offsets) text.push_back(to_string(a));
    return {static_cast<int>(kind), n, text, chamber};
}

namespace {

LevelCensus empty_census() {
    LevelCensus c;
    c.counts = {1};
    c.total = 1;
    return c;
}

}  // namespace

const LevelCensus& CensusCache::census(Kind kind, int n, const std::vector<Rational>& offsets) {
    auto k = key(kind, n, offsets, false);
    {
        std::lock_guard lock(mutex_);
        if (auto it = store_.find(k); it != store_.end()) return it->second;
    }
    LevelCensus c = n == 0 ? empty_census() : level_census(make_spec(kind, n, offsets));
    std::lock_guard lock(mutex_);
    return store_.emplace(k, std::move(c)).first->second;
}

const LevelCensus& CensusCache::chamber(int n, const std::vector<Rational>& offsets) {
    auto k = key(Kind::Catalan, n, offsets, true);
    {
        std::lock_guard lock(mutex_);
        if (auto it = store_.find(k); it != store_.end()) return it->second;
    }
    LevelCensus c = n == 0 ? empty_census() : chamber_census(make_spec(Kind::Catalan, n, offsets));
    std::lock_guard lock(mutex_);
    return store_.emplace(k, std::move(c)).first->second;
}

BigInt CensusCache::r(Kind kind, int n, const std::vector<Rational>& offsets, int l) {
    return census(kind, n, offsets).count(l);
}

namespace {

Params where(std::initializer_list<std::pair<std::string, long>> items, const std::vector<Rational>& offsets) {
    Params p{{"A", "{" + offsets_string(offsets) + "}"}};
    for (const auto& [k, v] : items) p.emplace_back(k, std::to_string(v));
    return p;
}

// EGF of l |-> r_l(A_n) for n = 0..order.
TruncatedEGF level_series(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int l, int order) {
    std::vector<Rational> c;
    for (int n = 0; n <= order; ++n) c.emplace_back(cache.r(kind, n, offsets, l));
    return TruncatedEGF::from_egf(c);
}

}  // namespace

VerificationReport check_stirling_convolution(CensusCache& cache, const std::vector<Rational>& offsets, int n_max) {
    VerificationReport rep;
    rep.identity = "stirling_convolution";
    rep.parameters = {{"A", "{" + offsets_string(offsets) + "}"}, {"n_max", std::to_string(n_max)}};
    auto st = stirling(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int l = 0; l <= n; ++l) {
            BigInt forward = 0, backward = 0;
            for (int k = 0; k <= n; ++k) {
                forward += st.c(n, k) * cache.r(Kind::Semiorder, k, offsets, l);
                BigInt term = st.S(n, k) * cache.r(Kind::Catalan, k, offsets, l);
                backward += (n - k) % 2 ? BigInt(-term) : term;
            }
            rep.expect(where({{"n", n}, {"l", l}, {"direction", 1}}, offsets), cache.r(Kind::Catalan, n, offsets, l),
                       forward);
            rep.expect(where({{"n", n}, {"l", l}, {"direction", -1}}, offsets), cache.r(Kind::Semiorder, n, offsets, l),
                       backward);
        }
    for (int l = 0; l <= n_max; ++l) {
        auto f = level_series(cache, Kind::Catalan, offsets, l, n_max);
        auto g = level_series(cache, Kind::Semiorder, offsets, l, n_max);
        auto via_log = egf_compose_log(g);
        auto via_exp = egf_compose_exp(f);
        for (int n = 0; n <= n_max; ++n) {
            rep.expect(where({{"n", n}, {"l", l}, {"series", 1}}, offsets), f.egf_coeff(n), via_log.egf_coeff(n));
            rep.expect(where({{"n", n}, {"l", l}, {"series", -1}}, offsets), g.egf_coeff(n), via_exp.egf_coeff(n));
        }
    }
    return rep;
}

VerificationReport check_binomial_identity(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n_max) {
    VerificationReport rep;
    rep.identity = "binomial_identity";
    rep.parameters = {{"kind", to_string(kind)}, {"A", "{" + offsets_string(offsets) + "}"}, {"n_max", std::to_string(n_max)}};
    for (int n = 0; n <= n_max; ++n)
        for (int l1 = 0; l1 <= n; ++l1)
            for (int l2 = 0; l1 + l2 <= n; ++l2) {
                BigInt rhs = 0;
                for (int i = 0; i <= n; ++i)
                    rhs += binomial(n, i) * cache.r(kind, i, offsets, l1) * cache.r(kind, n - i, offsets, l2);
                rep.expect(where({{"n", n}, {"l1", l1}, {"l2", l2}}, offsets), cache.r(kind, n, offsets, l1 + l2), rhs);
            }
    return rep;
}

VerificationReport check_egf_power(CensusCache& cache, const std::vector<Rational>& offsets, int n_max) {
    VerificationReport rep;
    rep.identity = "egf_power";
    rep.parameters = {{"A", "{" + offsets_string(offsets) + "}"}, {"n_max", std::to_string(n_max)}};
    for (Kind kind : {Kind::Catalan, Kind::Semiorder}) {
        auto f1 = level_series(cache, kind, offsets, 1, n_max);
        for (int l = 0; l <= n_max; ++l) {
            auto power = egf_pow(f1, l);
            auto fl = level_series(cache, kind, offsets, l, n_max);
            for (int n = 0; n <= n_max; ++n) {
                auto at = where({{"n", n}, {"l", l}}, offsets);
                at.emplace_back("kind", to_string(kind));
                rep.expect(at, fl.egf_coeff(n), power.egf_coeff(n));
            }
        }
    }
    // Chamber counts: ordinary series, compositions of n into l positive parts.
    std::vector<Rational> g1;
    for (int n = 0; n <= n_max; ++n) g1.emplace_back(cache.chamber(n, offsets).count(1));
    auto chamber1 = TruncatedEGF::from_ordinary(g1);
    for (int l = 0; l <= n_max; ++l) {
        auto power = egf_pow(chamber1, l);
        for (int n = 0; n <= n_max; ++n)
            rep.expect(where({{"chamber", 1}, {"n", n}, {"l", l}}, offsets), Rational(cache.chamber(n, offsets).count(l)),
                       power.ordinary_coeff(n));
    }
    return rep;
}

VerificationReport check_charpoly_transition(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n_max) {
    VerificationReport rep;
    rep.identity = "charpoly_transition";
    rep.parameters = {{"kind", to_string(kind)}, {"A", "{" + offsets_string(offsets) + "}"}, {"n_max", std::to_string(n_max)}};
    for (int n = 0; n <= n_max; ++n) {
        RatPoly chi = n == 0 ? RatPoly({Rational(1)}) : char_poly_finite_field(make_spec(kind, n, offsets)).as_rational();
        RatPoly sum;
        for (int l = 0; l <= n; ++l) {
            Rational sign = (n - l) % 2 ? -1 : 1;
            sum = sum + binomial_poly(l) * (sign * Rational(cache.r(kind, n, offsets, l)));
        }
        rep.expect(where({{"n", n}}, offsets), chi, sum);
    }
    return rep;
}

VerificationReport check_mcat_census(CensusCache& cache, int n_max, int m) {
    VerificationReport rep;
    rep.identity = "mcat_census";
    rep.parameters = {{"m", std::to_string(m)}, {"n_max", std::to_string(n_max)}};
    std::vector<Rational> offsets = m_catalan_spec(Kind::Catalan, 1, m).offsets;
    for (int n = 1; n <= n_max; ++n) {
        const auto& c = cache.chamber(n, offsets);
        for (int l = 0; l <= n; ++l) {
            rep.expect(where({{"n", n}, {"l", l}}, offsets), c.count(l), mcat_level_closed_form(n, m, l));
            if (m == 1 && l >= 1) rep.expect(where({{"n", n}, {"l", l}, {"catalan", 1}}, offsets), c.count(l), catalan_convolution(n, l));
        }
    }
    return rep;
}

VerificationReport check_region_totals(CensusCache& cache, const std::vector<std::pair<int, int>>& sizes) {
    VerificationReport rep;
    rep.identity = "region_totals";
    for (auto [n, m] : sizes) {
        auto offsets = m_catalan_spec(Kind::Catalan, n, m).offsets;
        Rational expected = Rational(factorial(n)) * raney(n, m, 1);
        rep.expect(where({{"n", n}, {"m", m}}, offsets), Rational(cache.census(Kind::Catalan, n, offsets).total), expected);
    }
    return rep;
}

VerificationReport check_oracle_agreement(const std::vector<ArrangementSpec>& specs) {
    VerificationReport rep;
    rep.identity = "oracle_agreement";
    for (const auto& spec : specs) {
        auto regions = enumerate_regions(spec);
        rep.parameters.emplace_back("spec", spec.describe());
        for (const auto& r : regions) {
            int oracle = recession_cone_dim(r);
            int model = spec.offsets.empty() ? oracle : level(r);
            Params p{{"spec", spec.describe()}};
            std::string witness;
            for (const auto& v : r.witness) witness += (witness.empty() ? "" : ",") + to_string(v);
            p.emplace_back("witness", "(" + witness + ")");
            rep.expect(p, model, oracle);
        }
    }
    return rep;
}

VerificationReport check_raney_series(int m_max, int l_max, int order) {
    VerificationReport rep;
    rep.identity = "raney_series";
    rep.parameters = {{"m_max", std::to_string(m_max)}, {"l_max", std::to_string(l_max)}, {"order", std::to_string(order)}};
    for (int m = 1; m <= m_max; ++m) {
        auto b = binomial_series(m + 1, order);
        for (int l = 1; l <= l_max; ++l) {
            auto power = egf_pow(b, l);
            for (int n = 0; n <= order; ++n)
                rep.expect({{"m", std::to_string(m)}, {"l", std::to_string(l)}, {"n", std::to_string(n)}},
                           power.ordinary_coeff(n), raney(n, m, l));
        }
    }
    // t C(t) with C = B_2.
    std::vector<Rational> t(order + 1, Rational(0));
    if (order >= 1) t[1] = 1;
    auto tc = TruncatedEGF::from_ordinary(t) * binomial_series(2, order);
    for (int l = 1; l <= order; ++l) {
        auto power = egf_pow(tc, l);
        for (int n = l; n <= order; ++n)
            rep.expect({{"catalan_l", std::to_string(l)}, {"n", std::to_string(n)}}, power.ordinary_coeff(n),
                       Rational(catalan_convolution(n, l)));
    }
    return rep;
}

PolynomialityProbe probe_polynomiality(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n, int l_max) {
    PolynomialityProbe probe;
    auto& rep = probe.report;
    rep.identity = "polynomiality_probe";
    rep.parameters = {{"kind", to_string(kind)}, {"A", "{" + offsets_string(offsets) + "}"}, {"n", std::to_string(n)},
                      {"l_max", std::to_string(l_max)}};
    auto f1 = level_series(cache, kind, offsets, 1, n);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int l = 0; l <= l_max; ++l) {
        BigInt v = l <= n ? cache.r(kind, n, offsets, l) : BigInt(egf_pow(f1, l).egf_coeff(n));
        probe.values.push_back(v);
        pts.emplace_back(Rational(l), Rational(v));
    }
    probe.fit = poly_interpolate_rational(pts);
    probe.degree = probe.fit.degree();
    rep.notes.push_back("fitted degree " + std::to_string(probe.degree) + " through " + std::to_string(pts.size()) +
                        " points");
    if (probe.degree >= l_max) rep.notes.push_back("interpolant uses every point; no redundancy to confirm the fit");
    for (const auto& [x, y] : pts) rep.expect({{"l", to_string(x)}}, probe.fit.eval(x), y);
    return probe;
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(24) << "identity" << std::setw(8) << "status" << std::setw(10) << "checked"
       << "parameters\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
        os << std::left << std::setw(24) << r.identity << std::setw(8) << (r.pass() ? "PASS" : "FAIL") << std::setw(10)
           << r.checked << params << "\n";
        for (const auto& f : r.failures) {
            os << "    counterexample:";
            for (const auto& [k, v] : f.params) os << " " << k << "=" << v;
            os << "  lhs=" << f.lhs << "  rhs=" << f.rhs << "\n";
        }
    }
    return os.str();
}

}  // namespace rgl
