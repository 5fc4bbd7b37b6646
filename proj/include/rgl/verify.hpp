#pragma once

#include "rgl/arrangement.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rgl {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Counterexample {
    Params params;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    Params parameters;
    std::size_t checked = 0;
    std::vector<Counterexample> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
    /// Counts one comparison; records a counterexample when the sides differ.
    template <class T>
    bool expect(Params where, const T& lhs, const T& rhs) {
        ++checked;
        if (lhs == rhs) return true;
        failures.push_back({std::move(where), render(lhs), render(rhs)});
        return false;
    }
    void merge(const VerificationReport& other);

private:
    static std::string render(const BigInt& v) { return to_string(v); }
    static std::string render(const Rational& v) { return to_string(v); }
    static std::string render(const std::string& v) { return v; }
    static std::string render(int v) { return std::to_string(v); }
    static std::string render(long v) { return std::to_string(v); }
    static std::string render(std::size_t v) { return std::to_string(v); }
    static std::string render(const RatPoly& p);
};

/// Level censuses memoized by (kind, n, offsets). Dimension 0 follows r_l = [l = 0].
class CensusCache {
public:
    const LevelCensus& census(Kind kind, int n, const std::vector<Rational>& offsets);
    /// Catalan-type census restricted to the fundamental chamber.
    const LevelCensus& chamber(int n, const std::vector<Rational>& offsets);
    /// r_l, zero outside 0..n.
    BigInt r(Kind kind, int n, const std::vector<Rational>& offsets, int l);

private:
    using Key = std::tuple<int, int, std::vector<std::string>, bool>;
    static Key key(Kind kind, int n, const std::vector<Rational>& offsets, bool chamber);
    std::mutex mutex_;
    std::map<Key, LevelCensus> store_;
};

std::string offsets_string(const std::vector<Rational>& offsets);

/// r_l(C_n) = sum_k c(n,k) r_l(C*_k) and the S(n,k) inverse, plus the series form.
VerificationReport check_stirling_convolution(CensusCache& cache, const std::vector<Rational>& offsets, int n_max);
/// r_{l1+l2}(A_n) = sum_i binom(n,i) r_{l1}(A_i) r_{l2}(A_{n-i}) for l1 + l2 <= n.
VerificationReport check_binomial_identity(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n_max);
/// F_l = F_1^l for both kinds, and the chamber composition sum for the Catalan type.
VerificationReport check_egf_power(CensusCache& cache, const std::vector<Rational>& offsets, int n_max);
/// Finite-field chi equals sum_l (-1)^{n-l} r_l binom(t, l).
VerificationReport check_charpoly_transition(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n_max);
/// Chamber census of C_{n,[m]} against the closed form for n = 1..n_max.
VerificationReport check_mcat_census(CensusCache& cache, int n_max, int m);
/// Region totals of C_{n,[m]} against n! A_n(m,1).
VerificationReport check_region_totals(CensusCache& cache, const std::vector<std::pair<int, int>>& sizes);
/// Dyck/graph levels against recession-cone dimensions, region by region.
VerificationReport check_oracle_agreement(const std::vector<ArrangementSpec>& specs);
/// Coefficients of B_{m+1}(t)^l and of (t C(t))^l against their closed forms.
VerificationReport check_raney_series(int m_max, int l_max, int order);

struct PolynomialityProbe {
    VerificationReport report;
    int degree = -1;
    RatPoly fit;
    std::vector<BigInt> values;  // r_l for l = 0..l_max
};

/// Interpolates r_l(A_n) for l = 0..l_max, values beyond n taken from F_1^l. Exploratory.
PolynomialityProbe probe_polynomiality(CensusCache& cache, Kind kind, const std::vector<Rational>& offsets, int n,
                                       int l_max);

/// Fixed-width table with one line per report.
std::string summary_table(const std::vector<VerificationReport>& reports);

}  // namespace rgl
