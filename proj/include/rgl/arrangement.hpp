#pragma once

#include "rgl/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgl {

enum class Kind { Catalan, Semiorder };

std::string to_string(Kind kind);
Kind parse_kind(const std::string& text);

/// Problem instance: dimension, offsets a_1 > ... > a_m > 0, and arrangement kind.
/// Coordinates are 0-based in code; x[0] is x_1.
struct ArrangementSpec {
    int n = 1;
    std::vector<Rational> offsets;
    Kind kind = Kind::Catalan;

    int m() const { return static_cast<int>(offsets.size()); }
    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
    /// Hyperplane offsets of one pair, ascending.
    std::vector<Rational> breakpoints() const;
    int interval_count() const { return static_cast<int>(breakpoints().size()) + 1; }
    std::string describe() const;

    bool operator==(const ArrangementSpec& o) const {
        return n == o.n && kind == o.kind && offsets == o.offsets;
    }
};

ArrangementSpec make_spec(Kind kind, int n, std::vector<Rational> offsets);
/// Offsets {m, m-1, ..., 1}.
ArrangementSpec m_catalan_spec(Kind kind, int n, int m);

/// Locus x_i - x_j = c.
struct Hyperplane {
    int i = 0;
    int j = 0;
    Rational c;
};

std::vector<Hyperplane> build_hyperplanes(const ArrangementSpec& spec);

/// x_i - x_j <= bound; a strict inequality carries eps coefficient -1.
struct DifferenceConstraint {
    int i = 0;
    int j = 0;
    EpsRational bound;
};

DifferenceConstraint strictly_less(int i, int j, const Rational& c);     // x_i - x_j < c
DifferenceConstraint strictly_greater(int i, int j, const Rational& c);  // x_i - x_j > c
DifferenceConstraint at_most(int i, int j, const Rational& c);           // x_i - x_j <= c

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> witness;
    /// Constraints forming a negative cycle when infeasible.
    std::vector<DifferenceConstraint> cycle;

    explicit operator bool() const { return feasible; }
};

/// Exact decision plus a rational witness maximizing the uniform slack of the strict
/// constraints (capped at 1), translated so its minimum coordinate is 0.
FeasibilityResult feasible(const std::vector<DifferenceConstraint>& constraints, int n);
bool satisfies(const std::vector<DifferenceConstraint>& constraints, const std::vector<Rational>& x);

struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool contains(const Rational& v) const {
        return (!lo || *lo < v) && (!hi || v < *hi);
    }
};

std::vector<std::pair<int, int>> index_pairs(int n);
int pair_index(int n, int i, int j);

/// A connected component of the complement, keyed by the interval of x_i - x_j for each pair i < j.
struct Region {
    ArrangementSpec spec;
    std::vector<int> intervals;
    std::vector<Rational> witness;

    Interval interval(int i, int j) const;
    std::vector<DifferenceConstraint> constraints() const;

    bool operator==(const Region& o) const { return spec == o.spec && intervals == o.intervals; }
    bool operator<(const Region& o) const { return intervals < o.intervals; }
};

class OnHyperplane : public std::domain_error {
public:
    OnHyperplane(int i, int j, Rational c);
    int i;
    int j;
    Rational c;
};

class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(const std::string& what, std::size_t found) : std::runtime_error(what), found(found) {}
    std::size_t found;
};

struct EnumerationOptions {
    std::size_t max_regions = 2'000'000;
    /// 0 reads RGL_WORKERS from the environment (default 1).
    int workers = 0;
};

int worker_count(int requested);

/// Depth-first over pairs in lexicographic order, intervals left to right.
std::vector<Region> enumerate_regions(const ArrangementSpec& spec, const EnumerationOptions& options = {});

Region region_of_point(const ArrangementSpec& spec, const std::vector<Rational>& point);

/// Witness strictly decreasing: x_1 > x_2 > ... > x_n.
bool in_fundamental_chamber(const Region& region);

/// Dimension of the recession cone, by Fourier-Motzkin on the homogeneous system.
int recession_cone_dim(const Region& region);

class ValidationMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Characteristic polynomial by counting points of F_p^n off the arrangement.
CharPoly char_poly_finite_field(const ArrangementSpec& spec);
/// Number of points of F_p^n avoiding every hyperplane, offsets scaled to integers.
BigInt finite_field_count(const ArrangementSpec& spec, unsigned p);

struct LevelCensus {
    int n = 0;
    std::vector<BigInt> counts;  // index = level, 0..n
    BigInt total = 0;

    BigInt count(int level) const {
        return level >= 0 && level < static_cast<int>(counts.size()) ? counts[level] : BigInt(0);
    }
    bool operator==(const LevelCensus& o) const { return n == o.n && counts == o.counts && total == o.total; }
};

class OracleMismatch : public std::runtime_error {
public:
    OracleMismatch(const std::string& what, Region region) : std::runtime_error(what), region(std::move(region)) {}
    Region region;
};

/// Levels from the Dyck-path / graph models; with use_oracle each is checked against
/// recession_cone_dim. m = 0 falls back to the oracle alone.
LevelCensus level_census(const ArrangementSpec& spec, bool use_oracle = false);
LevelCensus level_census_of(const ArrangementSpec& spec, const std::vector<Region>& regions, bool use_oracle);
/// Census restricted to regions in the fundamental chamber.
LevelCensus chamber_census(const ArrangementSpec& spec, bool use_oracle = false);

}  // namespace rgl
