#pragma once

#include "rgl/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgl {

/// Permutation in one-line notation with values 1..n.
using Word = std::vector<int>;

std::string word_string(const Word& w);
Word parse_word(const std::string& text);
bool is_permutation(const Word& w);
Word identity_word(int n);

/// Staircase lattice path from (0,n) to (n,0) weakly above y = n - x, stored as the
/// plus-counts alpha_1..alpha_n of its sign-matrix rows.
struct DyckPath {
    int n = 0;
    std::vector<int> alpha;

    void validate() const;
    /// E^{n-alpha_1} S E^{alpha_1-alpha_2} S ...
    std::string steps() const;
    static DyckPath from_steps(const std::string& steps);
    /// h_i = number of S steps before the i-th E step.
    std::vector<int> heights() const;
    static DyckPath from_heights(const std::vector<int>& h);

    bool operator==(const DyckPath& o) const { return n == o.n && alpha == o.alpha; }
};

struct LabeledDyckPath {
    DyckPath path;
    Word label;

    bool operator==(const LabeledDyckPath& o) const { return path == o.path && label == o.label; }
};

/// Entry (i,j), 0-based, is '+' iff x_{pi(i)} - x_{pi(j)} > a_k.
struct SignMatrix {
    int n = 0;
    std::vector<char> plus;

    bool at(int i, int j) const { return plus[i * n + j] != 0; }
};

struct DyckTuple {
    std::vector<DyckPath> paths;  // paths[k] belongs to offset a_{k+1}
    Word label;

    bool nested() const;
    bool operator==(const DyckTuple& o) const { return paths == o.paths && label == o.label; }
};

/// Coordinates sorted descending, ties by ascending index.
Word associated_permutation(const std::vector<Rational>& x);

struct SignMatrices {
    Word label;
    std::vector<SignMatrix> matrices;
};

SignMatrices sign_matrices(const Region& region);
SignMatrix sign_matrix(const std::vector<Rational>& x, const Word& label, const Rational& a);
DyckPath matrix_to_dyck(const SignMatrix& m);
DyckTuple dyck_tuple(const Region& region);

/// Number of prime components: 1 + #{c < n : alpha_c = n - c}.
int prime_components(const DyckPath& path);
/// Same count obtained by walking the step string.
int prime_components_by_walk(const DyckPath& path);

class BraidUnsupported : public std::invalid_argument {
public:
    BraidUnsupported() : std::invalid_argument("Dyck-path level model needs at least one offset") {}
};

/// Catalan-type: components of D_1. Semiorder-type: components of G[P_1], checked against D_{1,pi}.
int level(const Region& region);

/// Strict order on 0-based elements: i < j iff x_j - x_i > a.
struct Poset {
    int n = 0;
    std::vector<char> rel;

    bool less(int i, int j) const { return rel[i * n + j] != 0; }
    std::vector<int> down_set(int i) const;  // Lambda
    std::vector<int> up_set(int i) const;    // V
};

Poset interval_order(const std::vector<Rational>& x, const Rational& a);
std::vector<Poset> interval_orders(const Region& region);

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
};

Graph incomparability(const Poset& p);
/// Connected components, each sorted, ordered by smallest element.
std::vector<std::vector<int>> components(const Graph& g);
int omega(const Graph& g);

/// Ordered set of consecutive blocks of a permutation word.
struct PermutationPartition {
    std::vector<std::vector<int>> blocks;

    Word base() const;
    /// Every block of this partition lies inside a block of coarser.
    bool refines(const PermutationPartition& coarser) const;
    /// Same blocks as sets, in the same order.
    bool equivalent(const PermutationPartition& o) const;
    std::string to_string() const;
    static PermutationPartition parse(const std::string& text);

    bool operator==(const PermutationPartition& o) const { return blocks == o.blocks; }
};

PermutationPartition induced_partition(const LabeledDyckPath& d);
PermutationPartition partition_meet(const PermutationPartition& p, const PermutationPartition& q);
/// Meet over k of the partitions induced by D_{k,pi}.
PermutationPartition region_partition(const Region& region);

/// Same down-sets and up-sets in every P_k (1-based elements).
bool autonomous(const Region& region, int a, int b);

/// Witness with each autonomous block equalized, then split by index order.
/// Catalan-type regions return their stored witness.
std::vector<Rational> canonical_witness(const Region& region);

/// All associated permutations of points of a semiorder-type region.
std::vector<Word> label_class(const Region& region);

struct TupleFeasibility {
    std::optional<Region> region;
    std::vector<DifferenceConstraint> cycle;

    explicit operator bool() const { return region.has_value(); }
};

TupleFeasibility tuple_feasible(const DyckTuple& tuple, const ArrangementSpec& spec);

}  // namespace rgl
