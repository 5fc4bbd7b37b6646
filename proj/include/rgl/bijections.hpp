#pragma once

#include "rgl/dyckmodel.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rgl {

/// Permutation in cycle notation. Standard form: each cycle starts with its largest
/// element and cycles are sorted by increasing largest element.
struct CycleForm {
    std::vector<std::vector<int>> cycles;

    int size() const;
    int cycle_count() const { return static_cast<int>(cycles.size()); }
    /// Throws std::invalid_argument unless the cycles cover [n] exactly once.
    void validate() const;
    bool is_standard() const;
    CycleForm standardized() const;
    /// The permutation as a function: image[i-1] = omega(i).
    Word as_function() const;
    static CycleForm from_function(const Word& image);
    std::string to_string() const;
    /// Accepts "(3)(41)(5)" or "(4 3)(6 5 2)".
    static CycleForm parse(const std::string& text);

    bool operator==(const CycleForm& o) const { return cycles == o.cycles; }
};

/// Disjoint blocks covering [n]; order matters.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    std::string to_string() const;
    bool operator==(const OrderedSetPartition& o) const { return blocks == o.blocks; }
};

/// Erase the parentheses of the standard form.
Word fundamental_bijection(const CycleForm& omega);
/// Cut the word before each left-to-right maximum.
CycleForm inverse_fundamental(const Word& word);

/// Replaces the step labelled i by |C_i| steps labelled with the word of C_i.
LabeledDyckPath omega_extension(const LabeledDyckPath& d, const CycleForm& omega);

struct Compression {
    LabeledDyckPath path;
    CycleForm omega;
};

/// Collapses each cycle obtained from the blocks of q into a single step. Requires q <= p(D).
Compression q_compression(const LabeledDyckPath& d, const PermutationPartition& q);

/// The point built from x by spreading the coordinates of each cycle by multiples of eps.
std::vector<Rational> phi_point(const CycleForm& omega, const std::vector<Rational>& x, const Rational& eps);
/// Region of C_{n,A} attached to a permutation with t cycles and a region of C*_{t,A}.
Region phi(const CycleForm& omega, const Region& omega_region);

struct PhiPreimage {
    CycleForm omega;
    Region region;
};

PhiPreimage phi_inverse(const Region& delta);

/// Splits a fundamental-chamber region at the diagonal touches of D_1 into level-1 regions.
std::vector<Region> varphi_ell(const Region& delta);
Region varphi_ell_inverse(const std::vector<Region>& parts);

struct SemiorderSplit {
    OrderedSetPartition partition;
    std::vector<Region> parts;
};

/// Components of the incomparability graph of P_1, highest first, with their restrictions.
SemiorderSplit phi_omega(const Region& region);
Region phi_omega_inverse(const SemiorderSplit& split);

/// All cycle forms on [n] in the order of their fundamental words.
std::vector<CycleForm> all_cycle_forms(int n);

}  // namespace rgl
