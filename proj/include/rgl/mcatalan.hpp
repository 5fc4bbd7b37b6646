#pragma once

#include "rgl/dyckmodel.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rgl {

/// Lattice path from (0, mn) to (n, 0) on or above y = m(n - x), by its height sequence.
struct MDyckPath {
    int n = 1;
    int m = 1;
    std::vector<int> heights;  // h_1 = 0, nondecreasing, h_i <= m(i-1)

    void validate() const;
    std::string steps() const;
    /// {2^{d_2}, ..., n^{d_n}} in nondecreasing order, d_i = h_i - h_{i-1}.
    std::vector<int> multiset() const;

    bool operator==(const MDyckPath& o) const { return n == o.n && m == o.m && heights == o.heights; }
};

/// Lexicographic order of height sequences.
std::vector<MDyckPath> enumerate_m_dyck(int n, int m, std::size_t max_paths = 5'000'000);

/// Filled cells of an (n-1) x m grid; 0 marks an empty cell. Indices are 1-based.
struct YoungTableau {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    YoungTableau() = default;
    YoungTableau(int rows, int cols) : rows(rows), cols(cols), cells(static_cast<std::size_t>(rows) * cols, 0) {}

    int at(int i, int j) const { return cells[(i - 1) * cols + (j - 1)]; }
    int& at(int i, int j) { return cells[(i - 1) * cols + (j - 1)]; }
    bool filled(int i, int j) const { return i >= 1 && j >= 1 && i <= rows && j <= cols && at(i, j) != 0; }
    /// Empty cells whose upper and left neighbours are filled or outside the grid, row by row.
    std::vector<std::pair<int, int>> outer_corners() const;
    /// Filled cells form a Young diagram with weakly increasing rows and columns.
    bool is_valid() const;
    std::vector<int> entries() const;
    std::string to_string() const;

    bool operator==(const YoungTableau& o) const { return rows == o.rows && cols == o.cols && cells == o.cells; }
};

class NoFeasibleTableau : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct InsertionTrace {
    YoungTableau tableau;
    std::vector<std::pair<int, int>> positions;  // cell receiving M(1), M(2), ...
};

/// The corner-scan rule applied literally, with no feasibility check.
InsertionTrace tableau_insert_verbatim(const MDyckPath& path);
/// Corner-scan rule first, then the remaining corners in scan order, until the tuple is feasible.
YoungTableau tableau_insert(const MDyckPath& path);

/// Row k (1-based) counts, for j = 1..n, the entries <= j in column m - k + 1.
std::vector<std::vector<int>> h_matrix(const YoungTableau& t, int n);
/// Unlabelled tuple (identity label) read off h_matrix. Throws if a row is not a Dyck height sequence.
DyckTuple tableau_to_tuple(const YoungTableau& t, int n);

Region m_dyck_to_region(const MDyckPath& path, const Word& pi);

}  // namespace rgl
