#include "rgl/mcatalan.hpp"

#include <algorithm>
#include <sstream>

namespace rgl {

void MDyckPath::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("m-Dyck path: n and m must be positive");
    if (static_cast<int>(heights.size()) != n) throw std::invalid_argument("m-Dyck path: wrong number of heights");
    if (heights[0] != 0) throw std::invalid_argument("m-Dyck path: h_1 must be 0");
    for (int i = 1; i < n; ++i) {
        if (heights[i] < heights[i - 1]) throw std::invalid_argument("m-Dyck path: heights must not decrease");
        if (heights[i] > m * i) throw std::invalid_argument("m-Dyck path: height above the bound m(i-1)");
    }
}

std::string MDyckPath::steps() const {
    validate();
    std::string s;
    int prev = 0;
    for (int h : heights) {
        s.append(h - prev, 'S');
        s.push_back('E');
        prev = h;
    }
    s.append(m * n - prev, 'S');
    return s;
}

std::vector<int> MDyckPath::multiset() const {
    validate();
    std::vector<int> out;
    for (int i = 2; i <= n; ++i) out.insert(out.end(), heights[i - 1] - heights[i - 2], i);
    return out;
}

std::vector<MDyckPath> enumerate_m_dyck(int n, int m, std::size_t max_paths) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_m_dyck: n and m must be positive");
    std::vector<MDyckPath> out;
    std::vector<int> h(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (out.size() >= max_paths) throw ResourceLimit("m-Dyck path enumeration exceeded its bound", out.size());
            out.push_back({n, m, h});
            return;
        }
        for (int v = h[i - 1]; v <= m * i; ++v) {
            h[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::pair<int, int>> YoungTableau::outer_corners() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if (!filled(i, j) && (i == 1 || filled(i - 1, j)) && (j == 1 || filled(i, j - 1))) out.emplace_back(i, j);
    return out;
}

bool YoungTableau::is_valid() const {
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            if (!filled(i, j)) continue;
            if (i > 1 && (!filled(i - 1, j) || at(i - 1, j) > at(i, j))) return false;
            if (j > 1 && (!filled(i, j - 1) || at(i, j - 1) > at(i, j))) return false;
        }
    return true;
}

std::vector<int> YoungTableau::entries() const {
    std::vector<int> out;
    for (int v : cells)
        if (v) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::string YoungTableau::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= rows; ++i) {
        if (!filled(i, 1)) break;
        if (i > 1) os << '\n';
        for (int j = 1; j <= cols && filled(i, j); ++j) os << (j > 1 ? " " : "") << at(i, j);
    }
    return os.str();
}

namespace {

// The literal corner-scan choice among the current outer corners.
std::pair<int, int> scan_choice(const YoungTableau& t, const std::vector<std::pair<int, int>>& corners) {
    auto [i, j] = corners.front();
    for (std::size_t p = 1; p < corners.size(); ++p) {
        auto [ip, jp] = corners[p];
        bool keep = j - jp >= 1 && t.filled(i, j - jp) && t.at(i, j - jp) == ip;
        if (!keep) {
            i = ip;
            j = jp;
        }
    }
    return {i, j};
}

bool tuple_ok(const YoungTableau& t, int n, int m) {
    DyckTuple tuple;
    try {
        tuple = tableau_to_tuple(t, n);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return static_cast<bool>(tuple_feasible(tuple, m_catalan_spec(Kind::Catalan, n, m)));
}

}  // namespace

InsertionTrace tableau_insert_verbatim(const MDyckPath& path) {
    auto values = path.multiset();
    InsertionTrace trace{YoungTableau(path.n - 1, path.m), {}};
    for (std::size_t k = 0; k < values.size(); ++k) {
        auto corners = trace.tableau.outer_corners();
        if (corners.empty()) throw NoFeasibleTableau("tableau grid is full");
        auto cell = k == 0 ? std::pair{1, 1} : scan_choice(trace.tableau, corners);
        trace.tableau.at(cell.first, cell.second) = values[k];
        trace.positions.push_back(cell);
    }
    return trace;
}

YoungTableau tableau_insert(const MDyckPath& path) {
    auto values = path.multiset();
    const int n = path.n, m = path.m;
    YoungTableau t(n - 1, m);
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == values.size()) return tuple_ok(t, n, m);
        auto corners = t.outer_corners();
        if (corners.empty()) return false;
        std::vector<std::pair<int, int>> order{k == 0 ? std::pair{1, 1} : scan_choice(t, corners)};
        for (const auto& c : corners)
            if (c != order.front()) order.push_back(c);
        for (const auto& [i, j] : order) {
            t.at(i, j) = values[k];
            if (t.is_valid() && self(self, k + 1)) return true;
            t.at(i, j) = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) throw NoFeasibleTableau("no corner sequence yields a feasible tuple");
    return t;
}

std::vector<std::vector<int>> h_matrix(const YoungTableau& t, int n) {
    if (t.rows != n - 1) throw std::invalid_argument("h_matrix: tableau has the wrong number of rows");
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= t.cols; ++k) {
        int c = t.cols - k + 1;
        std::vector<int> row(n, 0);
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= t.rows; ++i)
                if (t.filled(i, c) && t.at(i, c) <= j) ++row[j - 1];
        out.push_back(row);
    }
    return out;
}

DyckTuple tableau_to_tuple(const YoungTableau& t, int n) {
    if (!t.is_valid()) throw std::invalid_argument("tableau_to_tuple: malformed tableau");
    DyckTuple tuple;
    tuple.label = identity_word(n);
    for (const auto& h : h_matrix(t, n)) {
        for (int j = 0; j < n; ++j)
            if (h[j] > j) throw std::invalid_argument("tableau_to_tuple: row is not a Dyck height sequence");
        tuple.paths.push_back(DyckPath::from_heights(h));
    }
    return tuple;
}

Region m_dyck_to_region(const MDyckPath& path, const Word& pi) {
    auto tuple = tableau_to_tuple(tableau_insert(path), path.n);
    if (static_cast<int>(pi.size()) != path.n || !is_permutation(pi))
        throw std::invalid_argument("m_dyck_to_region: label must be a permutation of [n]");
    tuple.label = pi;
    auto result = tuple_feasible(tuple, m_catalan_spec(Kind::Catalan, path.n, path.m));
    if (!result) throw NoFeasibleTableau("tableau tuple is infeasible under the given label");
    return *result.region;
}

}  // namespace rgl
