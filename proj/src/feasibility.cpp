#include "rgl/arrangement.hpp"

#include <algorithm>

namespace rgl {

DifferenceConstraint strictly_less(int i, int j, const Rational& c) { return {i, j, EpsRational(c, -1)}; }

DifferenceConstraint strictly_greater(int i, int j, const Rational& c) { return {j, i, EpsRational(-c, -1)}; }

DifferenceConstraint at_most(int i, int j, const Rational& c) { return {i, j, EpsRational(c, 0)}; }

bool satisfies(const std::vector<DifferenceConstraint>& constraints, const std::vector<Rational>& x) {
    for (const auto& dc : constraints) {
        Rational d = x.at(dc.i) - x.at(dc.j);
        if (dc.bound.eps < 0 ? !(d < dc.bound.real) : !(d <= dc.bound.real)) return false;
    }
    return true;
}

namespace {

template <class W>
struct BellmanFord {
    std::vector<W> dist;
    std::vector<int> pred;  // constraint index of the last relaxation, -1 for the source
    std::vector<int> cycle;
};

// Shortest paths from a virtual source joined to every node by a zero edge.
// Edge of constraint r runs j -> i with weight w[r].
template <class W>
BellmanFord<W> bellman_ford(const std::vector<DifferenceConstraint>& cs, const std::vector<W>& w, int n) {
    BellmanFord<W> bf;
    bf.dist.assign(n, W{});
    bf.pred.assign(n, -1);
    int last = -1;
    for (int round = 0; round <= n; ++round) {
        last = -1;
        for (std::size_t r = 0; r < cs.size(); ++r) {
            W cand = bf.dist[cs[r].j] + w[r];
            if (cand < bf.dist[cs[r].i]) {
                bf.dist[cs[r].i] = cand;
                bf.pred[cs[r].i] = static_cast<int>(r);
                last = cs[r].i;
            }
        }
        if (last < 0) return bf;
    }
    // Still relaxing after n+1 rounds: walk back into the cycle.
    int v = last;
    for (int k = 0; k < n; ++k) v = cs[bf.pred[v]].j;
    int start = v;
    do {
        int r = bf.pred[v];
        bf.cycle.push_back(r);
        v = cs[r].j;
    } while (v != start);
    std::reverse(bf.cycle.begin(), bf.cycle.end());
    return bf;
}

}  // namespace

FeasibilityResult feasible(const std::vector<DifferenceConstraint>& constraints, int n) {
    FeasibilityResult out;
    for (const auto& dc : constraints) {
        if (dc.i < 0 || dc.j < 0 || dc.i >= n || dc.j >= n) throw std::out_of_range("constraint index");
        if (dc.bound.eps > 0) throw std::invalid_argument("positive eps coefficient in a bound");
    }
    std::vector<EpsRational> we;
    we.reserve(constraints.size());
    for (const auto& dc : constraints) we.push_back(dc.bound);
    auto decide = bellman_ford(constraints, we, n);
    if (!decide.cycle.empty()) {
        for (int r : decide.cycle) out.cycle.push_back(constraints[r]);
        return out;
    }

    // Largest uniform slack t <= 1: minimum ratio cycle by Dinkelbach iteration.
    Rational t = 1;
    std::vector<Rational> w(constraints.size());
    BellmanFord<Rational> bf;
    for (;;) {
        for (std::size_t r = 0; r < constraints.size(); ++r)
            w[r] = constraints[r].bound.real + t * constraints[r].bound.eps;
        bf = bellman_ford(constraints, w, n);
        if (bf.cycle.empty()) break;
        Rational real = 0;
        std::int64_t e = 0;
        for (int r : bf.cycle) {
            real += constraints[r].bound.real;
            e += constraints[r].bound.eps;
        }
        if (e >= 0) throw std::logic_error("feasible: non-strict cycle after positive decision");
        t = real / Rational(-e);
    }
    out.feasible = true;
    out.witness = bf.dist;
    if (n > 0) {
        Rational lo = *std::min_element(out.witness.begin(), out.witness.end());
        for (auto& x : out.witness) x -= lo;
    }
    if (!satisfies(constraints, out.witness)) throw std::logic_error("feasible: witness failed verification");
    return out;
}

}  // namespace rgl
