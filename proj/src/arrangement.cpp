#include "rgl/arrangement.hpp"

#include "closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace rgl {

std::string to_string(Kind kind) { return kind == Kind::Catalan ? "catalan" : "semiorder"; }

Kind parse_kind(const std::string& text) {
    if (text == "catalan") return Kind::Catalan;
    if (text == "semiorder") return Kind::Semiorder;
    throw std::invalid_argument("unknown arrangement kind: " + text);
}

void ArrangementSpec::validate() const {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (kind == Kind::Semiorder && offsets.empty())
        throw std::invalid_argument("semiorder-type arrangement needs at least one offset");
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        if (offsets[k] <= 0) throw std::invalid_argument("offsets must be positive");
        if (k > 0 && !(offsets[k] < offsets[k - 1]))
            throw std::invalid_argument("offsets must be strictly decreasing");
    }
}

std::vector<Rational> ArrangementSpec::breakpoints() const {
    std::vector<Rational> bp;
    for (const auto& a : offsets) bp.push_back(-a);
    if (kind == Kind::Catalan) bp.push_back(0);
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) bp.push_back(*it);
    return bp;
}

std::string ArrangementSpec::describe() const {
    std::ostringstream os;
    os << (kind == Kind::Catalan ? "C" : "C*") << "_{" << n << ",{";
    for (std::size_t k = 0; k < offsets.size(); ++k) os << (k ? "," : "") << offsets[k].get_str();
    os << "}}";
    return os.str();
}

ArrangementSpec make_spec(Kind kind, int n, std::vector<Rational> offsets) {
    ArrangementSpec s{n, std::move(offsets), kind};
    s.validate();
    return s;
}

ArrangementSpec m_catalan_spec(Kind kind, int n, int m) {
    std::vector<Rational> offs;
    for (int a = m; a >= 1; --a) offs.emplace_back(a);
    return make_spec(kind, n, offs);
}

std::vector<Hyperplane> build_hyperplanes(const ArrangementSpec& spec) {
    spec.validate();
    std::vector<Hyperplane> out;
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) {
            if (spec.kind == Kind::Catalan) out.push_back({i, j, Rational(0)});
            for (const auto& a : spec.offsets) {
                out.push_back({i, j, a});
                out.push_back({j, i, a});
            }
        }
    return out;
}

std::vector<std::pair<int, int>> index_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

int pair_index(int n, int i, int j) {
    if (!(0 <= i && i < j && j < n)) throw std::out_of_range("pair_index needs i < j");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Interval Region::interval(int i, int j) const {
    auto bp = spec.breakpoints();
    int k = intervals.at(pair_index(spec.n, i, j));
    Interval iv;
    if (k > 0) iv.lo = bp[k - 1];
    if (k < static_cast<int>(bp.size())) iv.hi = bp[k];
    return iv;
}

namespace {

void interval_constraints(int i, int j, const std::vector<Rational>& bp, int k,
                          std::vector<DifferenceConstraint>& out) {
    if (k > 0) out.push_back(strictly_greater(i, j, bp[k - 1]));
    if (k < static_cast<int>(bp.size())) out.push_back(strictly_less(i, j, bp[k]));
}

}  // namespace

std::vector<DifferenceConstraint> Region::constraints() const {
    auto bp = spec.breakpoints();
    std::vector<DifferenceConstraint> out;
    int idx = 0;
    for (auto [i, j] : index_pairs(spec.n)) interval_constraints(i, j, bp, intervals[idx++], out);
    return out;
}

OnHyperplane::OnHyperplane(int i_, int j_, Rational c_)
    : std::domain_error("point lies on x_" + std::to_string(i_ + 1) + " - x_" + std::to_string(j_ + 1) +
                        " = " + c_.get_str()),
      i(i_), j(j_), c(std::move(c_)) {}

Region region_of_point(const ArrangementSpec& spec, const std::vector<Rational>& point) {
    spec.validate();
    if (static_cast<int>(point.size()) != spec.n) throw std::invalid_argument("point has wrong dimension");
    auto bp = spec.breakpoints();
    Region r{spec, {}, point};
    for (auto [i, j] : index_pairs(spec.n)) {
        Rational d = point[i] - point[j];
        int k = 0;
        while (k < static_cast<int>(bp.size()) && bp[k] < d) ++k;
        if (k < static_cast<int>(bp.size()) && bp[k] == d) throw OnHyperplane(i, j, bp[k]);
        r.intervals.push_back(k);
    }
    return r;
}

bool in_fundamental_chamber(const Region& region) {
    for (int i = 0; i + 1 < region.spec.n; ++i)
        if (!(region.witness[i] > region.witness[i + 1])) return false;
    return true;
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RGL_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

namespace {

template <class T>
struct Enumerator {
    const ArrangementSpec& spec;
    std::vector<Eps<T>> lower;  // bound for x_j - x_i <= -bp[k-1] - eps, by interval k
    std::vector<Eps<T>> upper;  // bound for x_i - x_j <= bp[k] - eps
    std::vector<std::pair<int, int>> pairs;
    std::size_t max_regions;

    Enumerator(const ArrangementSpec& s, const std::vector<T>& bp, std::size_t limit)
        : spec(s), pairs(index_pairs(s.n)), max_regions(limit) {
        int intervals = static_cast<int>(bp.size()) + 1;
        lower.resize(intervals);
        upper.resize(intervals);
        for (int k = 0; k < intervals; ++k) {
            if (k > 0) lower[k] = Eps<T>(-bp[k - 1], -1);
            if (k < intervals - 1) upper[k] = Eps<T>(bp[k], -1);
        }
    }

    bool assign(detail::ClosureMatrix<T>& cm, int pair, int k) const {
        auto [i, j] = pairs[pair];
        int last = static_cast<int>(lower.size()) - 1;
        if (k > 0 && !cm.add(j, i, lower[k])) return false;
        if (k < last && !cm.add(i, j, upper[k])) return false;
        return true;
    }

    void dfs(const detail::ClosureMatrix<T>& cm, std::vector<int>& choice, int pair,
             std::vector<std::vector<int>>& out, std::size_t& budget) const {
        if (pair == static_cast<int>(pairs.size())) {
            if (budget == 0) throw ResourceLimit("region limit reached", out.size());
            --budget;
            out.push_back(choice);
            return;
        }
        for (int k = 0; k < static_cast<int>(lower.size()); ++k) {
            detail::ClosureMatrix<T> next = cm;
            if (!assign(next, pair, k)) continue;
            choice.push_back(k);
            dfs(next, choice, pair + 1, out, budget);
            choice.pop_back();
        }
    }

    std::vector<std::vector<int>> run(int workers) {
        std::vector<std::vector<int>> out;
        detail::ClosureMatrix<T> root(spec.n);
        if (pairs.empty()) {
            out.emplace_back();
            return out;
        }
        int branches = static_cast<int>(lower.size());
        if (workers <= 1) {
            std::vector<int> choice;
            std::size_t budget = max_regions;
            dfs(root, choice, 0, out, budget);
            return out;
        }
        // Shard the first pair's interval choices; merge in branch order.
        std::vector<std::vector<std::vector<int>>> parts(branches);
        std::vector<std::exception_ptr> errors(branches);
        std::vector<std::thread> pool;
        int next_branch = 0;
        std::mutex lock;
        auto work = [&] {
            for (;;) {
                int k;
                {
                    std::lock_guard<std::mutex> g(lock);
                    if (next_branch >= branches) return;
                    k = next_branch++;
                }
                try {
                    detail::ClosureMatrix<T> cm = root;
                    if (!assign(cm, 0, k)) continue;
                    std::vector<int> choice{k};
                    std::size_t budget = max_regions;
                    dfs(cm, choice, 1, parts[k], budget);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        };
        for (int w = 0; w < std::min(workers, branches); ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        for (int k = 0; k < branches; ++k) {
            if (errors[k]) std::rethrow_exception(errors[k]);
            for (auto& v : parts[k]) out.push_back(std::move(v));
        }
        if (out.size() > max_regions) throw ResourceLimit("region limit reached", out.size());
        return out;
    }
};

// Offsets scaled to int64 when they fit comfortably; otherwise nullopt.
std::optional<std::vector<std::int64_t>> scaled_breakpoints(const std::vector<Rational>& bp) {
    BigInt l = 1;
    for (const auto& q : bp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::int64_t> out;
    const BigInt cap = BigInt(1) << 40;
    for (const auto& q : bp) {
        BigInt v = q.get_num() * (l / q.get_den());
        if (abs(v) > cap) return std::nullopt;
        out.push_back(v.get_si());
    }
    return out;
}

}  // namespace

std::vector<Region> enumerate_regions(const ArrangementSpec& spec, const EnumerationOptions& options) {
    spec.validate();
    auto bp = spec.breakpoints();
    int workers = worker_count(options.workers);
    std::vector<std::vector<int>> keys;
    if (auto scaled = scaled_breakpoints(bp)) {
        Enumerator<std::int64_t> e(spec, *scaled, options.max_regions);
        keys = e.run(workers);
    } else {
        Enumerator<Rational> e(spec, bp, options.max_regions);
        keys = e.run(workers);
    }
    std::vector<Region> regions;
    regions.reserve(keys.size());
    for (auto& key : keys) {
        Region r{spec, std::move(key), {}};
        auto fr = feasible(r.constraints(), spec.n);
        if (!fr) throw std::logic_error("enumerate_regions: leaf failed exact feasibility");
        r.witness = std::move(fr.witness);
        regions.push_back(std::move(r));
    }
    return regions;
}

namespace {

using Row = std::vector<Rational>;  // coefficients, then the right-hand side last

void normalize(Row& row) {
    Rational scale = 0;
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
        if (row[k] != 0) {
            scale = abs(row[k]);
            break;
        }
    if (scale == 0) return;
    for (auto& v : row) v /= scale;
}

// Is {rows . d <= rhs} feasible? Exact Fourier-Motzkin elimination.
bool fm_feasible(std::vector<Row> rows, int n) {
    for (int var = 0; var < n; ++var) {
        std::vector<Row> pos, neg, rest;
        for (auto& r : rows) {
            if (r[var] > 0) pos.push_back(std::move(r));
            else if (r[var] < 0) neg.push_back(std::move(r));
            else rest.push_back(std::move(r));
        }
        std::vector<Row> next;
        auto push = [&](Row r) {
            normalize(r);
            Row key(r.begin(), r.end() - 1);
            for (auto& existing : next)
                if (std::equal(key.begin(), key.end(), existing.begin())) {
                    if (r.back() < existing.back()) existing.back() = r.back();
                    return;
                }
            next.push_back(std::move(r));
        };
        for (auto& r : rest) push(std::move(r));
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Row c(p.size());
                Rational fp = 1 / p[var];
                Rational fq = 1 / -q[var];
                for (std::size_t k = 0; k < p.size(); ++k) c[k] = p[k] * fp + q[k] * fq;
                c[var] = 0;
                push(std::move(c));
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.back() < 0) return false;
    return true;
}

int rank_of(std::vector<std::vector<Rational>> m, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int recession_cone_dim(const Region& region) {
    const int n = region.spec.n;
    std::vector<Row> cone;
    for (const auto& dc : region.constraints()) {
        Row r(n + 1, Rational(0));
        r[dc.i] += 1;
        r[dc.j] -= 1;
        cone.push_back(std::move(r));
    }
    std::vector<std::vector<Rational>> implicit;
    for (std::size_t k = 0; k < cone.size(); ++k) {
        std::vector<Row> sys = cone;
        Row strict = cone[k];
        strict[n] = -1;
        sys.push_back(strict);
        if (!fm_feasible(sys, n)) implicit.emplace_back(cone[k].begin(), cone[k].end() - 1);
    }
    return n - rank_of(implicit, n);
}

}  // namespace rgl
