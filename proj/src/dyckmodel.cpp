#include "rgl/dyckmodel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rgl {

std::string word_string(const Word& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v >= 1 && v <= 9; });
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) os << ' ';
        os << w[i];
    }
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.find_first_of(" ,") != std::string::npos) {
        std::string tok;
        for (char ch : text) {
            if (ch == ' ' || ch == ',') {
                if (!tok.empty()) w.push_back(std::stoi(tok));
                tok.clear();
            } else {
                tok.push_back(ch);
            }
        }
        if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("malformed word: " + text);
            w.push_back(ch - '0');
        }
    }
    if (!is_permutation(w)) throw std::invalid_argument("not a permutation: " + text);
    return w;
}

bool is_permutation(const Word& w) {
    std::vector<char> seen(w.size() + 1, 0);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Word identity_word(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

void DyckPath::validate() const {
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("Dyck path: wrong length");
    for (int i = 0; i < n; ++i) {
        if (alpha[i] < 0 || alpha[i] > n - 1 - i) throw std::invalid_argument("Dyck path: row count out of range");
        if (i > 0 && alpha[i] > alpha[i - 1]) throw std::invalid_argument("Dyck path: row counts must not increase");
    }
}

std::string DyckPath::steps() const {
    std::string s;
    int prev = n;
    for (int i = 0; i < n; ++i) {
        s.append(prev - alpha[i], 'E');
        s.push_back('S');
        prev = alpha[i];
    }
    return s;
}

DyckPath DyckPath::from_steps(const std::string& steps) {
    DyckPath d;
    int east = 0;
    for (char ch : steps) {
        if (ch == 'E') ++east;
        else if (ch == 'S') d.alpha.push_back(east);
        else throw std::invalid_argument("Dyck path: unknown step");
    }
    d.n = static_cast<int>(d.alpha.size());
    if (east != d.n) throw std::invalid_argument("Dyck path: unequal step counts");
    for (auto& a : d.alpha) a = d.n - a;
    d.validate();
    return d;
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> h(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < n; ++r)
            if (alpha[r] >= n - i + 1) ++h[i - 1];
    return h;
}

DyckPath DyckPath::from_heights(const std::vector<int>& h) {
    DyckPath d;
    d.n = static_cast<int>(h.size());
    for (int r = 1; r <= d.n; ++r)
        d.alpha.push_back(static_cast<int>(std::count_if(h.begin(), h.end(), [r](int v) { return v >= r; })));
    d.validate();
    return d;
}

bool DyckTuple::nested() const {
    for (std::size_t k = 1; k < paths.size(); ++k)
        for (int i = 0; i < paths[k].n; ++i)
            if (paths[k - 1].alpha[i] > paths[k].alpha[i]) return false;
    return true;
}

Word associated_permutation(const std::vector<Rational>& x) {
    Word w = identity_word(static_cast<int>(x.size()));
    std::stable_sort(w.begin(), w.end(), [&](int a, int b) { return x[a - 1] > x[b - 1]; });
    return w;
}

SignMatrix sign_matrix(const std::vector<Rational>& x, const Word& label, const Rational& a) {
    SignMatrix m;
    m.n = static_cast<int>(label.size());
    m.plus.assign(m.n * m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.plus[i * m.n + j] = x[label[i] - 1] - x[label[j] - 1] > a;
    return m;
}

DyckPath matrix_to_dyck(const SignMatrix& m) {
    DyckPath d;
    d.n = m.n;
    for (int i = 0; i < m.n; ++i) {
        int count = 0;
        bool seen_plus = false;
        for (int j = 0; j < m.n; ++j) {
            if (m.at(i, j)) {
                seen_plus = true;
                ++count;
            } else if (seen_plus) {
                throw std::invalid_argument("sign matrix row is not of the form -...-+...+");
            }
        }
        d.alpha.push_back(count);
    }
    d.validate();
    return d;
}

namespace {

DyckTuple tuple_at(const Region& region, const std::vector<Rational>& x) {
    DyckTuple t;
    t.label = associated_permutation(x);
    for (const auto& a : region.spec.offsets) t.paths.push_back(matrix_to_dyck(sign_matrix(x, t.label, a)));
    return t;
}

PermutationPartition partition_of(const DyckTuple& t) {
    PermutationPartition p{{t.label}};
    for (const auto& path : t.paths) p = partition_meet(p, induced_partition({path, t.label}));
    return p;
}

Rational min_slack(const std::vector<Rational>& x, const std::vector<Rational>& breakpoints) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& v) {
        Rational a = abs(v);
        if (a != 0 && (!best || a < *best)) best = a;
    };
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = 0; q < x.size(); ++q) {
            if (p == q) continue;
            consider(x[p] - x[q]);
            for (const auto& c : breakpoints) consider(x[p] - x[q] - c);
        }
    return best ? *best : Rational(1);
}

}  // namespace

std::vector<Rational> canonical_witness(const Region& region) {
    if (region.spec.kind == Kind::Catalan) return region.witness;
    const int n = region.spec.n;
    std::vector<Rational> x = region.witness;
    for (const auto& block : partition_of(tuple_at(region, region.witness)).blocks) {
        Rational mean = 0;
        for (int v : block) mean += x[v - 1];
        mean /= Rational(static_cast<long>(block.size()));
        for (int v : block) x[v - 1] = mean;
    }
    Rational eta = min_slack(x, region.spec.breakpoints()) / Rational(2L * n * n);
    for (int i = 0; i < n; ++i) x[i] += Rational(n - 1 - i) * eta;
    return x;
}

SignMatrices sign_matrices(const Region& region) {
    auto x = canonical_witness(region);
    SignMatrices out;
    out.label = associated_permutation(x);
    for (const auto& a : region.spec.offsets) out.matrices.push_back(sign_matrix(x, out.label, a));
    return out;
}

DyckTuple dyck_tuple(const Region& region) { return tuple_at(region, canonical_witness(region)); }

int prime_components(const DyckPath& path) {
    int touches = 0;
    for (int c = 1; c <= path.n - 1; ++c)
        if (path.alpha[c - 1] == path.n - c) ++touches;
    return 1 + touches;
}

int prime_components_by_walk(const DyckPath& path) {
    int x = 0, y = path.n, comps = 0;
    for (char ch : path.steps()) {
        if (ch == 'E') ++x;
        else --y;
        if (ch == 'S' && y == path.n - x) ++comps;
    }
    return comps;
}

std::vector<int> Poset::down_set(int i) const {
    std::vector<int> out;
    for (int l = 0; l < n; ++l)
        if (less(l, i)) out.push_back(l);
    return out;
}

std::vector<int> Poset::up_set(int i) const {
    std::vector<int> out;
    for (int l = 0; l < n; ++l)
        if (less(i, l)) out.push_back(l);
    return out;
}

Poset interval_order(const std::vector<Rational>& x, const Rational& a) {
    Poset p;
    p.n = static_cast<int>(x.size());
    p.rel.assign(p.n * p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) p.rel[i * p.n + j] = x[j] - x[i] > a;
    return p;
}

std::vector<Poset> interval_orders(const Region& region) {
    std::vector<Poset> out;
    for (const auto& a : region.spec.offsets) out.push_back(interval_order(region.witness, a));
    return out;
}

Graph incomparability(const Poset& p) {
    Graph g;
    g.n = p.n;
    g.adj.assign(p.n, {});
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != j && !p.less(i, j) && !p.less(j, i)) g.adj[i].push_back(j);
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

int omega(const Graph& g) { return static_cast<int>(components(g).size()); }

int level(const Region& region) {
    if (region.spec.offsets.empty()) throw BraidUnsupported();
    auto t = dyck_tuple(region);
    int by_path = prime_components(t.paths.front());
    if (region.spec.kind == Kind::Catalan) return by_path;
    int by_graph = omega(incomparability(interval_order(region.witness, region.spec.offsets.front())));
    if (by_graph != by_path) throw std::logic_error("level: omega(G_1) disagrees with l(D_1,pi)");
    return by_graph;
}

Word PermutationPartition::base() const {
    Word w;
    for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool PermutationPartition::refines(const PermutationPartition& coarser) const {
    if (base() != coarser.base()) return false;
    std::vector<int> id_coarse;
    for (std::size_t b = 0; b < coarser.blocks.size(); ++b)
        id_coarse.insert(id_coarse.end(), coarser.blocks[b].size(), static_cast<int>(b));
    std::size_t pos = 0;
    for (const auto& b : blocks) {
        for (std::size_t k = 1; k < b.size(); ++k)
            if (id_coarse[pos + k] != id_coarse[pos]) return false;
        pos += b.size();
    }
    return true;
}

bool PermutationPartition::equivalent(const PermutationPartition& o) const {
    if (blocks.size() != o.blocks.size()) return false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto x = blocks[b], y = o.blocks[b];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

std::string PermutationPartition::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += "|";
        s += word_string(blocks[b]);
    }
    return s;
}

PermutationPartition PermutationPartition::parse(const std::string& text) {
    PermutationPartition p;
    std::string cur;
    auto flush = [&] {
        std::vector<int> block;
        for (char ch : cur) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("malformed partition: " + text);
            block.push_back(ch - '0');
        }
        if (block.empty()) throw std::invalid_argument("empty block in partition: " + text);
        p.blocks.push_back(block);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '|') flush();
        else cur.push_back(ch);
    }
    flush();
    if (!is_permutation(p.base())) throw std::invalid_argument("partition is not over a permutation: " + text);
    return p;
}

PermutationPartition induced_partition(const LabeledDyckPath& d) {
    const int n = d.path.n;
    if (static_cast<int>(d.label.size()) != n || !is_permutation(d.label))
        throw std::invalid_argument("induced_partition: label mismatch");
    // Positions i, j share a block iff their E steps share a row and their S steps a column.
    auto h = d.path.heights();
    PermutationPartition p;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || h[i] != h[i - 1] || d.path.alpha[i] != d.path.alpha[i - 1]) p.blocks.emplace_back();
        p.blocks.back().push_back(d.label[i]);
    }
    return p;
}

PermutationPartition partition_meet(const PermutationPartition& p, const PermutationPartition& q) {
    Word base = p.base();
    if (base != q.base()) throw std::invalid_argument("partition_meet: different base permutations");
    auto ids = [](const PermutationPartition& r) {
        std::vector<int> id;
        for (std::size_t b = 0; b < r.blocks.size(); ++b) id.insert(id.end(), r.blocks[b].size(), static_cast<int>(b));
        return id;
    };
    auto ip = ids(p), iq = ids(q);
    PermutationPartition out;
    for (std::size_t k = 0; k < base.size(); ++k) {
        if (k == 0 || ip[k] != ip[k - 1] || iq[k] != iq[k - 1]) out.blocks.emplace_back();
        out.blocks.back().push_back(base[k]);
    }
    return out;
}

PermutationPartition region_partition(const Region& region) { return partition_of(dyck_tuple(region)); }

bool autonomous(const Region& region, int a, int b) {
    for (const auto& p : interval_orders(region))
        if (p.down_set(a - 1) != p.down_set(b - 1) || p.up_set(a - 1) != p.up_set(b - 1)) return false;
    return true;
}

std::vector<Word> label_class(const Region& region) {
    auto part = region_partition(region);
    std::vector<Word> out;
    std::vector<std::vector<int>> blocks = part.blocks;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    auto rec = [&](auto&& self, std::size_t idx, Word& acc) -> void {
        if (idx == blocks.size()) {
            out.push_back(acc);
            return;
        }
        std::vector<int> b = blocks[idx];
        do {
            std::size_t size = acc.size();
            acc.insert(acc.end(), b.begin(), b.end());
            self(self, idx + 1, acc);
            acc.resize(size);
        } while (std::next_permutation(b.begin(), b.end()));
    };
    Word acc;
    rec(rec, 0, acc);
    std::sort(out.begin(), out.end());
    return out;
}

TupleFeasibility tuple_feasible(const DyckTuple& tuple, const ArrangementSpec& spec) {
    spec.validate();
    const int n = spec.n;
    if (static_cast<int>(tuple.paths.size()) != spec.m()) throw std::invalid_argument("tuple_feasible: wrong tuple size");
    if (static_cast<int>(tuple.label.size()) != n || !is_permutation(tuple.label))
        throw std::invalid_argument("tuple_feasible: bad label");
    for (const auto& p : tuple.paths) {
        if (p.n != n) throw std::invalid_argument("tuple_feasible: path length mismatch");
        p.validate();
    }
    const Word& pi = tuple.label;
    std::vector<DifferenceConstraint> cs;
    for (int i = 0; i + 1 < n; ++i) {
        if (spec.kind == Kind::Catalan) cs.push_back(strictly_greater(pi[i] - 1, pi[i + 1] - 1, 0));
        else cs.push_back(at_most(pi[i + 1] - 1, pi[i] - 1, 0));
    }
    for (int k = 0; k < spec.m(); ++k) {
        const auto& alpha = tuple.paths[k].alpha;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool plus = j + 1 > n - alpha[i];
                if (plus) cs.push_back(strictly_greater(pi[i] - 1, pi[j] - 1, spec.offsets[k]));
                else cs.push_back(strictly_less(pi[i] - 1, pi[j] - 1, spec.offsets[k]));
            }
    }
    TupleFeasibility out;
    auto fr = feasible(cs, n);
    if (!fr) {
        out.cycle = std::move(fr.cycle);
        return out;
    }
    out.region = region_of_point(spec, fr.witness);
    return out;
}

}  // namespace rgl
