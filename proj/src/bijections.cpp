#include "rgl/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rgl {

int CycleForm::size() const {
    int n = 0;
    for (const auto& c : cycles) n += static_cast<int>(c.size());
    return n;
}

void CycleForm::validate() const {
    Word all;
    for (const auto& c : cycles) {
        if (c.empty()) throw std::invalid_argument("cycle form: empty cycle");
        all.insert(all.end(), c.begin(), c.end());
    }
    if (!is_permutation(all)) throw std::invalid_argument("cycle form: cycles must cover [n] exactly once");
}

bool CycleForm::is_standard() const {
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        if (cycles[k].front() != *std::max_element(cycles[k].begin(), cycles[k].end())) return false;
        if (k > 0 && cycles[k - 1].front() > cycles[k].front()) return false;
    }
    return true;
}

CycleForm CycleForm::standardized() const {
    validate();
    CycleForm out = *this;
    for (auto& c : out.cycles) std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
    std::sort(out.cycles.begin(), out.cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

Word CycleForm::as_function() const {
    validate();
    Word image(size());
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) image[c[k] - 1] = c[(k + 1) % c.size()];
    return image;
}

CycleForm CycleForm::from_function(const Word& image) {
    if (!is_permutation(image)) throw std::invalid_argument("cycle form: not a permutation");
    std::vector<char> seen(image.size() + 1, 0);
    CycleForm out;
    for (int s = 1; s <= static_cast<int>(image.size()); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int v = s; !seen[v]; v = image[v - 1]) {
            seen[v] = 1;
            c.push_back(v);
        }
        out.cycles.push_back(c);
    }
    return out.standardized();
}

std::string CycleForm::to_string() const {
    std::string s;
    for (const auto& c : cycles) s += "(" + word_string(c) + ")";
    return s;
}

CycleForm CycleForm::parse(const std::string& text) {
    CycleForm out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw std::invalid_argument("cycle form: expected '(' in " + text);
        auto close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("cycle form: unbalanced parentheses in " + text);
        std::string body = text.substr(pos + 1, close - pos - 1);
        std::vector<int> c;
        if (body.find(' ') != std::string::npos) {
            std::istringstream is(body);
            for (int v; is >> v;) c.push_back(v);
        } else {
            for (char ch : body) {
                if (ch < '1' || ch > '9') throw std::invalid_argument("cycle form: bad entry in " + text);
                c.push_back(ch - '0');
            }
        }
        out.cycles.push_back(c);
        pos = close + 1;
    }
    out.validate();
    return out;
}

std::string OrderedSetPartition::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += " > ";
        s += "{";
        for (std::size_t k = 0; k < blocks[b].size(); ++k) s += (k ? "," : "") + std::to_string(blocks[b][k]);
        s += "}";
    }
    return s;
}

Word fundamental_bijection(const CycleForm& omega) {
    omega.validate();
    if (!omega.is_standard()) throw std::invalid_argument("fundamental bijection needs the standard cycle form");
    Word w;
    for (const auto& c : omega.cycles) w.insert(w.end(), c.begin(), c.end());
    return w;
}

namespace {

// Cycles of an arbitrary word of distinct values, cut before left-to-right maxima.
std::vector<std::vector<int>> cut_at_maxima(const std::vector<int>& word) {
    std::vector<std::vector<int>> out;
    int best = 0;
    for (int v : word) {
        if (out.empty() || v > best) {
            out.emplace_back();
            best = v;
        }
        out.back().push_back(v);
    }
    return out;
}

int block_size_sum(const std::vector<int>& sizes, int from) {
    return std::accumulate(sizes.begin() + from, sizes.end(), 0);
}

Rational min_positive_slack(const std::vector<Rational>& x, const std::vector<Rational>& offsets) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& v) {
        Rational a = abs(v);
        if (a != 0 && (!best || a < *best)) best = a;
    };
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = 0; q < x.size(); ++q) {
            if (p == q) continue;
            consider(x[p] - x[q]);
            for (const auto& a : offsets) consider(x[p] - x[q] - a);
        }
    return best ? *best : Rational(1);
}

std::vector<Rational> restrict(const std::vector<Rational>& x, const std::vector<int>& indices) {
    std::vector<Rational> out;
    for (int i : indices) out.push_back(x[i - 1]);
    return out;
}

// Concatenates blocks of coordinates so every later block lies below the previous one by more than a_1.
std::vector<Rational> stack_blocks(const std::vector<std::vector<int>>& indices,
                                   const std::vector<std::vector<Rational>>& coords, const Rational& a1, int n) {
    std::vector<Rational> x(n);
    std::optional<Rational> floor;
    for (std::size_t b = 0; b < indices.size(); ++b) {
        const auto& c = coords[b];
        Rational hi = *std::max_element(c.begin(), c.end());
        Rational lo = *std::min_element(c.begin(), c.end());
        Rational shift = floor ? *floor - a1 - 1 - hi : Rational(0);
        for (std::size_t k = 0; k < c.size(); ++k) x[indices[b][k] - 1] = c[k] + shift;
        floor = lo + shift;
    }
    return x;
}

}  // namespace

CycleForm inverse_fundamental(const Word& word) {
    if (!is_permutation(word)) throw std::invalid_argument("inverse fundamental bijection needs a permutation");
    return CycleForm{cut_at_maxima(word)};
}

LabeledDyckPath omega_extension(const LabeledDyckPath& d, const CycleForm& omega) {
    d.path.validate();
    const int k = d.path.n;
    if (omega.cycle_count() != k) throw std::invalid_argument("omega extension: cycle count must equal path size");
    if (!omega.is_standard()) throw std::invalid_argument("omega extension: cycle form must be standard");
    omega.validate();
    std::vector<int> sizes;
    LabeledDyckPath out;
    for (int b = 0; b < k; ++b) {
        const auto& c = omega.cycles[d.label[b] - 1];
        sizes.push_back(static_cast<int>(c.size()));
        out.label.insert(out.label.end(), c.begin(), c.end());
    }
    out.path.n = omega.size();
    for (int b = 0; b < k; ++b) {
        // Columns b' > k - alpha_b are '+' in the short path.
        int alpha = block_size_sum(sizes, k - d.path.alpha[b]);
        out.path.alpha.insert(out.path.alpha.end(), sizes[b], alpha);
    }
    out.path.validate();
    return out;
}

Compression q_compression(const LabeledDyckPath& d, const PermutationPartition& q) {
    d.path.validate();
    if (q.base() != d.label) throw std::invalid_argument("q compression: partition is not over the path label");
    if (!q.refines(induced_partition(d))) throw std::invalid_argument("q compression: q must refine p(D)");
    const int n = d.path.n;
    std::vector<std::vector<int>> segments;
    std::vector<int> first;
    int pos = 0;
    for (const auto& block : q.blocks) {
        for (auto& c : cut_at_maxima(block)) {
            first.push_back(pos);
            pos += static_cast<int>(c.size());
            segments.push_back(std::move(c));
        }
    }
    Compression out;
    out.omega = CycleForm{segments}.standardized();
    const int t = static_cast<int>(segments.size());
    out.path.path.n = t;
    for (int c = 0; c < t; ++c) {
        auto it = std::find(out.omega.cycles.begin(), out.omega.cycles.end(), segments[c]);
        out.path.label.push_back(static_cast<int>(it - out.omega.cycles.begin()) + 1);
        int plus = 0;
        for (int c2 = c + 1; c2 < t; ++c2)
            if (first[c2] + 1 > n - d.path.alpha[first[c]]) ++plus;
        out.path.path.alpha.push_back(plus);
    }
    out.path.path.validate();
    return out;
}

std::vector<Rational> phi_point(const CycleForm& omega, const std::vector<Rational>& x, const Rational& eps) {
    if (static_cast<int>(x.size()) != omega.cycle_count())
        throw std::invalid_argument("phi: point dimension must equal the number of cycles");
    auto std_omega = omega.standardized();
    std::vector<Rational> y(std_omega.size());
    for (std::size_t j = 0; j < std_omega.cycles.size(); ++j) {
        const auto& c = std_omega.cycles[j];
        const long nj = static_cast<long>(c.size());
        for (long s = 1; s <= nj; ++s) y[c[s - 1] - 1] = x[j] + Rational(nj - s) * eps;
    }
    return y;
}

Region phi(const CycleForm& omega, const Region& omega_region) {
    const auto& spec = omega_region.spec;
    if (spec.kind != Kind::Semiorder) throw std::invalid_argument("phi: expected a semiorder-type region");
    auto x = canonical_witness(omega_region);
    const int n = omega.size();
    Rational eps = std::min(spec.offsets.back(), min_positive_slack(x, spec.offsets)) / Rational(n + 1);
    auto y = phi_point(omega, x, eps);
    return region_of_point(make_spec(Kind::Catalan, n, spec.offsets), y);
}

PhiPreimage phi_inverse(const Region& delta) {
    const auto& spec = delta.spec;
    if (spec.kind != Kind::Catalan) throw std::invalid_argument("phi inverse: expected a Catalan-type region");
    auto q = region_partition(delta);
    std::vector<std::vector<int>> segments;
    for (const auto& block : q.blocks)
        for (auto& c : cut_at_maxima(block)) segments.push_back(std::move(c));
    PhiPreimage out{CycleForm{segments}.standardized(), {}};
    std::vector<Rational> x;
    for (const auto& c : out.omega.cycles) x.push_back(delta.witness[c.back() - 1]);
    out.region = region_of_point(make_spec(Kind::Semiorder, out.omega.cycle_count(), spec.offsets), x);
    return out;
}

std::vector<Region> varphi_ell(const Region& delta) {
    if (!in_fundamental_chamber(delta)) throw std::invalid_argument("varphi: region is not in the fundamental chamber");
    const auto& spec = delta.spec;
    if (spec.offsets.empty()) throw BraidUnsupported();
    auto d1 = dyck_tuple(delta).paths.front();
    const int n = spec.n;
    std::vector<Region> parts;
    int start = 1;
    for (int c = 1; c <= n; ++c) {
        if (c < n && d1.alpha[c - 1] != n - c) continue;
        std::vector<int> idx(c - start + 1);
        std::iota(idx.begin(), idx.end(), start);
        parts.push_back(region_of_point(make_spec(spec.kind, c - start + 1, spec.offsets), restrict(delta.witness, idx)));
        start = c + 1;
    }
    return parts;
}

Region varphi_ell_inverse(const std::vector<Region>& parts) {
    if (parts.empty()) throw std::invalid_argument("varphi inverse: no parts");
    const auto& first = parts.front().spec;
    std::vector<std::vector<int>> indices;
    std::vector<std::vector<Rational>> coords;
    int n = 0;
    for (const auto& p : parts) {
        if (p.spec.kind != first.kind || p.spec.offsets != first.offsets)
            throw std::invalid_argument("varphi inverse: parts belong to different arrangements");
        if (!in_fundamental_chamber(p)) throw std::invalid_argument("varphi inverse: part is not in the fundamental chamber");
        std::vector<int> idx(p.spec.n);
        std::iota(idx.begin(), idx.end(), n + 1);
        n += p.spec.n;
        indices.push_back(idx);
        coords.push_back(p.witness);
    }
    auto spec = make_spec(first.kind, n, first.offsets);
    return region_of_point(spec, stack_blocks(indices, coords, first.offsets.front(), n));
}

SemiorderSplit phi_omega(const Region& region) {
    const auto& spec = region.spec;
    if (spec.offsets.empty()) throw BraidUnsupported();
    const auto& x = region.witness;
    auto comps = components(incomparability(interval_order(x, spec.offsets.front())));
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) { return x[a.front()] > x[b.front()]; });
    SemiorderSplit out;
    for (auto& c : comps) {
        for (auto& v : c) ++v;
        out.parts.push_back(region_of_point(make_spec(spec.kind, static_cast<int>(c.size()), spec.offsets), restrict(x, c)));
        out.partition.blocks.push_back(std::move(c));
    }
    return out;
}

Region phi_omega_inverse(const SemiorderSplit& split) {
    if (split.parts.empty() || split.parts.size() != split.partition.blocks.size())
        throw std::invalid_argument("phi_omega inverse: blocks and parts differ in number");
    const auto& first = split.parts.front().spec;
    std::vector<std::vector<Rational>> coords;
    Word all;
    for (std::size_t b = 0; b < split.parts.size(); ++b) {
        const auto& block = split.partition.blocks[b];
        if (split.parts[b].spec.n != static_cast<int>(block.size()))
            throw std::invalid_argument("phi_omega inverse: part dimension differs from block size");
        coords.push_back(split.parts[b].witness);
        all.insert(all.end(), block.begin(), block.end());
    }
    if (!is_permutation(all)) throw std::invalid_argument("phi_omega inverse: blocks must cover [n]");
    const int n = static_cast<int>(all.size());
    return region_of_point(make_spec(first.kind, n, first.offsets),
                           stack_blocks(split.partition.blocks, coords, first.offsets.front(), n));
}

std::vector<CycleForm> all_cycle_forms(int n) {
    std::vector<CycleForm> out;
    Word w = identity_word(n);
    do {
        out.push_back(inverse_fundamental(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace rgl
