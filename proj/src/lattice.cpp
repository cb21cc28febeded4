#include "qk/lattice.hpp"

#include <algorithm>
#include <set>

namespace qk {

namespace {

struct OrderView {
    std::size_t n;
    const std::vector<char>& leq;
    bool le(Elem x, Elem y) const { return leq[x * n + y] != 0; }
};

void check_shape(const LatticeCandidate& c) {
    if (c.labels.empty()) throw StructuralError("lattice has no elements");
    std::set<std::string> seen;
    for (const auto& l : c.labels) {
        if (l.empty()) throw StructuralError("lattice element with empty label");
        if (!seen.insert(l).second) throw StructuralError("duplicate lattice element '" + l + "'");
    }
    if (c.leq.size() != c.labels.size() * c.labels.size())
        throw StructuralError("order matrix has wrong shape");
}

ValidationReport check_partial_order(const LatticeCandidate& c) {
    ValidationReport r;
    const std::size_t n = c.labels.size();
    OrderView o{n, c.leq};
    for (Elem x = 0; x < n; ++x)
        if (!o.le(x, x)) r.add("not reflexive at " + c.labels[x]);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y)
            if (o.le(x, y) && o.le(y, x))
                r.add("not antisymmetric: " + c.labels[x] + " <= " + c.labels[y] + " and " +
                      c.labels[y] + " <= " + c.labels[x]);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!o.le(x, y)) continue;
            for (Elem z = 0; z < n; ++z)
                if (o.le(y, z) && !o.le(x, z))
                    r.add("not transitive: " + c.labels[x] + " <= " + c.labels[y] + " <= " +
                          c.labels[z]);
        }
    return r;
}

// Least element of `candidates` w.r.t. the order, if any.
std::optional<Elem> least_of(const OrderView& o, const std::vector<Elem>& candidates) {
    for (Elem u : candidates) {
        bool least = true;
        for (Elem v : candidates)
            if (!o.le(u, v)) { least = false; break; }
        if (least) return u;
    }
    return std::nullopt;
}

std::optional<Elem> greatest_of(const OrderView& o, const std::vector<Elem>& candidates) {
    for (Elem u : candidates) {
        bool greatest = true;
        for (Elem v : candidates)
            if (!o.le(v, u)) { greatest = false; break; }
        if (greatest) return u;
    }
    return std::nullopt;
}

std::optional<Elem> sup_of(const OrderView& o, const std::vector<Elem>& subset) {
    std::vector<Elem> ub;
    for (Elem y = 0; y < o.n; ++y)
        if (std::all_of(subset.begin(), subset.end(), [&](Elem x) { return o.le(x, y); }))
            ub.push_back(y);
    return least_of(o, ub);
}

std::optional<Elem> inf_of(const OrderView& o, const std::vector<Elem>& subset) {
    std::vector<Elem> lb;
    for (Elem y = 0; y < o.n; ++y)
        if (std::all_of(subset.begin(), subset.end(), [&](Elem x) { return o.le(y, x); }))
            lb.push_back(y);
    return greatest_of(o, lb);
}

std::vector<Elem> subset_of_mask(std::size_t n, unsigned long long mask) {
    std::vector<Elem> s;
    for (Elem i = 0; i < n; ++i)
        if (mask >> i & 1ULL) s.push_back(i);
    return s;
}

// Masks ordered by size, then lexicographically by member indices.
std::vector<unsigned long long> masks_in_scan_order(std::size_t n) {
    std::vector<unsigned long long> masks(1ULL << n);
    for (unsigned long long m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [n](auto a, auto b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        if (pa != pb) return pa < pb;
        return subset_of_mask(n, a) < subset_of_mask(n, b);
    });
    return masks;
}

}  // namespace

std::string format_subset(const std::vector<std::string>& labels, std::span<const Elem> subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += labels.at(subset[i]);
    }
    return s + "}";
}

ValidationReport check_completeness_exhaustive(const LatticeCandidate& c) {
    check_shape(c);
    const std::size_t n = c.labels.size();
    if (n > 20) throw CapExceeded("exhaustive subset scan", std::size_t{1} << 20, 1u << 20);
    OrderView o{n, c.leq};
    ValidationReport r;
    for (auto mask : masks_in_scan_order(n)) {
        auto s = subset_of_mask(n, mask);
        if (!sup_of(o, s))
            r.add("subset " + format_subset(c.labels, s) + " has no least upper bound");
        if (!inf_of(o, s))
            r.add("subset " + format_subset(c.labels, s) + " has no greatest lower bound");
    }
    return r;
}

ValidationReport check_completeness_binary(const LatticeCandidate& c) {
    check_shape(c);
    const std::size_t n = c.labels.size();
    OrderView o{n, c.leq};
    ValidationReport r;
    if (!sup_of(o, {})) r.add("subset {} has no least upper bound");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y) {
            std::vector<Elem> s{x, y};
            if (!sup_of(o, s))
                r.add("subset " + format_subset(c.labels, s) + " has no least upper bound");
        }
    return r;
}

LatticeValidation validate_lattice(const LatticeCandidate& c) {
    check_shape(c);
    LatticeValidation out;
    out.report = check_partial_order(c);
    if (!out.report.ok()) return out;
    const std::size_t n = c.labels.size();
    out.report.merge(n <= kExhaustiveLatticeScan ? check_completeness_exhaustive(c)
                                                 : check_completeness_binary(c));
    if (!out.report.ok()) return out;

    OrderView o{n, c.leq};
    CompleteLattice l;
    l.labels_ = c.labels;
    l.leq_ = c.leq;
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            l.join_[x * n + y] = *sup_of(o, {x, y});
            l.meet_[x * n + y] = *inf_of(o, {x, y});
        }
    l.bottom_ = *sup_of(o, {});
    l.top_ = *inf_of(o, {});
    out.lattice = std::move(l);
    return out;
}

std::optional<Elem> CompleteLattice::find(const std::string& label) const {
    for (Elem e = 0; e < labels_.size(); ++e)
        if (labels_[e] == label) return e;
    return std::nullopt;
}

Elem CompleteLattice::join(std::span<const Elem> xs) const noexcept {
    Elem acc = bottom_;
    for (Elem x : xs) acc = join(acc, x);
    return acc;
}

Elem CompleteLattice::meet(std::span<const Elem> xs) const noexcept {
    Elem acc = top_;
    for (Elem x : xs) acc = meet(acc, x);
    return acc;
}

std::vector<std::pair<Elem, Elem>> CompleteLattice::covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    const std::size_t n = size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (x == y || !leq(x, y)) continue;
            bool between = false;
            for (Elem z = 0; z < n && !between; ++z)
                between = z != x && z != y && leq(x, z) && leq(z, y);
            if (!between) out.emplace_back(x, y);
        }
    return out;
}

CompleteLattice make_lattice(const LatticeCandidate& candidate) {
    auto v = validate_lattice(candidate);
    if (!v.report.ok()) throw ValidationError(v.report);
    return std::move(*v.lattice);
}

CompleteLattice lattice_from_order(std::vector<std::string> labels,
                                   const std::vector<std::pair<Elem, Elem>>& generating) {
    const std::size_t n = labels.size();
    LatticeCandidate c{std::move(labels), std::vector<char>(n * n, 0)};
    for (Elem x = 0; x < n; ++x) c.leq[x * n + x] = 1;
    for (auto [x, y] : generating) {
        if (x >= n || y >= n) throw StructuralError("order pair refers to unknown element");
        c.leq[x * n + y] = 1;
    }
    for (Elem k = 0; k < n; ++k)
        for (Elem i = 0; i < n; ++i)
            if (c.leq[i * n + k])
                for (Elem j = 0; j < n; ++j)
                    if (c.leq[k * n + j]) c.leq[i * n + j] = 1;
    return make_lattice(c);
}

CompleteLattice chain_lattice(std::vector<std::string> labels) {
    std::vector<std::pair<Elem, Elem>> gen;
    for (Elem i = 0; i + 1 < labels.size(); ++i) gen.emplace_back(i, i + 1);
    return lattice_from_order(std::move(labels), gen);
}

CompleteLattice chain_lattice(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return chain_lattice(std::move(labels));
}

CompleteLattice powerset_lattice(std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < n; ++m) {
        std::string l;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1) l += static_cast<char>('a' + i);
        labels.push_back(l.empty() ? "0" : l);
    }
    std::vector<std::pair<Elem, Elem>> gen;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if ((x & y) == x) gen.emplace_back(x, y);
    return lattice_from_order(std::move(labels), gen);
}

CompleteLattice opposite_lattice(const CompleteLattice& l) {
    const std::size_t n = l.size();
    CompleteLattice op;
    op.labels_ = l.labels_;
    op.leq_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) op.leq_[x * n + y] = l.leq_[y * n + x];
    op.join_ = l.meet_;
    op.meet_ = l.join_;
    op.bottom_ = l.top_;
    op.top_ = l.bottom_;
    return op;
}

bool preserves_joins(const CompleteLattice& s, const CompleteLattice& t,
                     std::span<const Elem> map) {
    if (map.size() != s.size()) return false;
    for (Elem v : map)
        if (v >= t.size()) return false;
    if (map[s.bottom()] != t.bottom()) return false;
    for (Elem x = 0; x < s.size(); ++x)
        for (Elem y = 0; y < s.size(); ++y)
            if (map[s.join(x, y)] != t.join(map[x], map[y])) return false;
    return true;
}

bool preserves_joins_exhaustive(const CompleteLattice& s, const CompleteLattice& t,
                                std::span<const Elem> map) {
    if (map.size() != s.size()) return false;
    const std::size_t n = s.size();
    if (n > 20) throw CapExceeded("exhaustive join check", std::size_t{1} << n, 1u << 20);
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        auto sub = subset_of_mask(n, mask);
        std::vector<Elem> img;
        for (Elem x : sub) img.push_back(map[x]);
        if (map[s.join(sub)] != t.join(img)) return false;
    }
    return true;
}

}  // namespace qk
