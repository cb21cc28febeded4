#include <map>
#include <random>
#include <set>

#include "qk/quantaloid.hpp"

namespace qk {

QuantaloidRef bool2() {
    QuantaloidCandidate c;
    c.objects = {"*"};
    c.homs = {chain_lattice(2)};
    c.compose = {{0, 0, 0, 1}};
    c.identities = {Elem{1}};
    return Quantaloid::make(std::move(c), {QuantaloidOrigin::Kind::bool2, ""});
}

std::optional<std::tuple<Elem, Elem, Elem>> distributivity_failure(const CompleteLattice& l) {
    for (Elem a = 0; a < l.size(); ++a)
        for (Elem b = 0; b < l.size(); ++b)
            for (Elem c = 0; c < l.size(); ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
                    return std::tuple{a, b, c};
    return std::nullopt;
}

QuantaloidRef rel_locale(const CompleteLattice& omega, std::string omega_name) {
    if (auto bad = distributivity_failure(omega)) {
        auto [a, b, c] = *bad;
        throw DomainError("not a locale: " + omega.label(a) + " ∧ (" + omega.label(b) + " ∨ " +
                          omega.label(c) + ") ≠ (" + omega.label(a) + " ∧ " + omega.label(b) +
                          ") ∨ (" + omega.label(a) + " ∧ " + omega.label(c) + ")");
    }
    const std::size_t n = omega.size();
    // members[u*n+v] lists the elements below u ∧ v in index order.
    std::vector<std::vector<Elem>> members(n * n);
    std::vector<std::map<Elem, Elem>> local(n * n);
    QuantaloidCandidate c;
    c.objects = omega.labels();
    c.homs.resize(n * n);
    for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v) {
            const Elem cap = omega.meet(u, v);
            auto& m = members[u * n + v];
            for (Elem w = 0; w < n; ++w)
                if (omega.leq(w, cap)) m.push_back(w);
            std::vector<std::string> labels;
            LatticeCandidate lc;
            for (Elem i = 0; i < m.size(); ++i) {
                labels.push_back(omega.label(m[i]));
                local[u * n + v][m[i]] = i;
            }
            lc.labels = labels;
            lc.leq.assign(m.size() * m.size(), 0);
            for (Elem i = 0; i < m.size(); ++i)
                for (Elem j = 0; j < m.size(); ++j) lc.leq[i * m.size() + j] = omega.leq(m[i], m[j]);
            c.homs[u * n + v] = make_lattice(lc);
        }
    c.compose.resize(n * n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem d = 0; d < n; ++d) {
                const auto& mab = members[a * n + b];
                const auto& mbd = members[b * n + d];
                auto& t = c.compose[(a * n + b) * n + d];
                t.resize(mbd.size() * mab.size());
                for (Elem g = 0; g < mbd.size(); ++g)
                    for (Elem f = 0; f < mab.size(); ++f)
                        t[g * mab.size() + f] = local[a * n + d].at(omega.meet(mbd[g], mab[f]));
            }
    c.identities.resize(n);
    for (Elem u = 0; u < n; ++u) c.identities[u] = local[u * n + u].at(u);
    return Quantaloid::make(std::move(c), {QuantaloidOrigin::Kind::rel_locale, std::move(omega_name)});
}

QuantaloidRef tropical_trunc(std::size_t bound) {
    if (bound == 0) throw DomainError("truncation bound must be positive");
    const std::size_t n = bound + 1;
    LatticeCandidate lc;
    for (std::size_t i = 0; i < n; ++i) lc.labels.push_back(std::to_string(i));
    lc.leq.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) lc.leq[x * n + y] = x >= y;
    QuantaloidCandidate c;
    c.objects = {"*"};
    c.homs = {make_lattice(lc)};
    std::vector<Elem> t(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) t[g * n + f] = std::min(g + f, bound);
    c.compose = {t};
    c.identities = {Elem{0}};
    return Quantaloid::make(std::move(c),
                            {QuantaloidOrigin::Kind::tropical, std::to_string(bound)});
}

QuantaloidRef opposite_quantaloid(const Quantaloid& q) {
    const std::size_t n = q.object_count();
    QuantaloidCandidate c;
    c.objects = q.object_labels();
    c.homs.resize(n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) c.homs[a * n + b] = q.hom(b, a);
    c.compose.resize(n * n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d) {
                const std::size_t sab = q.hom(b, a).size(), sbd = q.hom(d, b).size();
                auto& t = c.compose[(a * n + b) * n + d];
                t.resize(sbd * sab);
                for (Elem g = 0; g < sbd; ++g)
                    for (Elem f = 0; f < sab; ++f) t[g * sab + f] = q.compose(d, b, a, f, g);
            }
    for (ObjId a = 0; a < n; ++a) c.identities.emplace_back(q.identity(a));
    return Quantaloid::make(std::move(c), {QuantaloidOrigin::Kind::opposite, ""});
}

namespace {

using Mask = unsigned;

Mask compose_relations(Mask g, Mask f, std::size_t ka, std::size_t kb, std::size_t kc) {
    Mask out = 0;
    for (std::size_t x = 0; x < ka; ++x)
        for (std::size_t y = 0; y < kb; ++y)
            if (f >> (x * kb + y) & 1u)
                for (std::size_t z = 0; z < kc; ++z)
                    if (g >> (y * kc + z) & 1u) out |= 1u << (x * kc + z);
    return out;
}

Mask identity_relation(std::size_t k) {
    Mask m = 0;
    for (std::size_t x = 0; x < k; ++x) m |= 1u << (x * k + x);
    return m;
}

std::optional<QuantaloidCandidate> draw_relations(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t hom_cap) {
    std::vector<std::size_t> k(n);
    for (auto& ki : k) ki = 1 + rng() % 2;
    std::vector<std::set<Mask>> homs(n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
            auto& h = homs[a * n + b];
            h.insert(0);
            if (a == b) h.insert(identity_relation(k[a]));
            const Mask full = (1u << (k[a] * k[b])) - 1;
            const std::size_t gens = rng() % 3;
            for (std::size_t i = 0; i < gens; ++i) h.insert(static_cast<Mask>(rng() % (full + 1)));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b) {
                auto& h = homs[a * n + b];
                std::vector<Mask> cur(h.begin(), h.end());
                for (Mask x : cur)
                    for (Mask y : cur) changed |= h.insert(x | y).second;
                for (ObjId d = 0; d < n; ++d) {
                    std::vector<Mask> left(homs[b * n + d].begin(), homs[b * n + d].end());
                    for (Mask g : left)
                        for (Mask f : cur)
                            changed |=
                                homs[a * n + d].insert(compose_relations(g, f, k[a], k[b], k[d])).second;
                }
                if (h.size() > hom_cap) return std::nullopt;
            }
    }
    bool interesting = n == 1;
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
            if (homs[a * n + b].size() > hom_cap) return std::nullopt;
            if (a != b && homs[a * n + b].size() > 1) interesting = true;
        }
    if (!interesting) return std::nullopt;

    QuantaloidCandidate c;
    for (ObjId a = 0; a < n; ++a) c.objects.push_back("X" + std::to_string(a));
    std::vector<std::vector<Mask>> elems(n * n);
    std::vector<std::map<Mask, Elem>> index(n * n);
    c.homs.resize(n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
            auto& e = elems[a * n + b];
            e.assign(homs[a * n + b].begin(), homs[a * n + b].end());
            std::stable_sort(e.begin(), e.end(), [](Mask x, Mask y) {
                return __builtin_popcount(x) != __builtin_popcount(y)
                           ? __builtin_popcount(x) < __builtin_popcount(y)
                           : x < y;
            });
            LatticeCandidate lc;
            for (Elem i = 0; i < e.size(); ++i) {
                lc.labels.push_back("r" + std::to_string(e[i]));
                index[a * n + b][e[i]] = i;
            }
            lc.leq.assign(e.size() * e.size(), 0);
            for (Elem i = 0; i < e.size(); ++i)
                for (Elem j = 0; j < e.size(); ++j) lc.leq[i * e.size() + j] = (e[i] & ~e[j]) == 0;
            c.homs[a * n + b] = make_lattice(lc);
        }
    c.compose.resize(n * n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d) {
                const auto& ef = elems[a * n + b];
                const auto& eg = elems[b * n + d];
                auto& t = c.compose[(a * n + b) * n + d];
                t.resize(eg.size() * ef.size());
                for (Elem g = 0; g < eg.size(); ++g)
                    for (Elem f = 0; f < ef.size(); ++f)
                        t[g * ef.size() + f] =
                            index[a * n + d].at(compose_relations(eg[g], ef[f], k[a], k[b], k[d]));
            }
    for (ObjId a = 0; a < n; ++a) c.identities.emplace_back(index[a * n + a].at(identity_relation(k[a])));
    return c;
}

}  // namespace

QuantaloidRef random_quantaloid(std::uint64_t seed, std::size_t object_count,
                                std::size_t hom_cap) {
    if (object_count == 0) throw DomainError("random quantaloid needs at least one object");
    if (hom_cap < 2) throw DomainError("random quantaloid needs hom cap at least 2");
    std::mt19937_64 rng(seed);
    constexpr int kRetries = 2000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        auto c = draw_relations(rng, object_count, hom_cap);
        if (!c) continue;
        return Quantaloid::make(std::move(*c),
                                {QuantaloidOrigin::Kind::random,
                                 std::to_string(seed) + "," + std::to_string(object_count) + "," +
                                     std::to_string(hom_cap)});
    }
    throw Error("random quantaloid: no draw satisfied the hom cap after retries");
}

}  // namespace qk
