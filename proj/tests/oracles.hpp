#pragma once

// Independent references: everything here is computed from the order relation
// and the raw composition tables only, never from the library's joins or residuals.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qk/dsl.hpp"

namespace oracle {

using qk::Elem;
using qk::ObjId;

inline std::string fixture_path(const std::string& name) { return std::string(QK_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"antichain.qk", "bool2.qk",      "chain-vs-doubled.qk", "random.qk",
                                                   "rel3.qk",      "reldiamond.qk", "tropical3.qk", "lax.qk"};
    return names;
}

// Throws with the diagnostics when the fixture does not parse.
inline qk::QkDocument load(const std::string& name) {
    auto r = qk::parse(read_text(fixture_path(name)));
    if (!r.ok()) {
        std::string msg = "fixture " + name + " does not parse";
        for (const auto& d : r.diagnostics) msg += "\n" + d.format(name);
        throw std::runtime_error(msg);
    }
    return std::move(*r.document);
}

// Least upper bound by scanning the order: the upper bound below all others.
inline std::optional<Elem> join(const qk::CompleteLattice& l, const std::vector<Elem>& s) {
    for (Elem u = 0; u < l.size(); ++u) {
        bool upper = true;
        for (Elem x : s) upper = upper && l.leq(x, u);
        if (!upper) continue;
        bool least = true;
        for (Elem v = 0; v < l.size() && least; ++v) {
            bool vu = true;
            for (Elem x : s) vu = vu && l.leq(x, v);
            if (vu && !l.leq(u, v)) least = false;
        }
        if (least) return u;
    }
    return std::nullopt;
}

inline std::optional<Elem> meet(const qk::CompleteLattice& l, const std::vector<Elem>& s) {
    for (Elem u = 0; u < l.size(); ++u) {
        bool lower = true;
        for (Elem x : s) lower = lower && l.leq(u, x);
        if (!lower) continue;
        bool greatest = true;
        for (Elem v = 0; v < l.size() && greatest; ++v) {
            bool vl = true;
            for (Elem x : s) vl = vl && l.leq(v, x);
            if (vl && !l.leq(v, u)) greatest = false;
        }
        if (greatest) return u;
    }
    return std::nullopt;
}

// [g,h] for g: b → c, h: a → c: the join of every x: a → b with g∘x <= h.
inline Elem lift(const qk::Quantaloid& q, ObjId a, ObjId b, ObjId c, Elem g, Elem h) {
    std::vector<Elem> xs;
    for (Elem x = 0; x < q.hom(a, b).size(); ++x)
        if (q.hom(a, c).leq(q.compose(a, b, c, g, x), h)) xs.push_back(x);
    return *join(q.hom(a, b), xs);
}

// {f,h} for f: a → b, h: a → c: the join of every y: b → c with y∘f <= h.
inline Elem ext(const qk::Quantaloid& q, ObjId a, ObjId b, ObjId c, Elem f, Elem h) {
    std::vector<Elem> ys;
    for (Elem y = 0; y < q.hom(b, c).size(); ++y)
        if (q.hom(a, c).leq(q.compose(a, b, c, y, f), h)) ys.push_back(y);
    return *join(q.hom(b, c), ys);
}

// Down-closed subsets of the preorder le[x*n+y] (x <= y).
inline std::vector<std::vector<bool>> downsets(const std::vector<bool>& le, std::size_t n) {
    std::vector<std::vector<bool>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = mask >> i & 1;
        bool closed = true;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (s[y] && le[x * n + y] && !s[x]) closed = false;
        if (closed) out.push_back(std::move(s));
    }
    return out;
}

// Preorder of a category over bool2: x <= y iff A(x,y) = 1, read off the hom labels only.
inline std::vector<bool> bool2_order(const qk::QCategory& a) {
    const auto n = a.size();
    std::vector<bool> le(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) le[x * n + y] = a.base().hom(0, 0).label(a.hom(x, y)) == "1";
    return le;
}

// Capped min-plus product, (m ⊗ n)(i,k) = min_j min(m(i,j) + n(j,k), cap).
inline std::vector<std::size_t> minplus(const std::vector<std::size_t>& m, const std::vector<std::size_t>& n,
                                        std::size_t dim, std::size_t cap) {
    std::vector<std::size_t> out(dim * dim, cap);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) out[i * dim + k] = std::min(out[i * dim + k], std::min(m[i * dim + j] + n[j * dim + k], cap));
    return out;
}

// colim(Θ, F) for Θ: C ⇸ A and F: A → B, straight from the defining equation
// B(G c, b) = ⋀_a [Θ(a,c), B(F a, b)], with residuals and meets found by scanning.
// Returns, per object c, every object of B that works.
inline std::vector<std::vector<std::size_t>> colim_candidates(const qk::Distributor& theta, const qk::QFunctor& f) {
    const auto& C = *theta.dom();
    const auto& A = *theta.cod();
    const auto& B = *f.cod();
    const auto& q = A.base();
    std::vector<std::vector<std::size_t>> out(C.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t g = 0; g < B.size(); ++g) {
            if (B.type(g) != C.type(c)) continue;
            bool ok = true;
            for (std::size_t b = 0; b < B.size() && ok; ++b) {
                std::vector<Elem> parts;
                for (std::size_t a = 0; a < A.size(); ++a)
                    parts.push_back(lift(q, B.type(b), C.type(c), A.type(a), theta.at(a, c), B.hom(f(a), b)));
                const auto m = meet(q.hom(B.type(b), C.type(c)), parts);
                ok = m && *m == B.hom(g, b);
            }
            if (ok) out[c].push_back(g);
        }
    return out;
}

}  // namespace oracle
