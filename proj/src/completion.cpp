#include "qk/completion.hpp"

namespace qk {

namespace {

void require_same(const QCategory& a, const QCategory& b, const char* what) {
    if (!same_category(a, b)) throw DomainError(std::string(what) + ": category mismatch");
}

FunctorResult assemble(const CategoryRef& dom, const CategoryRef& cod,
                       std::vector<std::optional<std::size_t>> map) {
    FunctorResult r;
    std::vector<std::size_t> m;
    for (std::size_t c = 0; c < map.size(); ++c) {
        if (!map[c]) {
            r.failing = c;
            return r;
        }
        m.push_back(*map[c]);
    }
    QFunctor g(dom, cod, std::move(m));
    if (!g.validate().ok()) throw Error("internal: representing objects do not form a functor");
    r.value = std::move(g);
    return r;
}

using Constraint = std::function<bool(std::size_t k, const std::vector<Elem>&)>;

// Backtracking over vectors v with v[x] < sizes[x], pruned by pairwise constraints.
void backtrack(const std::vector<std::size_t>& sizes, const Constraint& ok,
               const std::function<bool(const std::vector<Elem>&)>& visit) {
    const std::size_t n = sizes.size();
    std::vector<Elem> v(n, 0);
    if (n == 0) {
        visit(v);
        return;
    }
    std::size_t k = 0;
    while (true) {
        if (v[k] == sizes[k]) {
            v[k] = 0;
            if (k == 0) return;
            --k;
            ++v[k];
            continue;
        }
        if (!ok(k, v)) {
            ++v[k];
            continue;
        }
        if (k + 1 == n) {
            if (!visit(v)) return;
            ++v[k];
        } else {
            ++k;
        }
    }
}

std::vector<Distributor> enumerate_weights(const CategoryRef& ap, std::size_t cap, bool covariant) {
    const auto& A = *ap;
    const auto& q = A.base();
    const std::size_t n = A.size();
    std::vector<Distributor> out;
    for (ObjId t = 0; t < q.object_count(); ++t) {
        auto unit = unit_category(A.base_ref(), t);
        std::vector<std::size_t> sizes(n);
        for (std::size_t x = 0; x < n; ++x)
            sizes[x] = covariant ? q.hom(A.type(x), t).size() : q.hom(t, A.type(x)).size();
        Constraint ok;
        if (!covariant) {
            // A(x2,x)∘φ(x) <= φ(x2) in both directions against earlier objects.
            ok = [&](std::size_t k, const std::vector<Elem>& v) {
                for (std::size_t j = 0; j <= k; ++j) {
                    if (!q.hom(t, A.type(j)).leq(q.compose(t, A.type(k), A.type(j), A.hom(j, k), v[k]), v[j]))
                        return false;
                    if (!q.hom(t, A.type(k)).leq(q.compose(t, A.type(j), A.type(k), A.hom(k, j), v[j]), v[k]))
                        return false;
                }
                return true;
            };
        } else {
            // ψ(x)∘A(x,x2) <= ψ(x2).
            ok = [&](std::size_t k, const std::vector<Elem>& v) {
                for (std::size_t j = 0; j <= k; ++j) {
                    if (!q.hom(A.type(j), t).leq(q.compose(A.type(j), A.type(k), t, v[k], A.hom(k, j)), v[j]))
                        return false;
                    if (!q.hom(A.type(k), t).leq(q.compose(A.type(k), A.type(j), t, v[j], A.hom(j, k)), v[k]))
                        return false;
                }
                return true;
            };
        }
        backtrack(sizes, ok, [&](const std::vector<Elem>& v) {
            if (out.size() >= cap)
                throw CapExceeded(covariant ? "copresheaf enumeration" : "presheaf enumeration",
                                  out.size() + 1, cap);
            out.push_back(covariant ? Distributor(ap, unit, v) : Distributor(unit, ap, v));
            return true;
        });
    }
    return out;
}

ObjId weight_type(const Distributor& phi, bool covariant) {
    return covariant ? phi.cod()->type(0) : phi.dom()->type(0);
}

}  // namespace

// ---------------------------------------------------------------- (co)limits

FunctorResult weighted_colim(const Distributor& weight, const QFunctor& diagram) {
    require_same(*weight.cod(), *diagram.dom(), "weighted colimit");
    const auto& C = *weight.dom();
    const auto& B = *diagram.cod();
    const Distributor lifted = dist_lift(weight, graph_right(diagram));  // B ⇸ C
    std::vector<std::optional<std::size_t>> map(C.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t b = 0; b < B.size() && !map[c]; ++b) {
            if (B.type(b) != C.type(c)) continue;
            bool rep = true;
            for (std::size_t b2 = 0; b2 < B.size() && rep; ++b2) rep = B.hom(b, b2) == lifted.at(c, b2);
            if (rep) map[c] = b;
        }
    return assemble(weight.dom(), diagram.cod(), std::move(map));
}

FunctorResult weighted_lim(const Distributor& weight, const QFunctor& diagram) {
    require_same(*weight.dom(), *diagram.dom(), "weighted limit");
    const auto& C = *weight.cod();
    const auto& A = *diagram.cod();
    const Distributor extended = dist_ext(weight, graph_left(diagram));  // C ⇸ A
    std::vector<std::optional<std::size_t>> map(C.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t a = 0; a < A.size() && !map[c]; ++a) {
            if (A.type(a) != C.type(c)) continue;
            bool rep = true;
            for (std::size_t a2 = 0; a2 < A.size() && rep; ++a2) rep = A.hom(a2, a) == extended.at(a2, c);
            if (rep) map[c] = a;
        }
    return assemble(weight.cod(), diagram.cod(), std::move(map));
}

// ---------------------------------------------------------------- presheaves

std::vector<Distributor> enumerate_presheaves(const CategoryRef& a, std::size_t cap) {
    return enumerate_weights(a, cap, false);
}

std::vector<Distributor> enumerate_copresheaves(const CategoryRef& a, std::size_t cap) {
    return enumerate_weights(a, cap, true);
}

Distributor close_presheaf(const CategoryRef& a, ObjId type, std::vector<Elem> seed) {
    Distributor raw(unit_category(a->base_ref(), type), a, std::move(seed));
    return dist_compose(identity_dist(a), raw);
}

Distributor close_copresheaf(const CategoryRef& a, ObjId type, std::vector<Elem> seed) {
    Distributor raw(a, unit_category(a->base_ref(), type), std::move(seed));
    return dist_compose(raw, identity_dist(a));
}

Distributor representable(const CategoryRef& a, std::size_t x) {
    std::vector<Elem> v(a->size());
    for (std::size_t y = 0; y < a->size(); ++y) v[y] = a->hom(y, x);
    return Distributor(unit_category(a->base_ref(), a->type(x)), a, std::move(v));
}

Distributor corepresentable(const CategoryRef& a, std::size_t x) {
    std::vector<Elem> v(a->size());
    for (std::size_t y = 0; y < a->size(); ++y) v[y] = a->hom(x, y);
    return Distributor(a, unit_category(a->base_ref(), a->type(x)), std::move(v));
}

CompletenessResult cocompleteness(const CategoryRef& a, std::size_t cap) {
    CompletenessResult r;
    r.weights = enumerate_presheaves(a, cap);
    const auto id = identity_functor(a);
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
        auto c = weighted_colim(r.weights[i], id);
        if (!c) {
            r.failing = i;
            return r;
        }
        r.witnesses.push_back((*c)(0));
    }
    r.holds = true;
    return r;
}

CompletenessResult completeness(const CategoryRef& a, std::size_t cap) {
    CompletenessResult r;
    r.weights = enumerate_copresheaves(a, cap);
    const auto id = identity_functor(a);
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
        auto c = weighted_lim(r.weights[i], id);
        if (!c) {
            r.failing = i;
            return r;
        }
        r.witnesses.push_back((*c)(0));
    }
    r.holds = true;
    return r;
}

bool is_cocomplete(const CategoryRef& a, std::size_t cap) { return cocompleteness(a, cap).holds; }
bool is_complete(const CategoryRef& a, std::size_t cap) { return completeness(a, cap).holds; }

Elem presheaf_hom(const Distributor& psi, const Distributor& phi) {
    return dist_lift(psi, phi).at(0, 0);
}

Elem copresheaf_hom(const Distributor& psi, const Distributor& phi) {
    return dist_ext(phi, psi).at(0, 0);
}

namespace {

PresheafCategory build_category(const CategoryRef& a, std::vector<Distributor> ps, bool covariant) {
    PresheafCategory pc;
    pc.source = a;
    pc.covariant = covariant;
    TypedSet objs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const ObjId t = weight_type(ps[i], covariant);
        objs.labels.push_back((covariant ? "psi" : "phi") + std::to_string(i));
        objs.types.push_back(t);
        if (!pc.index.emplace(std::pair{t, ps[i].entries()}, i).second)
            throw DomainError("presheaf listed twice");
    }
    const std::size_t n = ps.size();
    std::vector<Elem> homs(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            homs[x * n + y] = covariant ? copresheaf_hom(ps[x], ps[y]) : presheaf_hom(ps[x], ps[y]);
    pc.category = std::make_shared<const QCategory>(a->base_ref(), std::move(objs), std::move(homs));
    pc.presheaves = std::move(ps);
    return pc;
}

}  // namespace

PresheafCategory presheaf_category(const CategoryRef& a, std::size_t cap) {
    return build_category(a, enumerate_presheaves(a, cap), false);
}

PresheafCategory copresheaf_category(const CategoryRef& a, std::size_t cap) {
    return build_category(a, enumerate_copresheaves(a, cap), true);
}

PresheafCategory presheaf_subcategory(const CategoryRef& a, std::vector<Distributor> presheaves) {
    return build_category(a, std::move(presheaves), false);
}

std::optional<std::size_t> PresheafCategory::find(const Distributor& phi) const {
    auto it = index.find({weight_type(phi, covariant), phi.entries()});
    if (it == index.end()) return std::nullopt;
    return it->second;
}

QFunctor PresheafCategory::functor_of(const Distributor& phi) const {
    const auto& A = *source;
    std::vector<std::size_t> map;
    if (!covariant) {
        require_same(*phi.cod(), A, "presheaf transpose");
        const auto& C = *phi.dom();
        for (std::size_t c = 0; c < C.size(); ++c) {
            std::vector<Elem> col(A.size());
            for (std::size_t x = 0; x < A.size(); ++x) col[x] = phi.at(x, c);
            auto it = index.find({C.type(c), col});
            if (it == index.end()) throw DomainError("transpose column is not an enumerated presheaf");
            map.push_back(it->second);
        }
        return QFunctor(phi.dom(), category, std::move(map));
    }
    require_same(*phi.dom(), A, "copresheaf transpose");
    const auto& C = *phi.cod();
    for (std::size_t c = 0; c < C.size(); ++c) {
        std::vector<Elem> row(A.size());
        for (std::size_t x = 0; x < A.size(); ++x) row[x] = phi.at(c, x);
        auto it = index.find({C.type(c), row});
        if (it == index.end()) throw DomainError("transpose row is not an enumerated copresheaf");
        map.push_back(it->second);
    }
    return QFunctor(phi.cod(), category, std::move(map));
}

Distributor PresheafCategory::distributor_of(const QFunctor& f) const {
    require_same(*f.cod(), *category, "presheaf transpose");
    const auto& A = *source;
    const auto& C = *f.dom();
    if (!covariant) {
        std::vector<Elem> out(A.size() * C.size());
        for (std::size_t x = 0; x < A.size(); ++x)
            for (std::size_t c = 0; c < C.size(); ++c) out[x * C.size() + c] = presheaves[f(c)].at(x, 0);
        return Distributor(f.dom(), source, std::move(out));
    }
    std::vector<Elem> out(C.size() * A.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t x = 0; x < A.size(); ++x) out[c * A.size() + x] = presheaves[f(c)].at(0, x);
    return Distributor(source, f.dom(), std::move(out));
}

QFunctor yoneda(const PresheafCategory& pa) {
    std::vector<std::size_t> map;
    for (std::size_t x = 0; x < pa.source->size(); ++x) {
        auto i = pa.find(representable(pa.source, x));
        if (!i) throw DomainError("representable missing from presheaf category");
        map.push_back(*i);
    }
    return QFunctor(pa.source, pa.category, std::move(map));
}

QFunctor coyoneda(const PresheafCategory& cpa) {
    std::vector<std::size_t> map;
    for (std::size_t x = 0; x < cpa.source->size(); ++x) {
        auto i = cpa.find(corepresentable(cpa.source, x));
        if (!i) throw DomainError("corepresentable missing from copresheaf category");
        map.push_back(*i);
    }
    return QFunctor(cpa.source, cpa.category, std::move(map));
}

QFunctor presheaf_to_copresheaf(const PresheafCategory& pa, const PresheafCategory& cpa) {
    const auto id = identity_dist(pa.source);
    std::vector<std::size_t> map;
    for (const auto& phi : pa.presheaves) {
        auto i = cpa.find(dist_lift(phi, id));
        if (!i) throw DomainError("lifted presheaf missing from copresheaf category");
        map.push_back(*i);
    }
    return QFunctor(pa.category, cpa.category, std::move(map));
}

QFunctor copresheaf_to_presheaf(const PresheafCategory& cpa, const PresheafCategory& pa) {
    const auto id = identity_dist(cpa.source);
    std::vector<std::size_t> map;
    for (const auto& psi : cpa.presheaves) {
        auto i = pa.find(dist_ext(psi, id));
        if (!i) throw DomainError("extended copresheaf missing from presheaf category");
        map.push_back(*i);
    }
    return QFunctor(cpa.category, pa.category, std::move(map));
}

// ------------------------------------------------------------------------ Kan

FunctorResult kan_left_pointwise(const QFunctor& f, const QFunctor& g) {
    require_same(*f.dom(), *g.dom(), "Kan extension");
    return weighted_colim(graph_right(g), f);
}

FunctorResult kan_right_pointwise(const QFunctor& f, const QFunctor& g) {
    require_same(*f.dom(), *g.dom(), "Kan extension");
    return weighted_lim(graph_left(g), f);
}

namespace {

FunctorResult kan_bruteforce(const QFunctor& f, const QFunctor& g, std::size_t cap, bool left) {
    require_same(*f.dom(), *g.dom(), "Kan extension");
    std::vector<QFunctor> cands;
    for_each_functor(g.cod(), f.cod(), cap, [&](const QFunctor& k) {
        const QFunctor kg = compose_functors(k, g);
        if (left ? functor_leq(f, kg) : functor_leq(kg, f)) cands.push_back(k);
        return true;
    });
    FunctorResult r;
    for (const auto& k : cands) {
        bool extremal = true;
        for (const auto& other : cands) {
            if (!(left ? functor_leq(k, other) : functor_leq(other, k))) {
                extremal = false;
                break;
            }
        }
        if (extremal) {
            r.value = k;
            return r;
        }
    }
    return r;
}

}  // namespace

FunctorResult kan_left_bruteforce(const QFunctor& f, const QFunctor& g, std::size_t cap) {
    return kan_bruteforce(f, g, cap, true);
}

FunctorResult kan_right_bruteforce(const QFunctor& f, const QFunctor& g, std::size_t cap) {
    return kan_bruteforce(f, g, cap, false);
}

std::optional<QFunctor> right_adjoint_via_kan(const QFunctor& f) {
    auto k = kan_left_pointwise(identity_functor(f.dom()), f);
    if (!k) return std::nullopt;
    auto preserved = kan_left_pointwise(f, f);
    if (!preserved || !functors_isomorphic(*preserved, compose_functors(f, *k))) return std::nullopt;
    if (!functor_adjoint_pair(f, *k)) return std::nullopt;
    return *k.value;
}

std::optional<QFunctor> left_adjoint_via_kan(const QFunctor& f) {
    auto k = kan_right_pointwise(identity_functor(f.dom()), f);
    if (!k) return std::nullopt;
    auto preserved = kan_right_pointwise(f, f);
    if (!preserved || !functors_isomorphic(*preserved, compose_functors(f, *k))) return std::nullopt;
    if (!functor_adjoint_pair(*k, f)) return std::nullopt;
    return *k.value;
}

QFunctor free_cocompletion_factor(const QFunctor& f, const PresheafCategory& pa, std::size_t cap) {
    require_same(*f.dom(), *pa.source, "free cocompletion");
    if (!is_cocomplete(f.cod(), cap)) throw DomainError("codomain is not cocomplete");
    std::vector<std::size_t> map;
    for (const auto& phi : pa.presheaves) {
        auto c = weighted_colim(phi, f);
        if (!c) throw Error("internal: colimit missing in a cocomplete category");
        map.push_back((*c)(0));
    }
    return QFunctor(pa.category, f.cod(), std::move(map));
}

QFunctor nerve_functor(const QFunctor& f, const PresheafCategory& pa) {
    require_same(*f.dom(), *pa.source, "nerve");
    const auto& A = *f.dom();
    const auto& B = *f.cod();
    std::vector<std::size_t> map;
    for (std::size_t b = 0; b < B.size(); ++b) {
        std::vector<Elem> v(A.size());
        for (std::size_t x = 0; x < A.size(); ++x) v[x] = B.hom(f(x), b);
        auto it = pa.index.find({B.type(b), v});
        if (it == pa.index.end()) throw DomainError("nerve presheaf missing from presheaf category");
        map.push_back(it->second);
    }
    return QFunctor(f.cod(), pa.category, std::move(map));
}

FunctorResult sup_of_functors(const CategoryRef& dom, const CategoryRef& cod,
                              const std::vector<QFunctor>& family) {
    std::vector<Distributor> graphs;
    for (const auto& f : family) {
        require_same(*f.dom(), *dom, "functor sup");
        require_same(*f.cod(), *cod, "functor sup");
        graphs.push_back(graph_left(f));
    }
    return weighted_colim(dist_sup(dom, cod, graphs), identity_functor(cod));
}

std::optional<QFunctor> order_sup_of_functors(const CategoryRef& dom, const CategoryRef& cod,
                                              const std::vector<QFunctor>& family,
                                              std::size_t cap) {
    std::vector<QFunctor> ub;
    for_each_functor(dom, cod, cap, [&](const QFunctor& h) {
        for (const auto& f : family)
            if (!functor_leq(f, h)) return true;
        ub.push_back(h);
        return true;
    });
    for (const auto& h : ub) {
        bool least = true;
        for (const auto& k : ub)
            if (!functor_leq(h, k)) { least = false; break; }
        if (least) return h;
    }
    return std::nullopt;
}

}  // namespace qk
