#include "qk/enriched.hpp"

#include <algorithm>

namespace qk {

namespace {

void require_base(const Quantaloid& a, const Quantaloid& b, const char* what) {
    if (!same_base(a, b)) throw DomainError(std::string(what) + ": categories over different bases");
}

void require_same(const QCategory& a, const QCategory& b, const char* what) {
    if (!same_category(a, b)) throw DomainError(std::string(what) + ": category mismatch");
}

}  // namespace

// ---------------------------------------------------------------- QCategory

QCategory::QCategory(QuantaloidRef base, TypedSet objects, std::vector<Elem> homs)
    : base_(std::move(base)), objects_(std::move(objects)), homs_(std::move(homs)) {
    if (!base_) throw StructuralError("category without base");
    const std::size_t n = objects_.size();
    if (objects_.types.size() != n) throw StructuralError("typed set has mismatched type list");
    for (ObjId t : objects_.types)
        if (t >= base_->object_count()) throw StructuralError("object type outside the base");
    if (homs_.size() != n * n) throw StructuralError("hom matrix has wrong shape");
    for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t a = 0; a < n; ++a)
            if (homs_[a2 * n + a] >= base_->hom(type(a), type(a2)).size())
                throw StructuralError("hom entry outside its hom lattice");
}

CategoryRef QCategory::make(QuantaloidRef base, TypedSet objects, std::vector<Elem> homs) {
    auto c = std::make_shared<const QCategory>(std::move(base), std::move(objects), std::move(homs));
    auto r = c->validate();
    if (!r.ok()) throw ValidationError(r);
    return c;
}

ValidationReport QCategory::validate() const {
    ValidationReport r;
    const auto& q = base();
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        const auto& l = q.hom(type(a), type(a));
        if (!l.leq(q.identity(type(a)), hom(a, a)))
            r.add("identity inequality fails at " + label(a));
    }
    for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t a = 0; a < n; ++a) {
                Elem c = q.compose(type(a), type(a1), type(a2), hom(a2, a1), hom(a1, a));
                if (!q.hom(type(a), type(a2)).leq(c, hom(a2, a)))
                    r.add("composition inequality fails: hom(" + label(a2) + "," + label(a1) +
                          ")∘hom(" + label(a1) + "," + label(a) + ") ≰ hom(" + label(a2) + "," +
                          label(a) + ")");
            }
    return r;
}

std::optional<std::size_t> QCategory::find(const std::string& l) const {
    for (std::size_t a = 0; a < size(); ++a)
        if (objects_.labels[a] == l) return a;
    return std::nullopt;
}

bool QCategory::operator==(const QCategory& o) const {
    if (this == &o) return true;
    return objects_ == o.objects_ && homs_ == o.homs_ && same_base(*base_, *o.base_);
}

bool same_category(const QCategory& a, const QCategory& b) { return &a == &b || a == b; }

CategoryRef unit_category(const QuantaloidRef& base, ObjId t) {
    if (t >= base->object_count()) throw DomainError("unit category of unknown object");
    return std::make_shared<const QCategory>(
        base, TypedSet{{"*" + base->object_label(t)}, {t}}, std::vector<Elem>{base->identity(t)});
}

// -------------------------------------------------------------- Distributor

Distributor::Distributor(CategoryRef dom, CategoryRef cod, std::vector<Elem> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (!dom_ || !cod_) throw StructuralError("distributor without domain or codomain");
    require_base(dom_->base(), cod_->base(), "distributor");
    if (entries_.size() != dom_->size() * cod_->size())
        throw StructuralError("distributor matrix has wrong shape");
    for (std::size_t b = 0; b < cod_->size(); ++b)
        for (std::size_t a = 0; a < dom_->size(); ++a)
            if (at(b, a) >= base().hom(dom_->type(a), cod_->type(b)).size())
                throw StructuralError("distributor entry outside its hom lattice");
}

ValidationReport Distributor::validate() const {
    ValidationReport r;
    const auto& q = base();
    const auto& A = *dom_;
    const auto& B = *cod_;
    for (std::size_t b2 = 0; b2 < B.size(); ++b2)
        for (std::size_t b = 0; b < B.size(); ++b)
            for (std::size_t a = 0; a < A.size(); ++a) {
                Elem c = q.compose(A.type(a), B.type(b), B.type(b2), B.hom(b2, b), at(b, a));
                if (!q.hom(A.type(a), B.type(b2)).leq(c, at(b2, a)))
                    r.add("left action fails: hom(" + B.label(b2) + "," + B.label(b) + ")∘(" +
                          B.label(b) + "," + A.label(a) + ") ≰ (" + B.label(b2) + "," +
                          A.label(a) + ")");
            }
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a)
            for (std::size_t a2 = 0; a2 < A.size(); ++a2) {
                Elem c = q.compose(A.type(a2), A.type(a), B.type(b), at(b, a), A.hom(a, a2));
                if (!q.hom(A.type(a2), B.type(b)).leq(c, at(b, a2)))
                    r.add("right action fails: (" + B.label(b) + "," + A.label(a) + ")∘hom(" +
                          A.label(a) + "," + A.label(a2) + ") ≰ (" + B.label(b) + "," +
                          A.label(a2) + ")");
            }
    return r;
}

bool Distributor::operator==(const Distributor& o) const {
    return entries_ == o.entries_ && same_category(*dom_, *o.dom_) && same_category(*cod_, *o.cod_);
}

Distributor make_distributor(CategoryRef dom, CategoryRef cod, std::vector<Elem> entries) {
    Distributor d(std::move(dom), std::move(cod), std::move(entries));
    auto r = d.validate();
    if (!r.ok()) throw ValidationError(r);
    return d;
}

// ----------------------------------------------------------------- QFunctor

QFunctor::QFunctor(CategoryRef dom, CategoryRef cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (!dom_ || !cod_) throw StructuralError("functor without domain or codomain");
    require_base(dom_->base(), cod_->base(), "functor");
    if (map_.size() != dom_->size()) throw StructuralError("functor map has wrong length");
    for (auto b : map_)
        if (b >= cod_->size()) throw StructuralError("functor maps outside its codomain");
}

ValidationReport QFunctor::validate() const {
    ValidationReport r;
    const auto& A = *dom_;
    const auto& B = *cod_;
    const auto& q = A.base();
    for (std::size_t a = 0; a < A.size(); ++a)
        if (A.type(a) != B.type(map_[a]))
            r.add("functor changes the type of " + A.label(a));
    if (!r.ok()) return r;
    for (std::size_t a2 = 0; a2 < A.size(); ++a2)
        for (std::size_t a = 0; a < A.size(); ++a)
            if (!q.hom(A.type(a), A.type(a2)).leq(A.hom(a2, a), B.hom(map_[a2], map_[a])))
                r.add("functor inequality fails: hom(" + A.label(a2) + "," + A.label(a) +
                      ") ≰ hom(" + B.label(map_[a2]) + "," + B.label(map_[a]) + ")");
    return r;
}

bool QFunctor::operator==(const QFunctor& o) const {
    return map_ == o.map_ && same_category(*dom_, *o.dom_) && same_category(*cod_, *o.cod_);
}

QFunctor make_functor(CategoryRef dom, CategoryRef cod, std::vector<std::size_t> map) {
    QFunctor f(std::move(dom), std::move(cod), std::move(map));
    auto r = f.validate();
    if (!r.ok()) throw ValidationError(r);
    return f;
}

QFunctor identity_functor(const CategoryRef& a) {
    std::vector<std::size_t> m(a->size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
    return QFunctor(a, a, std::move(m));
}

QFunctor compose_functors(const QFunctor& g, const QFunctor& f) {
    require_same(*f.cod(), *g.dom(), "functor composition");
    std::vector<std::size_t> m(f.dom()->size());
    for (std::size_t a = 0; a < m.size(); ++a) m[a] = g(f(a));
    return QFunctor(f.dom(), g.cod(), std::move(m));
}

// ------------------------------------------------------- distributor calculus

Distributor dist_compose(const Distributor& psi, const Distributor& phi) {
    require_same(*phi.cod(), *psi.dom(), "distributor composition");
    const auto& q = phi.base();
    const auto& A = *phi.dom();
    const auto& B = *phi.cod();
    const auto& C = *psi.cod();
    std::vector<Elem> out(C.size() * A.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t a = 0; a < A.size(); ++a) {
            const auto& l = q.hom(A.type(a), C.type(c));
            Elem acc = l.bottom();
            for (std::size_t b = 0; b < B.size(); ++b)
                acc = l.join(acc, q.compose(A.type(a), B.type(b), C.type(c), psi.at(c, b), phi.at(b, a)));
            out[c * A.size() + a] = acc;
        }
    return Distributor(phi.dom(), psi.cod(), std::move(out));
}

Distributor identity_dist(const CategoryRef& a) {
    return Distributor(a, a, a->hom_matrix());
}

Distributor dist_bottom(const CategoryRef& dom, const CategoryRef& cod) {
    require_base(dom->base(), cod->base(), "bottom distributor");
    std::vector<Elem> out(dom->size() * cod->size());
    for (std::size_t b = 0; b < cod->size(); ++b)
        for (std::size_t a = 0; a < dom->size(); ++a)
            out[b * dom->size() + a] = dom->base().hom(dom->type(a), cod->type(b)).bottom();
    return Distributor(dom, cod, std::move(out));
}

Distributor dist_join(const Distributor& x, const Distributor& y) {
    require_same(*x.dom(), *y.dom(), "distributor join");
    require_same(*x.cod(), *y.cod(), "distributor join");
    std::vector<Elem> out(x.entries().size());
    const auto& A = *x.dom();
    const auto& B = *x.cod();
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a)
            out[b * A.size() + a] = x.base().hom(A.type(a), B.type(b)).join(x.at(b, a), y.at(b, a));
    return Distributor(x.dom(), x.cod(), std::move(out));
}

Distributor dist_sup(const CategoryRef& dom, const CategoryRef& cod,
                     const std::vector<Distributor>& family) {
    Distributor acc = dist_bottom(dom, cod);
    for (const auto& d : family) acc = dist_join(acc, d);
    return acc;
}

bool dist_leq(const Distributor& x, const Distributor& y) {
    require_same(*x.dom(), *y.dom(), "distributor comparison");
    require_same(*x.cod(), *y.cod(), "distributor comparison");
    const auto& A = *x.dom();
    const auto& B = *x.cod();
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a)
            if (!x.base().hom(A.type(a), B.type(b)).leq(x.at(b, a), y.at(b, a))) return false;
    return true;
}

Distributor dist_lift(const Distributor& psi, const Distributor& theta) {
    require_same(*psi.cod(), *theta.cod(), "distributor lifting");
    const auto& q = psi.base();
    const auto& A = *theta.dom();
    const auto& B = *psi.dom();
    const auto& C = *psi.cod();
    std::vector<Elem> out(B.size() * A.size());
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a) {
            const auto& l = q.hom(A.type(a), B.type(b));
            Elem acc = l.top();
            for (std::size_t c = 0; c < C.size(); ++c)
                acc = l.meet(acc, q.lift(A.type(a), B.type(b), C.type(c), psi.at(c, b), theta.at(c, a)));
            out[b * A.size() + a] = acc;
        }
    return Distributor(theta.dom(), psi.dom(), std::move(out));
}

Distributor dist_ext(const Distributor& phi, const Distributor& theta) {
    require_same(*phi.dom(), *theta.dom(), "distributor extension");
    const auto& q = phi.base();
    const auto& A = *phi.dom();
    const auto& B = *phi.cod();
    const auto& C = *theta.cod();
    std::vector<Elem> out(C.size() * B.size());
    for (std::size_t c = 0; c < C.size(); ++c)
        for (std::size_t b = 0; b < B.size(); ++b) {
            const auto& l = q.hom(B.type(b), C.type(c));
            Elem acc = l.top();
            for (std::size_t a = 0; a < A.size(); ++a)
                acc = l.meet(acc, q.ext(A.type(a), B.type(b), C.type(c), phi.at(b, a), theta.at(c, a)));
            out[c * B.size() + b] = acc;
        }
    return Distributor(phi.cod(), theta.cod(), std::move(out));
}

Distributor graph_left(const QFunctor& f) {
    const auto& A = *f.dom();
    const auto& B = *f.cod();
    std::vector<Elem> out(B.size() * A.size());
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a) out[b * A.size() + a] = B.hom(b, f(a));
    return Distributor(f.dom(), f.cod(), std::move(out));
}

Distributor graph_right(const QFunctor& f) {
    const auto& A = *f.dom();
    const auto& B = *f.cod();
    std::vector<Elem> out(A.size() * B.size());
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b) out[a * B.size() + b] = B.hom(f(a), b);
    return Distributor(f.cod(), f.dom(), std::move(out));
}

bool check_dist_adjunction(const Distributor& phi, const Distributor& psi) {
    require_same(*phi.cod(), *psi.dom(), "distributor adjunction");
    require_same(*psi.cod(), *phi.dom(), "distributor adjunction");
    return dist_leq(identity_dist(phi.dom()), dist_compose(psi, phi)) &&
           dist_leq(dist_compose(phi, psi), identity_dist(phi.cod()));
}

bool functor_adjoint_pair(const QFunctor& f, const QFunctor& g) {
    require_same(*f.dom(), *g.cod(), "functor adjunction");
    require_same(*f.cod(), *g.dom(), "functor adjunction");
    return graph_right(f).entries() == graph_left(g).entries();
}

// ---------------------------------------------------------- order and equivalence

std::vector<char> underlying_order(const QCategory& a) {
    const std::size_t n = a.size();
    std::vector<char> out(n * n, 0);
    const auto& q = a.base();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            out[x * n + y] = a.type(x) == a.type(y) &&
                             q.hom(a.type(y), a.type(x)).leq(q.identity(a.type(x)), a.hom(x, y));
    return out;
}

bool objects_isomorphic(const QCategory& a, std::size_t x, std::size_t y) {
    if (a.type(x) != a.type(y)) return false;
    const auto& q = a.base();
    const auto& l = q.hom(a.type(x), a.type(x));
    const Elem one = q.identity(a.type(x));
    return l.leq(one, a.hom(x, y)) && l.leq(one, a.hom(y, x));
}

bool functor_leq(const QFunctor& f, const QFunctor& g) {
    if (!same_category(*f.dom(), *g.dom()) || !same_category(*f.cod(), *g.cod())) return false;
    return dist_leq(graph_left(f), graph_left(g));
}

bool functors_isomorphic(const QFunctor& f, const QFunctor& g) {
    return functor_leq(f, g) && functor_leq(g, f);
}

bool fully_faithful(const QFunctor& f) {
    const auto& A = *f.dom();
    const auto& B = *f.cod();
    for (std::size_t a2 = 0; a2 < A.size(); ++a2)
        for (std::size_t a = 0; a < A.size(); ++a)
            if (A.hom(a2, a) != B.hom(f(a2), f(a))) return false;
    return true;
}

bool essentially_surjective(const QFunctor& f) {
    const auto& A = *f.dom();
    const auto& B = *f.cod();
    for (std::size_t b = 0; b < B.size(); ++b) {
        bool hit = false;
        for (std::size_t a = 0; a < A.size() && !hit; ++a) hit = objects_isomorphic(B, f(a), b);
        if (!hit) return false;
    }
    return true;
}

bool is_equivalence(const QFunctor& f) { return fully_faithful(f) && essentially_surjective(f); }

bool is_skeletal(const QCategory& a) {
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y)
            if (objects_isomorphic(a, x, y)) return false;
    return true;
}

SkeletalQuotient skeletal_quotient(const CategoryRef& a) {
    const std::size_t n = a->size();
    std::vector<std::size_t> cls(n);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t found = reps.size();
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (objects_isomorphic(*a, reps[i], x)) { found = i; break; }
        if (found == reps.size()) reps.push_back(x);
        cls[x] = found;
    }
    TypedSet objs;
    for (auto r : reps) {
        objs.labels.push_back(a->label(r));
        objs.types.push_back(a->type(r));
    }
    std::vector<Elem> homs(reps.size() * reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) homs[i * reps.size() + j] = a->hom(reps[i], reps[j]);
    auto skel = std::make_shared<const QCategory>(a->base_ref(), std::move(objs), std::move(homs));
    return {skel, QFunctor(a, skel, cls), QFunctor(skel, a, reps), reps};
}

CategoryRef opposite_category(const CategoryRef& a) {
    const std::size_t n = a->size();
    std::vector<Elem> homs(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) homs[x * n + y] = a->hom(y, x);
    return std::make_shared<const QCategory>(opposite_quantaloid(a->base()), a->objects(),
                                             std::move(homs));
}

Distributor opposite_distributor(const Distributor& phi, const CategoryRef& dom_op,
                                 const CategoryRef& cod_op) {
    const std::size_t na = phi.dom()->size(), nb = phi.cod()->size();
    if (dom_op->size() != nb || cod_op->size() != na)
        throw DomainError("opposite distributor: opposite categories do not match");
    std::vector<Elem> out(na * nb);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) out[a * nb + b] = phi.at(b, a);
    return Distributor(dom_op, cod_op, std::move(out));
}

QFunctor opposite_functor(const QFunctor& f, const CategoryRef& dom_op, const CategoryRef& cod_op) {
    if (dom_op->size() != f.dom()->size() || cod_op->size() != f.cod()->size())
        throw DomainError("opposite functor: opposite categories do not match");
    return QFunctor(dom_op, cod_op, f.map());
}

// ------------------------------------------------------------------ closures

CategoryRef close_category(const QuantaloidRef& base, TypedSet objects, std::vector<Elem> m) {
    const std::size_t n = objects.size();
    if (m.size() != n * n) throw StructuralError("seed matrix has wrong shape");
    const auto& q = *base;
    auto t = [&](std::size_t x) { return objects.types.at(x); };
    for (std::size_t a = 0; a < n; ++a)
        m[a * n + a] = q.hom(t(a), t(a)).join(m[a * n + a], q.identity(t(a)));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t a = 0; a < n; ++a) {
                const auto& l = q.hom(t(a), t(a2));
                Elem acc = m[a2 * n + a];
                for (std::size_t a1 = 0; a1 < n; ++a1)
                    acc = l.join(acc, q.compose(t(a), t(a1), t(a2), m[a2 * n + a1], m[a1 * n + a]));
                if (acc != m[a2 * n + a]) {
                    m[a2 * n + a] = acc;
                    changed = true;
                }
            }
    }
    return QCategory::make(base, std::move(objects), std::move(m));
}

Distributor close_distributor(const CategoryRef& dom, const CategoryRef& cod, std::vector<Elem> seed) {
    Distributor raw(dom, cod, std::move(seed));
    return dist_compose(dist_compose(identity_dist(cod), raw), identity_dist(dom));
}

CategoryRef full_subcategory(const CategoryRef& a, const std::vector<std::size_t>& objs) {
    TypedSet ts;
    for (auto x : objs) {
        ts.labels.push_back(a->label(x));
        ts.types.push_back(a->type(x));
    }
    std::vector<Elem> homs(objs.size() * objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j) homs[i * objs.size() + j] = a->hom(objs[i], objs[j]);
    return std::make_shared<const QCategory>(a->base_ref(), std::move(ts), std::move(homs));
}

// --------------------------------------------------------------- enumeration

std::size_t functor_estimate(const QCategory& a, const QCategory& b) {
    std::size_t est = 1;
    for (std::size_t x = 0; x < a.size(); ++x) {
        std::size_t k = 0;
        for (std::size_t y = 0; y < b.size(); ++y) k += a.type(x) == b.type(y);
        est = saturating_mul(est, k);
    }
    return est;
}

std::size_t distributor_estimate(const QCategory& a, const QCategory& b) {
    std::size_t est = 1;
    for (std::size_t y = 0; y < b.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x)
            est = saturating_mul(est, a.base().hom(a.type(x), b.type(y)).size());
    return est;
}

void for_each_functor(const CategoryRef& ap, const CategoryRef& bp, std::size_t cap,
                      const std::function<bool(const QFunctor&)>& visit) {
    require_base(ap->base(), bp->base(), "functor enumeration");
    const auto est = functor_estimate(*ap, *bp);
    if (est > cap) throw CapExceeded("functor enumeration", est, cap);
    const auto& A = *ap;
    const auto& B = *bp;
    const auto& q = A.base();
    const std::size_t n = A.size();
    std::vector<std::vector<std::size_t>> choices(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < B.size(); ++y)
            if (A.type(x) == B.type(y)) choices[x].push_back(y);
    std::vector<std::size_t> map(n), pos(n, 0);
    auto consistent = [&](std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            if (!q.hom(A.type(k), A.type(j)).leq(A.hom(j, k), B.hom(map[j], map[k]))) return false;
            if (!q.hom(A.type(j), A.type(k)).leq(A.hom(k, j), B.hom(map[k], map[j]))) return false;
        }
        return true;
    };
    if (n == 0) {
        visit(QFunctor(ap, bp, {}));
        return;
    }
    std::size_t k = 0;
    while (true) {
        if (pos[k] == choices[k].size()) {
            pos[k] = 0;
            if (k == 0) return;
            --k;
            ++pos[k];
            continue;
        }
        map[k] = choices[k][pos[k]];
        if (!consistent(k)) {
            ++pos[k];
            continue;
        }
        if (k + 1 == n) {
            if (!visit(QFunctor(ap, bp, map))) return;
            ++pos[k];
        } else {
            ++k;
        }
    }
}

std::vector<QFunctor> enumerate_functors(const CategoryRef& a, const CategoryRef& b,
                                         std::size_t cap) {
    std::vector<QFunctor> out;
    for_each_functor(a, b, cap, [&](const QFunctor& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

void for_each_distributor(const CategoryRef& ap, const CategoryRef& bp, std::size_t cap,
                          const std::function<bool(const Distributor&)>& visit) {
    require_base(ap->base(), bp->base(), "distributor enumeration");
    const auto est = distributor_estimate(*ap, *bp);
    if (est > cap) throw CapExceeded("distributor enumeration", est, cap);
    const auto& A = *ap;
    const auto& B = *bp;
    const auto& q = A.base();
    const std::size_t na = A.size(), nb = B.size(), total = na * nb;
    if (total == 0) {
        visit(Distributor(ap, bp, {}));
        return;
    }
    std::vector<Elem> m(total, 0);
    std::vector<std::size_t> sizes(total);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < na; ++a) sizes[b * na + a] = q.hom(A.type(a), B.type(b)).size();
    auto le = [&](std::size_t a, std::size_t b, Elem x, Elem y) {
        return q.hom(A.type(a), B.type(b)).leq(x, y);
    };
    // Entry k = (b, a) against every assigned entry in its column and row.
    auto consistent = [&](std::size_t k) {
        const std::size_t b = k / na, a = k % na;
        for (std::size_t b2 = 0; b2 <= b; ++b2) {
            if (b2 * na + a > k) break;
            if (!le(a, b2, q.compose(A.type(a), B.type(b), B.type(b2), B.hom(b2, b), m[k]), m[b2 * na + a]))
                return false;
            if (!le(a, b, q.compose(A.type(a), B.type(b2), B.type(b), B.hom(b, b2), m[b2 * na + a]), m[k]))
                return false;
        }
        for (std::size_t a2 = 0; a2 <= a; ++a2) {
            if (!le(a2, b, q.compose(A.type(a2), A.type(a), B.type(b), m[k], A.hom(a, a2)), m[b * na + a2]))
                return false;
            if (!le(a, b, q.compose(A.type(a), A.type(a2), B.type(b), m[b * na + a2], A.hom(a2, a)), m[k]))
                return false;
        }
        return true;
    };
    std::size_t k = 0;
    while (true) {
        if (m[k] == sizes[k]) {
            m[k] = 0;
            if (k == 0) return;
            --k;
            ++m[k];
            continue;
        }
        if (!consistent(k)) {
            ++m[k];
            continue;
        }
        if (k + 1 == total) {
            if (!visit(Distributor(ap, bp, m))) return;
            ++m[k];
        } else {
            ++k;
        }
    }
}

std::vector<Distributor> enumerate_distributors(const CategoryRef& a, const CategoryRef& b,
                                                std::size_t cap) {
    std::vector<Distributor> out;
    for_each_distributor(a, b, cap, [&](const Distributor& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

std::string format_distributor(const Distributor& phi) {
    const auto& A = *phi.dom();
    const auto& B = *phi.cod();
    std::string s;
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a) {
            if (!s.empty()) s += ", ";
            s += "(" + B.label(b) + "," + A.label(a) + ")=" +
                 phi.base().hom(A.type(a), B.type(b)).label(phi.at(b, a));
        }
    return "{" + s + "}";
}

std::string format_functor(const QFunctor& f) {
    std::string s;
    for (std::size_t a = 0; a < f.dom()->size(); ++a) {
        if (!s.empty()) s += ", ";
        s += f.dom()->label(a) + "->" + f.cod()->label(f(a));
    }
    return "{" + s + "}";
}

}  // namespace qk
