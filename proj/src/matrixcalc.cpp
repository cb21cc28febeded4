#include "qk/matrixcalc.hpp"

#include <random>
#include <set>

namespace qk {

// ------------------------------------------------------------------ matrices

QMatrix::QMatrix(QuantaloidRef base, TypedSet dom, TypedSet cod, std::vector<Elem> entries)
    : base_(std::move(base)), dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
    if (!base_) throw StructuralError("matrix without base");
    if (dom_.types.size() != dom_.labels.size() || cod_.types.size() != cod_.labels.size())
        throw StructuralError("typed set with mismatched labels and types");
    if (entries_.size() != dom_.size() * cod_.size()) throw StructuralError("matrix has wrong shape");
    for (std::size_t y = 0; y < cod_.size(); ++y)
        for (std::size_t x = 0; x < dom_.size(); ++x) {
            if (dom_.types[x] >= base_->object_count() || cod_.types[y] >= base_->object_count())
                throw StructuralError("matrix entry typed by an unknown object");
            if (at(y, x) >= base_->hom(dom_.types[x], cod_.types[y]).size())
                throw StructuralError("matrix entry outside its hom lattice");
        }
}

namespace {

void require_same(const Quantaloid& a, const Quantaloid& b) {
    if (!same_base(a, b)) throw DomainError("matrices over different bases");
}

}  // namespace

QMatrix matr_compose(const QMatrix& n, const QMatrix& m) {
    require_same(n.base(), m.base());
    if (!(m.cod() == n.dom())) throw DomainError("matrix composition: typed sets do not match");
    const auto& q = n.base();
    const auto& X = m.dom();
    const auto& Y = m.cod();
    const auto& Z = n.cod();
    std::vector<Elem> out(Z.size() * X.size());
    for (std::size_t z = 0; z < Z.size(); ++z)
        for (std::size_t x = 0; x < X.size(); ++x) {
            const auto& l = q.hom(X.types[x], Z.types[z]);
            Elem acc = l.bottom();
            for (std::size_t y = 0; y < Y.size(); ++y)
                acc = l.join(acc, q.compose(X.types[x], Y.types[y], Z.types[z], n.at(z, y), m.at(y, x)));
            out[z * X.size() + x] = acc;
        }
    return QMatrix(n.base_ref(), X, Z, std::move(out));
}

QMatrix matr_identity(const QuantaloidRef& base, const TypedSet& x) {
    std::vector<Elem> e(x.size() * x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            e[i * x.size() + j] = i == j ? base->identity(x.types[i]) : base->hom(x.types[j], x.types[i]).bottom();
    return QMatrix(base, x, x, std::move(e));
}

QMatrix matr_bottom(const QuantaloidRef& base, const TypedSet& x, const TypedSet& y) {
    std::vector<Elem> e(x.size() * y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) e[i * x.size() + j] = base->hom(x.types[j], y.types[i]).bottom();
    return QMatrix(base, x, y, std::move(e));
}

QMatrix matr_join(const QMatrix& a, const QMatrix& b) {
    require_same(a.base(), b.base());
    if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw DomainError("matrix join: typed sets do not match");
    std::vector<Elem> e(a.entries().size());
    for (std::size_t y = 0; y < a.cod().size(); ++y)
        for (std::size_t x = 0; x < a.dom().size(); ++x)
            e[y * a.dom().size() + x] =
                a.base().hom(a.dom().types[x], a.cod().types[y]).join(a.at(y, x), b.at(y, x));
    return QMatrix(a.base_ref(), a.dom(), a.cod(), std::move(e));
}

QMatrix matr_sup(const QuantaloidRef& base, const TypedSet& x, const TypedSet& y,
                 const std::vector<QMatrix>& family) {
    QMatrix acc = matr_bottom(base, x, y);
    for (const auto& m : family) acc = matr_join(acc, m);
    return acc;
}

bool matr_leq(const QMatrix& a, const QMatrix& b) {
    require_same(a.base(), b.base());
    if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw DomainError("matrix order: typed sets do not match");
    for (std::size_t y = 0; y < a.cod().size(); ++y)
        for (std::size_t x = 0; x < a.dom().size(); ++x)
            if (!a.base().hom(a.dom().types[x], a.cod().types[y]).leq(a.at(y, x), b.at(y, x))) return false;
    return true;
}

QMatrix matrix_of(const QCategory& a) { return QMatrix(a.base_ref(), a.objects(), a.objects(), a.hom_matrix()); }

QMatrix matrix_of(const Distributor& phi) {
    return QMatrix(phi.dom()->base_ref(), phi.dom()->objects(), phi.cod()->objects(), phi.entries());
}

QMatrix matrix_of(const QuantaloidRef& base, const QArrow& f) {
    const auto& s = base->object_label(f.source);
    const auto& t = base->object_label(f.target);
    return QMatrix(base, TypedSet{{s}, {f.source}}, TypedSet{{t}, {f.target}}, {f.elem});
}

// ------------------------------------------------------------------ calculi

std::vector<QArrow> BaseCalculus::arrows(ObjId a, ObjId b, std::size_t cap) const {
    const auto& l = q->hom(a, b);
    if (l.size() > cap) throw CapExceeded("hom enumeration", l.size(), cap);
    std::vector<QArrow> out;
    for (Elem e = 0; e < l.size(); ++e) out.push_back({a, b, e});
    return out;
}

std::vector<QMatrix> MatrixCalculus::arrows(const TypedSet& a, const TypedSet& b, std::size_t cap) const {
    const std::size_t cells = a.size() * b.size();
    std::vector<std::size_t> sizes(cells);
    std::size_t est = 1;
    for (std::size_t y = 0; y < b.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x) {
            sizes[y * a.size() + x] = q->hom(a.types[x], b.types[y]).size();
            est = saturating_mul(est, sizes[y * a.size() + x]);
        }
    if (est > cap) throw CapExceeded("matrix enumeration", est, cap);
    std::vector<QMatrix> out;
    std::vector<Elem> e(cells, 0);
    while (true) {
        out.emplace_back(q, a, b, e);
        std::size_t k = cells;
        while (k > 0) {
            --k;
            if (++e[k] < sizes[k]) break;
            e[k] = 0;
            if (k == 0) return out;
        }
        if (cells == 0) return out;
    }
}

std::string MatrixCalculus::describe(const TypedSet& a) const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!s.empty()) s += ",";
        s += a.labels[i] + ":" + q->object_label(a.types[i]);
    }
    return "{" + s + "}";
}

std::string MatrixCalculus::describe(const QMatrix& f) const {
    std::string s;
    for (std::size_t y = 0; y < f.cod().size(); ++y) {
        if (y) s += "; ";
        for (std::size_t x = 0; x < f.dom().size(); ++x) {
            if (x) s += " ";
            s += q->hom(f.dom().types[x], f.cod().types[y]).label(f.at(y, x));
        }
    }
    return "[" + s + "]";
}

std::string DistributorCalculus::describe(const CategoryRef& a) const {
    std::string s;
    for (std::size_t i = 0; i < a->size(); ++i) {
        if (!s.empty()) s += ",";
        s += a->label(i);
    }
    return "{" + s + "}";
}

std::vector<Monad<BaseCalculus>> enumerate_monads(const BaseCalculus& calc, ObjId a) {
    std::vector<Monad<BaseCalculus>> out;
    for (const auto& t : calc.arrows(a, a, calc.q->hom(a, a).size())) {
        Monad<BaseCalculus> m{a, t};
        if (is_monad(calc, m)) out.push_back(m);
    }
    return out;
}

// ------------------------------------------------------------------- shapes

ValidationReport Shape::validate() const {
    ValidationReport r;
    const std::size_t n = objects.size();
    if (identities.size() != n) {
        r.add("shape: one identity per object required");
        return r;
    }
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source >= n || arrows[i].target >= n) r.add("shape: arrow " + arrows[i].label + " has unknown ends");
    for (std::size_t d = 0; d < n; ++d) {
        const auto id = identities[d];
        if (id >= arrows.size() || arrows[id].source != d || arrows[id].target != d)
            r.add("shape: identity of " + objects[d] + " is not an endo-arrow on it");
    }
    if (!r.ok()) return r;
    auto comp = [&](std::size_t g, std::size_t f) -> std::optional<std::size_t> {
        auto it = composition.find({g, f});
        if (it == composition.end()) return std::nullopt;
        return it->second;
    };
    for (std::size_t f = 0; f < arrows.size(); ++f)
        for (std::size_t g = 0; g < arrows.size(); ++g) {
            const bool composable = arrows[f].target == arrows[g].source;
            auto h = comp(g, f);
            if (!composable) {
                if (h) r.add("shape: composite listed for non-composable " + arrows[g].label + "∘" + arrows[f].label);
                continue;
            }
            if (!h) {
                r.add("shape: missing composite " + arrows[g].label + "∘" + arrows[f].label);
                continue;
            }
            if (*h >= arrows.size() || arrows[*h].source != arrows[f].source || arrows[*h].target != arrows[g].target)
                r.add("shape: composite " + arrows[g].label + "∘" + arrows[f].label + " has the wrong type");
        }
    if (!r.ok()) return r;
    for (std::size_t f = 0; f < arrows.size(); ++f) {
        if (*comp(identities[arrows[f].target], f) != f || *comp(f, identities[arrows[f].source]) != f)
            r.add("shape: identity law fails at " + arrows[f].label);
    }
    for (std::size_t f = 0; f < arrows.size(); ++f)
        for (std::size_t g = 0; g < arrows.size(); ++g) {
            if (arrows[f].target != arrows[g].source) continue;
            for (std::size_t h = 0; h < arrows.size(); ++h) {
                if (arrows[g].target != arrows[h].source) continue;
                if (*comp(h, *comp(g, f)) != *comp(*comp(h, g), f))
                    r.add("shape: associativity fails at " + arrows[h].label + "∘" + arrows[g].label + "∘" +
                          arrows[f].label);
            }
        }
    return r;
}

std::vector<std::size_t> Shape::hom(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source == from && arrows[i].target == to) out.push_back(i);
    return out;
}

Shape Shape::opposite() const {
    Shape s{objects, {}, identities, {}};
    for (const auto& a : arrows) s.arrows.push_back({a.label, a.target, a.source});
    for (const auto& [gf, h] : composition) s.composition[{gf.second, gf.first}] = h;
    return s;
}

std::optional<std::size_t> Shape::find_object(const std::string& l) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == l) return i;
    return std::nullopt;
}

std::optional<std::size_t> Shape::find_arrow(const std::string& l) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == l) return i;
    return std::nullopt;
}

Shape Shape::from_generators(std::vector<std::string> objs, std::vector<Arrow> gens,
                             std::map<std::pair<std::size_t, std::size_t>, std::size_t> composites) {
    Shape s;
    const std::size_t n = objs.size();
    s.objects = std::move(objs);
    for (std::size_t d = 0; d < n; ++d) {
        s.arrows.push_back({"1_" + s.objects[d], d, d});
        s.identities.push_back(d);
    }
    for (auto& g : gens) {
        if (g.source >= n || g.target >= n) throw StructuralError("shape: arrow " + g.label + " has unknown ends");
        s.arrows.push_back(std::move(g));
    }
    for (std::size_t f = 0; f < s.arrows.size(); ++f) {
        s.composition[{s.identities[s.arrows[f].target], f}] = f;
        s.composition[{f, s.identities[s.arrows[f].source]}] = f;
    }
    for (const auto& [gf, h] : composites) s.composition[{gf.first + n, gf.second + n}] = h + n;
    if (auto r = s.validate(); !r.ok()) throw StructuralError(r.summary());
    return s;
}

Shape Shape::discrete(std::vector<std::string> objs) { return from_generators(std::move(objs), {}, {}); }

Shape Shape::generic_object() { return discrete({"*"}); }

Shape Shape::parallel_pair() { return from_generators({"0", "1"}, {{"u", 0, 1}, {"v", 0, 1}}, {}); }

Shape Shape::chain(std::size_t n) {
    Shape s;
    for (std::size_t i = 0; i < n; ++i) s.objects.push_back(std::to_string(i));
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            index[{i, j}] = s.arrows.size();
            s.arrows.push_back({std::to_string(i) + "_" + std::to_string(j), i, j});
        }
    for (std::size_t i = 0; i < n; ++i) s.identities.push_back(index[{i, i}]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) s.composition[{index[{j, k}], index[{i, j}]}] = index[{i, k}];
    return s;
}

LaxFunctor<BaseCalculus> opposite_lax_functor(const LaxFunctor<BaseCalculus>& f, const BaseCalculus&) {
    LaxFunctor<BaseCalculus> out{f.shape.opposite(), f.objects, {}};
    for (const auto& a : f.arrows) out.arrows.push_back({a.target, a.source, a.elem});
    return out;
}

// -------------------------------------------------------- direct sums

DirectSum direct_sum(const QuantaloidRef& base, const std::vector<TypedSet>& family) {
    DirectSum ds;
    std::vector<std::size_t> offset;
    for (std::size_t i = 0; i < family.size(); ++i) {
        offset.push_back(ds.sum.size());
        for (std::size_t k = 0; k < family[i].size(); ++k) {
            ds.sum.labels.push_back(std::to_string(i) + "." + family[i].labels[k]);
            ds.sum.types.push_back(family[i].types[k]);
        }
    }
    const auto& S = ds.sum;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& X = family[i];
        // p_i(k, y) = δ, s_i(y, k) = δ
        std::vector<Elem> p(X.size() * S.size());
        std::vector<Elem> s(S.size() * X.size());
        for (std::size_t k = 0; k < X.size(); ++k)
            for (std::size_t y = 0; y < S.size(); ++y) {
                const bool same = y == offset[i] + k;
                p[k * S.size() + y] = same ? base->identity(X.types[k]) : base->hom(S.types[y], X.types[k]).bottom();
                s[y * X.size() + k] = same ? base->identity(X.types[k]) : base->hom(X.types[k], S.types[y]).bottom();
            }
        ds.projections.emplace_back(base, S, X, std::move(p));
        ds.coprojections.emplace_back(base, X, S, std::move(s));
    }
    return ds;
}

// ------------------------------------------------- lax colimits in Dist(Q)

std::vector<CategoryRef> unit_categories(const QuantaloidRef& base) {
    std::vector<CategoryRef> out;
    for (ObjId t = 0; t < base->object_count(); ++t) out.push_back(unit_category(base, t));
    return out;
}

Distributor embed_arrow(const QArrow& f, const std::vector<CategoryRef>& units) {
    return Distributor(units.at(f.source), units.at(f.target), {f.elem});
}

LaxColimitInDist lax_colimit_in_dist(const BaseCalculus& calc, const LaxFunctor<BaseCalculus>& f) {
    if (auto r = validate_lax_functor(calc, f); !r.ok()) throw ValidationError(r);
    const auto& base = calc.q;
    const auto& shape = f.shape;
    const std::size_t n = shape.objects.size();
    TypedSet objs{shape.objects, f.objects};
    std::vector<Elem> homs(n * n);
    for (std::size_t d2 = 0; d2 < n; ++d2)
        for (std::size_t d = 0; d < n; ++d) {
            auto acc = base->bottom(f.objects[d], f.objects[d2]);
            for (auto a : shape.hom(d, d2)) acc = base->join(acc, f.arrows[a]);
            homs[d2 * n + d] = acc.elem;
        }
    LaxColimitInDist lc;
    lc.category = QCategory::make(base, std::move(objs), std::move(homs));
    lc.units = unit_categories(base);
    const auto& cat = *lc.category;
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Elem> s(n), p(n);
        for (std::size_t x = 0; x < n; ++x) {
            s[x] = cat.hom(x, d);
            p[x] = cat.hom(d, x);
        }
        lc.coprojections.emplace_back(lc.units[f.objects[d]], lc.category, std::move(s));
        lc.projections.emplace_back(lc.category, lc.units[f.objects[d]], std::move(p));
    }
    lc.transported.shape = shape;
    for (auto t : f.objects) lc.transported.objects.push_back(lc.units[t]);
    for (const auto& a : f.arrows) lc.transported.arrows.push_back(embed_arrow(a, lc.units));

    auto acc = dist_bottom(lc.category, lc.category);
    for (std::size_t d = 0; d < n; ++d) acc = dist_join(acc, dist_compose(lc.coprojections[d], lc.projections[d]));
    lc.sums_to_identity = acc == identity_dist(lc.category);
    lc.projections_match = true;
    lc.adjunctions = true;
    for (std::size_t d = 0; d < n; ++d) {
        lc.adjunctions = lc.adjunctions && check_dist_adjunction(lc.coprojections[d], lc.projections[d]);
        for (std::size_t d2 = 0; d2 < n; ++d2) {
            const auto c = dist_compose(lc.projections[d2], lc.coprojections[d]);
            lc.projections_match = lc.projections_match && c == embed_arrow(cat.hom_arrow(d2, d), lc.units);
        }
    }
    return lc;
}

std::vector<CategoryRef> default_apex_set(const LaxColimitInDist& lc, const std::vector<CategoryRef>& extra) {
    std::vector<CategoryRef> out = lc.units;
    for (const auto& c : extra)
        if (same_base(c->base(), lc.category->base())) out.push_back(c);
    return out;
}

UniversalityReport verify_lax_colimit_universality(const LaxColimitInDist& lc,
                                                   const std::vector<CategoryRef>& apexes, std::size_t cap) {
    DistributorCalculus calc{lc.category->base_ref()};
    LaxCandidate<DistributorCalculus> cand{lc.category, lc.projections, lc.coprojections};
    return verify_lax_universality(calc, lc.transported, cand, apexes, cap);
}

LaxFunctor<BaseCalculus> random_lax_functor(const QuantaloidRef& base, std::uint64_t seed,
                                            std::size_t max_objects) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    Shape shape;
    switch (pick(4)) {
        case 0: {
            std::vector<std::string> objs;
            const std::size_t k = 1 + pick(std::max<std::size_t>(max_objects, 1));
            for (std::size_t i = 0; i < k; ++i) objs.push_back(std::to_string(i));
            shape = Shape::discrete(std::move(objs));
            break;
        }
        case 1: shape = Shape::chain(2 + pick(std::max<std::size_t>(max_objects, 2) - 1)); break;
        case 2: shape = Shape::parallel_pair(); break;
        default: shape = Shape::generic_object(); break;
    }
    return random_lax_functor_on(base, shape, rng());
}

LaxFunctor<BaseCalculus> random_lax_functor_on(const QuantaloidRef& base, const Shape& shape,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    LaxFunctor<BaseCalculus> f{shape, {}, {}};
    for (std::size_t d = 0; d < shape.objects.size(); ++d) f.objects.push_back(pick(base->object_count()));
    for (const auto& a : shape.arrows) {
        const ObjId s = f.objects[a.source], t = f.objects[a.target];
        f.arrows.push_back({s, t, static_cast<Elem>(pick(base->hom(s, t).size()))});
    }
    // close upwards until both lax inequalities hold
    for (std::size_t d = 0; d < shape.objects.size(); ++d) {
        auto& img = f.arrows[shape.identities[d]];
        img = base->join(img, base->identity_arrow(f.objects[d]));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [gf, h] : shape.composition) {
            const auto up = base->join(f.arrows[h], base->compose(f.arrows[gf.first], f.arrows[gf.second]));
            if (!(up == f.arrows[h])) {
                f.arrows[h] = up;
                changed = true;
            }
        }
    }
    return f;
}

// --------------------------------------------- Dist(Q) = Bim(Matr(Q))

Monad<MatrixCalculus> monad_of(const QCategory& a) { return {a.objects(), matrix_of(a)}; }

Bimodule<MatrixCalculus> bimodule_of(const Distributor& phi) {
    return {monad_of(*phi.dom()), monad_of(*phi.cod()), matrix_of(phi)};
}

BimMatrReport dist_equals_bim_matr(const std::vector<CategoryRef>& categories,
                                   const std::vector<Distributor>& distributors) {
    BimMatrReport rep;
    auto row = [&](std::string what, bool ok) {
        rep.rows.push_back({std::move(what), ok});
        rep.holds = rep.holds && ok;
    };
    for (std::size_t i = 0; i < categories.size(); ++i) {
        const auto& a = *categories[i];
        MatrixCalculus mc{a.base_ref()};
        BimoduleCalculus<MatrixCalculus> bim{mc};
        const auto m = monad_of(a);
        const std::string tag = "category " + std::to_string(i);
        row(tag + ": monad in Matr iff Q-category", is_monad(mc, m) == a.validate().ok());
        const auto id = identity_dist(categories[i]);
        row(tag + ": identity distributor is the identity bimodule", matrix_of(id) == bim.identity(m).arrow);
    }
    for (std::size_t i = 0; i < distributors.size(); ++i) {
        const auto& phi = distributors[i];
        MatrixCalculus mc{phi.dom()->base_ref()};
        const auto b = bimodule_of(phi);
        const std::string tag = "distributor " + std::to_string(i);
        row(tag + ": bimodule iff distributor", is_bimodule(mc, b.source, b.target, b.arrow) == phi.validate().ok());
        for (std::size_t j = 0; j < distributors.size(); ++j) {
            const auto& psi = distributors[j];
            if (!same_category(*psi.dom(), *phi.cod())) continue;
            row(tag + " then " + std::to_string(j) + ": tensor is bimodule composition",
                matrix_of(dist_compose(psi, phi)) == matr_compose(matrix_of(psi), matrix_of(phi)));
        }
    }
    return rep;
}

}  // namespace qk
