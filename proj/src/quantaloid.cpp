#include "qk/quantaloid.hpp"

#include <set>

namespace qk {

namespace {

constexpr std::size_t kMaxReported = 64;

void note(ValidationReport& r, std::size_t& dropped, std::string msg) {
    if (r.violations.size() < kMaxReported)
        r.add(std::move(msg));
    else
        ++dropped;
}

std::string where(const QuantaloidCandidate& c, ObjId a, ObjId b) {
    if (c.objects.size() == 1) return "";
    return " [" + c.objects[a] + "→" + c.objects[b] + "]";
}

void check_tables(const QuantaloidCandidate& c) {
    const std::size_t n = c.objects.size();
    if (n == 0) throw StructuralError("quantaloid has no objects");
    std::set<std::string> seen;
    for (const auto& o : c.objects)
        if (!seen.insert(o).second) throw StructuralError("duplicate object '" + o + "'");
    if (c.homs.size() != n * n) throw StructuralError("hom table has wrong shape");
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            if (!c.homs[a * n + b])
                throw StructuralError("missing hom lattice for " + c.objects[a] + " " +
                                      c.objects[b]);
    if (c.identities.size() != n) throw StructuralError("identity table has wrong shape");
    for (ObjId a = 0; a < n; ++a) {
        if (!c.identities[a]) throw StructuralError("missing identity for " + c.objects[a]);
        if (*c.identities[a] >= c.homs[a * n + a]->size())
            throw StructuralError("identity for " + c.objects[a] + " is not in its hom lattice");
    }
    if (c.compose.size() != n * n * n) throw StructuralError("composition table has wrong shape");
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d) {
                const auto& t = c.compose[(a * n + b) * n + d];
                const std::size_t want = c.homs[b * n + d]->size() * c.homs[a * n + b]->size();
                if (t.size() != want)
                    throw StructuralError("composition table " + c.objects[a] + " " +
                                          c.objects[b] + " " + c.objects[d] + " is incomplete");
                for (Elem e : t)
                    if (e >= c.homs[a * n + d]->size())
                        throw StructuralError("composition table " + c.objects[a] + " " +
                                              c.objects[b] + " " + c.objects[d] +
                                              " has an entry outside its hom lattice");
            }
}

struct TableView {
    const QuantaloidCandidate& c;
    std::size_t n;
    const CompleteLattice& hom(ObjId a, ObjId b) const { return *c.homs[a * n + b]; }
    Elem comp(ObjId a, ObjId b, ObjId d, Elem g, Elem f) const {
        return c.compose[(a * n + b) * n + d][g * hom(a, b).size() + f];
    }
};

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return fnv(h, s.size());
}

}  // namespace

ValidationReport validate_quantaloid(const QuantaloidCandidate& c) {
    check_tables(c);
    const std::size_t n = c.objects.size();
    TableView t{c, n};
    ValidationReport r;
    std::size_t dropped = 0;

    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
            const auto& hab = t.hom(a, b);
            const Elem ida = *c.identities[a], idb = *c.identities[b];
            for (Elem f = 0; f < hab.size(); ++f) {
                Elem l = t.comp(a, b, b, idb, f);
                if (l != f)
                    note(r, dropped,
                         "identity law fails: " + t.hom(b, b).label(idb) + "∘" + hab.label(f) +
                             " = " + hab.label(l) + " ≠ " + hab.label(f) + where(c, a, b));
                Elem rr = t.comp(a, a, b, f, ida);
                if (rr != f)
                    note(r, dropped,
                         "identity law fails: " + hab.label(f) + "∘" + t.hom(a, a).label(ida) +
                             " = " + hab.label(rr) + " ≠ " + hab.label(f) + where(c, a, b));
            }
        }

    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d)
                for (ObjId e = 0; e < n; ++e)
                    for (Elem h = 0; h < t.hom(d, e).size(); ++h)
                        for (Elem g = 0; g < t.hom(b, d).size(); ++g) {
                            const Elem hg = t.comp(b, d, e, h, g);
                            for (Elem f = 0; f < t.hom(a, b).size(); ++f) {
                                const Elem left = t.comp(a, b, e, hg, f);
                                const Elem right = t.comp(a, d, e, h, t.comp(a, b, d, g, f));
                                if (left != right)
                                    note(r, dropped,
                                         "associativity fails: (" + t.hom(d, e).label(h) + "∘" +
                                             t.hom(b, d).label(g) + ")∘" + t.hom(a, b).label(f) +
                                             " = " + t.hom(a, e).label(left) + " ≠ " +
                                             t.hom(a, e).label(right) + where(c, a, e));
                            }
                        }

    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d) {
                const auto& hab = t.hom(a, b);
                const auto& hbd = t.hom(b, d);
                const auto& had = t.hom(a, d);
                for (Elem g = 0; g < hbd.size(); ++g) {
                    if (t.comp(a, b, d, g, hab.bottom()) != had.bottom())
                        note(r, dropped,
                             "composition does not preserve bottom: " + hbd.label(g) + "∘" +
                                 hab.label(hab.bottom()) + where(c, a, d));
                    for (Elem f1 = 0; f1 < hab.size(); ++f1)
                        for (Elem f2 = f1 + 1; f2 < hab.size(); ++f2) {
                            Elem l = t.comp(a, b, d, g, hab.join(f1, f2));
                            Elem rr = had.join(t.comp(a, b, d, g, f1), t.comp(a, b, d, g, f2));
                            if (l != rr)
                                note(r, dropped,
                                     "composition does not preserve joins: " + hbd.label(g) +
                                         "∘(" + hab.label(f1) + "∨" + hab.label(f2) + ")" +
                                         where(c, a, d));
                        }
                }
                for (Elem f = 0; f < hab.size(); ++f) {
                    if (t.comp(a, b, d, hbd.bottom(), f) != had.bottom())
                        note(r, dropped,
                             "composition does not preserve bottom: " + hbd.label(hbd.bottom()) +
                                 "∘" + hab.label(f) + where(c, a, d));
                    for (Elem g1 = 0; g1 < hbd.size(); ++g1)
                        for (Elem g2 = g1 + 1; g2 < hbd.size(); ++g2) {
                            Elem l = t.comp(a, b, d, hbd.join(g1, g2), f);
                            Elem rr = had.join(t.comp(a, b, d, g1, f), t.comp(a, b, d, g2, f));
                            if (l != rr)
                                note(r, dropped,
                                     "composition does not preserve joins: (" + hbd.label(g1) +
                                         "∨" + hbd.label(g2) + ")∘" + hab.label(f) +
                                         where(c, a, d));
                        }
                }
            }
    if (dropped) r.add("and " + std::to_string(dropped) + " further violations");
    return r;
}

QuantaloidRef Quantaloid::make(QuantaloidCandidate c, QuantaloidOrigin origin) {
    auto report = validate_quantaloid(c);
    if (!report.ok()) throw ValidationError(report);
    const std::size_t n = c.objects.size();
    auto q = std::make_shared<Quantaloid>();
    q->objects_ = std::move(c.objects);
    for (auto& h : c.homs) q->homs_.push_back(std::move(*h));
    q->compose_ = std::move(c.compose);
    for (auto& i : c.identities) q->identities_.push_back(*i);
    q->origin_ = std::move(origin);

    q->lift_.resize(n * n * n);
    q->ext_.resize(n * n * n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId d = 0; d < n; ++d) {
                const auto& hab = q->hom(a, b);
                const auto& hbd = q->hom(b, d);
                const auto& had = q->hom(a, d);
                auto& lt = q->lift_[(a * n + b) * n + d];
                lt.assign(hbd.size() * had.size(), 0);
                for (Elem g = 0; g < hbd.size(); ++g)
                    for (Elem h = 0; h < had.size(); ++h) {
                        Elem acc = hab.bottom();
                        for (Elem x = 0; x < hab.size(); ++x)
                            if (had.leq(q->compose(a, b, d, g, x), h)) acc = hab.join(acc, x);
                        lt[g * had.size() + h] = acc;
                    }
                auto& et = q->ext_[(a * n + b) * n + d];
                et.assign(hab.size() * had.size(), 0);
                for (Elem f = 0; f < hab.size(); ++f)
                    for (Elem h = 0; h < had.size(); ++h) {
                        Elem acc = hbd.bottom();
                        for (Elem y = 0; y < hbd.size(); ++y)
                            if (had.leq(q->compose(a, b, d, y, f), h)) acc = hbd.join(acc, y);
                        et[f * had.size() + h] = acc;
                    }
            }

    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& o : q->objects_) h = fnv(h, o);
    for (const auto& l : q->homs_) {
        for (const auto& s : l.labels()) h = fnv(h, s);
        for (char ch : l.order_matrix()) h = fnv(h, static_cast<std::uint64_t>(ch));
    }
    for (const auto& t : q->compose_)
        for (Elem e : t) h = fnv(h, e);
    for (Elem e : q->identities_) h = fnv(h, e);
    q->fingerprint_ = h;
    return q;
}

std::optional<ObjId> Quantaloid::find_object(const std::string& label) const {
    for (ObjId a = 0; a < objects_.size(); ++a)
        if (objects_[a] == label) return a;
    return std::nullopt;
}

namespace {
void check_arrow(const Quantaloid& q, const QArrow& f) {
    if (f.source >= q.object_count() || f.target >= q.object_count())
        throw DomainError("arrow refers to an unknown object");
    if (f.elem >= q.hom(f.source, f.target).size())
        throw DomainError("arrow element outside its hom lattice");
}
}  // namespace

QArrow Quantaloid::compose(const QArrow& g, const QArrow& f) const {
    check_arrow(*this, g);
    check_arrow(*this, f);
    if (f.target != g.source) throw DomainError("composition of non-composable arrows");
    return {f.source, g.target, compose(f.source, f.target, g.target, g.elem, f.elem)};
}

QArrow Quantaloid::lift(const QArrow& g, const QArrow& h) const {
    check_arrow(*this, g);
    check_arrow(*this, h);
    if (g.target != h.target) throw DomainError("lifting needs arrows with a common target");
    return {h.source, g.source, lift(h.source, g.source, g.target, g.elem, h.elem)};
}

QArrow Quantaloid::ext(const QArrow& f, const QArrow& h) const {
    check_arrow(*this, f);
    check_arrow(*this, h);
    if (f.source != h.source) throw DomainError("extension needs arrows with a common source");
    return {f.target, h.target, ext(f.source, f.target, h.target, f.elem, h.elem)};
}

QArrow Quantaloid::join(const QArrow& x, const QArrow& y) const {
    check_arrow(*this, x);
    check_arrow(*this, y);
    if (x.source != y.source || x.target != y.target)
        throw DomainError("join of arrows in different hom lattices");
    return {x.source, x.target, hom(x.source, x.target).join(x.elem, y.elem)};
}

QArrow Quantaloid::meet(const QArrow& x, const QArrow& y) const {
    check_arrow(*this, x);
    check_arrow(*this, y);
    if (x.source != y.source || x.target != y.target)
        throw DomainError("meet of arrows in different hom lattices");
    return {x.source, x.target, hom(x.source, x.target).meet(x.elem, y.elem)};
}

bool Quantaloid::leq(const QArrow& x, const QArrow& y) const {
    check_arrow(*this, x);
    check_arrow(*this, y);
    if (x.source != y.source || x.target != y.target)
        throw DomainError("comparison of arrows in different hom lattices");
    return hom(x.source, x.target).leq(x.elem, y.elem);
}

QArrow Quantaloid::arrow(ObjId a, ObjId b, const std::string& label) const {
    if (a >= object_count() || b >= object_count())
        throw DomainError("arrow refers to an unknown object");
    auto e = hom(a, b).find(label);
    if (!e)
        throw DomainError("'" + label + "' is not an element of hom(" + objects_[a] + "," +
                          objects_[b] + ")");
    return {a, b, *e};
}

std::string Quantaloid::format(const QArrow& f) const {
    const auto& l = hom(f.source, f.target).label(f.elem);
    if (object_count() == 1) return l;
    return objects_[f.source] + "->" + objects_[f.target] + ":" + l;
}

std::optional<QArrow> Quantaloid::right_adjoint_of(const QArrow& f) const {
    check_arrow(*this, f);
    const ObjId a = f.source, b = f.target;
    const Elem g = lift(b, a, b, f.elem, identity(b));
    const Elem ff = lift(a, a, b, f.elem, f.elem);
    if (compose(a, b, a, g, f.elem) != ff) return std::nullopt;
    // The criterion is the theory's; the unit and counit are re-checked directly.
    if (!hom(a, a).leq(identity(a), compose(a, b, a, g, f.elem))) return std::nullopt;
    if (!hom(b, b).leq(compose(b, a, b, f.elem, g), identity(b))) return std::nullopt;
    return QArrow{b, a, g};
}

std::optional<QArrow> Quantaloid::left_adjoint_of(const QArrow& g) const {
    check_arrow(*this, g);
    const ObjId b = g.source, a = g.target;
    const Elem f = ext(b, a, b, g.elem, identity(b));
    const Elem gg = ext(b, a, a, g.elem, g.elem);
    if (compose(a, b, a, g.elem, f) != gg) return std::nullopt;
    if (!hom(a, a).leq(identity(a), compose(a, b, a, g.elem, f))) return std::nullopt;
    if (!hom(b, b).leq(compose(b, a, b, f, g.elem), identity(b))) return std::nullopt;
    return QArrow{a, b, f};
}

QuantaloidCandidate Quantaloid::candidate() const {
    QuantaloidCandidate c;
    c.objects = objects_;
    for (const auto& h : homs_) c.homs.emplace_back(h);
    c.compose = compose_;
    for (Elem e : identities_) c.identities.emplace_back(e);
    return c;
}

bool Quantaloid::operator==(const Quantaloid& o) const {
    if (this == &o) return true;
    return fingerprint_ == o.fingerprint_ && objects_ == o.objects_ && homs_ == o.homs_ &&
           compose_ == o.compose_ && identities_ == o.identities_;
}

bool same_base(const Quantaloid& a, const Quantaloid& b) { return &a == &b || a == b; }

}  // namespace qk
