#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qk/error.hpp"
#include "qk/lattice.hpp"

namespace qk {

using ObjId = std::size_t;

struct QArrow {
    ObjId source = 0;
    ObjId target = 0;
    Elem elem = 0;
    bool operator==(const QArrow&) const = default;
};

// Raw quantaloid tables. homs and identities are indexed source * n + target and
// by object; compose is indexed (a * n + b) * n + c and holds, for g in hom(b,c)
// and f in hom(a,b), the element g∘f of hom(a,c) at position g * |hom(a,b)| + f.
struct QuantaloidCandidate {
    std::vector<std::string> objects;
    std::vector<std::optional<CompleteLattice>> homs;
    std::vector<std::vector<Elem>> compose;
    std::vector<std::optional<Elem>> identities;
};

// Which shorthand produced a quantaloid; kept so printers can round-trip it.
struct QuantaloidOrigin {
    enum class Kind { table, bool2, rel_locale, tropical, random, opposite } kind = Kind::table;
    std::string argument;  // lattice name, truncation bound, or seed triple
};

class Quantaloid;
using QuantaloidRef = std::shared_ptr<const Quantaloid>;

// Throws StructuralError when tables are missing or have the wrong shape.
ValidationReport validate_quantaloid(const QuantaloidCandidate& candidate);

class Quantaloid {
public:
    // Validates; throws ValidationError listing every violated axiom.
    static QuantaloidRef make(QuantaloidCandidate candidate, QuantaloidOrigin origin = {});

    std::size_t object_count() const noexcept { return objects_.size(); }
    const std::string& object_label(ObjId a) const { return objects_.at(a); }
    const std::vector<std::string>& object_labels() const noexcept { return objects_; }
    std::optional<ObjId> find_object(const std::string& label) const;

    const CompleteLattice& hom(ObjId a, ObjId b) const { return homs_[a * n() + b]; }

    // Raw element operations: g ∈ hom(b,c), f ∈ hom(a,b), h ∈ hom(a,c).
    Elem compose(ObjId a, ObjId b, ObjId c, Elem g, Elem f) const {
        return compose_[(a * n() + b) * n() + c][g * hom(a, b).size() + f];
    }
    // [g,h] ∈ hom(a,b): the largest x with g∘x <= h.
    Elem lift(ObjId a, ObjId b, ObjId c, Elem g, Elem h) const {
        return lift_[(a * n() + b) * n() + c][g * hom(a, c).size() + h];
    }
    // {f,h} ∈ hom(b,c) for f ∈ hom(a,b): the largest y with y∘f <= h.
    Elem ext(ObjId a, ObjId b, ObjId c, Elem f, Elem h) const {
        return ext_[(a * n() + b) * n() + c][f * hom(a, c).size() + h];
    }
    Elem identity(ObjId a) const { return identities_.at(a); }

    // Checked arrow operations; throw DomainError on type mismatch.
    QArrow compose(const QArrow& g, const QArrow& f) const;
    QArrow lift(const QArrow& g, const QArrow& h) const;
    QArrow ext(const QArrow& f, const QArrow& h) const;
    QArrow identity_arrow(ObjId a) const { return {a, a, identity(a)}; }
    QArrow bottom(ObjId a, ObjId b) const { return {a, b, hom(a, b).bottom()}; }
    QArrow top(ObjId a, ObjId b) const { return {a, b, hom(a, b).top()}; }
    QArrow join(const QArrow& x, const QArrow& y) const;
    QArrow meet(const QArrow& x, const QArrow& y) const;
    bool leq(const QArrow& x, const QArrow& y) const;
    QArrow kronecker(ObjId a, ObjId b) const {
        return a == b ? identity_arrow(a) : bottom(a, b);
    }
    QArrow arrow(ObjId a, ObjId b, const std::string& label) const;
    std::string format(const QArrow& f) const;

    // Right adjoint of f: a→b, namely [f,1_b] when [f,1_b]∘f = [f,f].
    std::optional<QArrow> right_adjoint_of(const QArrow& f) const;
    // Left adjoint of g: b→a, namely {g,1_b} when g∘{g,1_b} = {g,g}.
    std::optional<QArrow> left_adjoint_of(const QArrow& g) const;

    const std::vector<Elem>& compose_table(ObjId a, ObjId b, ObjId c) const {
        return compose_[(a * n() + b) * n() + c];
    }
    const QuantaloidOrigin& origin() const noexcept { return origin_; }
    QuantaloidCandidate candidate() const;

    std::uint64_t fingerprint() const noexcept { return fingerprint_; }
    // Structural equality: object labels, hom lattices, tables, identities.
    bool operator==(const Quantaloid& other) const;

private:
    std::size_t n() const noexcept { return objects_.size(); }

    std::vector<std::string> objects_;
    std::vector<CompleteLattice> homs_;
    std::vector<std::vector<Elem>> compose_;
    std::vector<std::vector<Elem>> lift_;
    std::vector<std::vector<Elem>> ext_;
    std::vector<Elem> identities_;
    QuantaloidOrigin origin_;
    std::uint64_t fingerprint_ = 0;
};

// Pointer identity, or structural equality for independently built bases.
bool same_base(const Quantaloid& a, const Quantaloid& b);

// Generators.
QuantaloidRef bool2();
// Throws DomainError naming an offending triple when meets do not distribute over joins.
QuantaloidRef rel_locale(const CompleteLattice& omega, std::string omega_name = "");
QuantaloidRef tropical_trunc(std::size_t bound);
QuantaloidRef opposite_quantaloid(const Quantaloid& q);
// Sub-quantaloid of relations between small finite sets, generated by random
// relations and closed under composition and union; hom lattices larger than
// hom_cap are rejected and the draw retried.
QuantaloidRef random_quantaloid(std::uint64_t seed, std::size_t object_count,
                                std::size_t hom_cap);

// Finds the first a, b, c with a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c).
std::optional<std::tuple<Elem, Elem, Elem>> distributivity_failure(const CompleteLattice& l);

}  // namespace qk
