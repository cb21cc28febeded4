#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qk/quantaloid.hpp"

namespace qk {

struct TypedSet {
    std::vector<std::string> labels;
    std::vector<ObjId> types;

    std::size_t size() const noexcept { return labels.size(); }
    bool operator==(const TypedSet&) const = default;
};

class QCategory;
using CategoryRef = std::shared_ptr<const QCategory>;

// Objects with types in the base; hom(a2, a) is an arrow t(a) → t(a2).
class QCategory {
public:
    QCategory(QuantaloidRef base, TypedSet objects, std::vector<Elem> homs);

    // Validates composition and identity inequalities; throws ValidationError.
    static CategoryRef make(QuantaloidRef base, TypedSet objects, std::vector<Elem> homs);
    ValidationReport validate() const;

    const QuantaloidRef& base_ref() const noexcept { return base_; }
    const Quantaloid& base() const noexcept { return *base_; }
    const TypedSet& objects() const noexcept { return objects_; }
    std::size_t size() const noexcept { return objects_.size(); }
    ObjId type(std::size_t a) const { return objects_.types.at(a); }
    const std::string& label(std::size_t a) const { return objects_.labels.at(a); }
    std::optional<std::size_t> find(const std::string& label) const;

    Elem hom(std::size_t a2, std::size_t a) const noexcept { return homs_[a2 * size() + a]; }
    QArrow hom_arrow(std::size_t a2, std::size_t a) const {
        return {type(a), type(a2), hom(a2, a)};
    }
    const std::vector<Elem>& hom_matrix() const noexcept { return homs_; }

    bool operator==(const QCategory& other) const;

private:
    QuantaloidRef base_;
    TypedSet objects_;
    std::vector<Elem> homs_;
};

bool same_category(const QCategory& a, const QCategory& b);

// One object of type t with hom 1_t.
CategoryRef unit_category(const QuantaloidRef& base, ObjId t);

// Φ: A ⇸ B with entries Φ(b, a): t(a) → t(b).
class Distributor {
public:
    Distributor() = default;
    Distributor(CategoryRef dom, CategoryRef cod, std::vector<Elem> entries);

    const CategoryRef& dom() const noexcept { return dom_; }
    const CategoryRef& cod() const noexcept { return cod_; }
    const Quantaloid& base() const noexcept { return dom_->base(); }
    Elem at(std::size_t b, std::size_t a) const noexcept { return entries_[b * dom_->size() + a]; }
    void set(std::size_t b, std::size_t a, Elem e) { entries_[b * dom_->size() + a] = e; }
    QArrow arrow(std::size_t b, std::size_t a) const {
        return {dom_->type(a), cod_->type(b), at(b, a)};
    }
    const std::vector<Elem>& entries() const noexcept { return entries_; }

    ValidationReport validate() const;
    bool operator==(const Distributor& other) const;

private:
    CategoryRef dom_;
    CategoryRef cod_;
    std::vector<Elem> entries_;
};

// Checks action inequalities; throws ValidationError.
Distributor make_distributor(CategoryRef dom, CategoryRef cod, std::vector<Elem> entries);

class QFunctor {
public:
    QFunctor() = default;
    QFunctor(CategoryRef dom, CategoryRef cod, std::vector<std::size_t> map);

    const CategoryRef& dom() const noexcept { return dom_; }
    const CategoryRef& cod() const noexcept { return cod_; }
    std::size_t operator()(std::size_t a) const { return map_.at(a); }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    ValidationReport validate() const;
    bool operator==(const QFunctor& other) const;

private:
    CategoryRef dom_;
    CategoryRef cod_;
    std::vector<std::size_t> map_;
};

QFunctor make_functor(CategoryRef dom, CategoryRef cod, std::vector<std::size_t> map);
QFunctor identity_functor(const CategoryRef& a);
QFunctor compose_functors(const QFunctor& g, const QFunctor& f);

// Distributor calculus. All throw DomainError on mismatched bases or categories.
Distributor dist_compose(const Distributor& psi, const Distributor& phi);
Distributor identity_dist(const CategoryRef& a);
Distributor dist_bottom(const CategoryRef& dom, const CategoryRef& cod);
Distributor dist_join(const Distributor& x, const Distributor& y);
Distributor dist_sup(const CategoryRef& dom, const CategoryRef& cod,
                     const std::vector<Distributor>& family);
bool dist_leq(const Distributor& x, const Distributor& y);
// [Ψ,Θ]: A ⇸ B for Ψ: B ⇸ C, Θ: A ⇸ C; the largest X with Ψ⊗X <= Θ.
Distributor dist_lift(const Distributor& psi, const Distributor& theta);
// {Φ,Θ}: B ⇸ C for Φ: A ⇸ B, Θ: A ⇸ C; the largest Y with Y⊗Φ <= Θ.
Distributor dist_ext(const Distributor& phi, const Distributor& theta);

// B(−,F−): A ⇸ B and B(F−,−): B ⇸ A.
Distributor graph_left(const QFunctor& f);
Distributor graph_right(const QFunctor& f);

// Φ ⊣ Ψ for Φ: A ⇸ B, Ψ: B ⇸ A.
bool check_dist_adjunction(const Distributor& phi, const Distributor& psi);
// F ⊣ G iff B(F−,−) = A(−,G−).
bool functor_adjoint_pair(const QFunctor& f, const QFunctor& g);

// Row-major, order[a2 * n + a] meaning a2 <= a.
std::vector<char> underlying_order(const QCategory& a);
bool objects_isomorphic(const QCategory& a, std::size_t x, std::size_t y);
bool functor_leq(const QFunctor& f, const QFunctor& g);
bool functors_isomorphic(const QFunctor& f, const QFunctor& g);
bool fully_faithful(const QFunctor& f);
bool essentially_surjective(const QFunctor& f);
bool is_equivalence(const QFunctor& f);
bool is_skeletal(const QCategory& a);

struct SkeletalQuotient {
    CategoryRef category;
    QFunctor projection;           // A → skeleton
    QFunctor section;              // skeleton → A, picking the least representative
    std::vector<std::size_t> representative;
};
SkeletalQuotient skeletal_quotient(const CategoryRef& a);

CategoryRef opposite_category(const CategoryRef& a);
// Opposites of distributors and functors need the opposite categories already built.
Distributor opposite_distributor(const Distributor& phi, const CategoryRef& dom_op,
                                 const CategoryRef& cod_op);
QFunctor opposite_functor(const QFunctor& f, const CategoryRef& dom_op, const CategoryRef& cod_op);

// Closure helpers: the least category, distributor or presheaf above a seed matrix.
CategoryRef close_category(const QuantaloidRef& base, TypedSet objects, std::vector<Elem> seed);
Distributor close_distributor(const CategoryRef& dom, const CategoryRef& cod,
                              std::vector<Elem> seed);

// Full subcategory on the listed objects, in the given order.
CategoryRef full_subcategory(const CategoryRef& a, const std::vector<std::size_t>& objects);

// Enumeration in lexicographic order of the image/entry vector. The estimate is the
// size of the unfiltered product; CapExceeded is thrown when it exceeds cap.
inline constexpr std::size_t kDefaultFunctorCap = 4096;
std::size_t functor_estimate(const QCategory& a, const QCategory& b);
std::size_t distributor_estimate(const QCategory& a, const QCategory& b);
void for_each_functor(const CategoryRef& a, const CategoryRef& b, std::size_t cap,
                      const std::function<bool(const QFunctor&)>& visit);
std::vector<QFunctor> enumerate_functors(const CategoryRef& a, const CategoryRef& b,
                                         std::size_t cap = kDefaultFunctorCap);
void for_each_distributor(const CategoryRef& a, const CategoryRef& b, std::size_t cap,
                          const std::function<bool(const Distributor&)>& visit);
std::vector<Distributor> enumerate_distributors(const CategoryRef& a, const CategoryRef& b,
                                                std::size_t cap = kDefaultFunctorCap);

std::string format_distributor(const Distributor& phi);
std::string format_functor(const QFunctor& f);

}  // namespace qk
