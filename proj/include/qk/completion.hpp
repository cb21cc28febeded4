#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qk/enriched.hpp"

namespace qk {

// A functor that may fail to exist; `failing` names the first object of the
// weight's domain with no representing object.
struct FunctorResult {
    std::optional<QFunctor> value;
    std::optional<std::size_t> failing;

    bool exists() const noexcept { return value.has_value(); }
    explicit operator bool() const noexcept { return exists(); }
    const QFunctor& operator*() const { return *value; }
    const QFunctor* operator->() const { return &*value; }
};

// colim(Θ, F) for Θ: C ⇸ A, F: A → B, characterised by B(G−,−) = [Θ, B(F−,−)].
FunctorResult weighted_colim(const Distributor& weight, const QFunctor& diagram);
// lim(Φ, F) for Φ: B ⇸ C, F: B → A, characterised by A(−,G−) = {Φ, A(−,F−)}.
FunctorResult weighted_lim(const Distributor& weight, const QFunctor& diagram);

inline constexpr std::size_t kDefaultPresheafCap = 64;

// Contravariant presheaves *_c ⇸ A ordered by type c, then lexicographically.
// CapExceeded reports the number found before giving up.
std::vector<Distributor> enumerate_presheaves(const CategoryRef& a,
                                              std::size_t cap = kDefaultPresheafCap);
// Covariant presheaves A ⇸ *_c in the same order.
std::vector<Distributor> enumerate_copresheaves(const CategoryRef& a,
                                                std::size_t cap = kDefaultPresheafCap);
// Least presheaf above a seed vector (one element per object of A).
Distributor close_presheaf(const CategoryRef& a, ObjId type, std::vector<Elem> seed);
Distributor close_copresheaf(const CategoryRef& a, ObjId type, std::vector<Elem> seed);
// The representables A(−,a) and A(a,−).
Distributor representable(const CategoryRef& a, std::size_t x);
Distributor corepresentable(const CategoryRef& a, std::size_t x);

struct CompletenessResult {
    bool holds = false;
    std::vector<Distributor> weights;
    std::vector<std::size_t> witnesses;  // colimit or limit object per weight
    std::optional<std::size_t> failing;  // index into weights
};

CompletenessResult cocompleteness(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
CompletenessResult completeness(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
bool is_cocomplete(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
bool is_complete(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);

// PA or P†A together with its objects and the transposes.
struct PresheafCategory {
    CategoryRef source;
    CategoryRef category;
    std::vector<Distributor> presheaves;
    bool covariant = false;

    std::optional<std::size_t> find(const Distributor& phi) const;
    // F_Φ: C → PA with F_Φ(c) = Φ(−,c), for Φ: C ⇸ A.
    QFunctor functor_of(const Distributor& phi) const;
    // Φ_F: C ⇸ A with Φ_F(a,c) = F(c)(a), for F: C → PA.
    Distributor distributor_of(const QFunctor& f) const;

    std::map<std::pair<ObjId, std::vector<Elem>>, std::size_t> index;
};

PresheafCategory presheaf_category(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
PresheafCategory copresheaf_category(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
// Builds PA on a prescribed list of presheaves (full subcategory of PA).
PresheafCategory presheaf_subcategory(const CategoryRef& a, std::vector<Distributor> presheaves);
// PA(ψ, φ) as a single arrow t(φ) → t(ψ).
Elem presheaf_hom(const Distributor& psi, const Distributor& phi);
Elem copresheaf_hom(const Distributor& psi, const Distributor& phi);

QFunctor yoneda(const PresheafCategory& pa);
QFunctor coyoneda(const PresheafCategory& cpa);

// [−,A]: PA → P†A and {−,A}: P†A → PA.
QFunctor presheaf_to_copresheaf(const PresheafCategory& pa, const PresheafCategory& cpa);
QFunctor copresheaf_to_presheaf(const PresheafCategory& cpa, const PresheafCategory& pa);

// Kan extensions of F: B → A along G: B → C, as functors C → A.
FunctorResult kan_left_pointwise(const QFunctor& f, const QFunctor& g);
FunctorResult kan_right_pointwise(const QFunctor& f, const QFunctor& g);
FunctorResult kan_left_bruteforce(const QFunctor& f, const QFunctor& g,
                                  std::size_t cap = kDefaultFunctorCap);
FunctorResult kan_right_bruteforce(const QFunctor& f, const QFunctor& g,
                                   std::size_t cap = kDefaultFunctorCap);

// A right adjoint of F: A → B as the left Kan extension ⟨1_A, F⟩ when F preserves
// it; a right adjoint is always pointwise, so a missing pointwise extension means none.
std::optional<QFunctor> right_adjoint_via_kan(const QFunctor& f);
// Dually a left adjoint as the right Kan extension of 1_A along F.
std::optional<QFunctor> left_adjoint_via_kan(const QFunctor& f);

// φ ↦ colim(φ, F): PA → B; throws DomainError when B is not cocomplete.
QFunctor free_cocompletion_factor(const QFunctor& f, const PresheafCategory& pa,
                                  std::size_t cap = kDefaultPresheafCap);
// b ↦ B(F−, b): B → PA.
QFunctor nerve_functor(const QFunctor& f, const PresheafCategory& pa);

// colim(⋁ B(−,F_i−), 1_B) for a family of functors A → B.
FunctorResult sup_of_functors(const CategoryRef& dom, const CategoryRef& cod,
                              const std::vector<QFunctor>& family);
// The least functor above each member in the pointwise order, by enumeration.
std::optional<QFunctor> order_sup_of_functors(const CategoryRef& dom, const CategoryRef& cod,
                                              const std::vector<QFunctor>& family,
                                              std::size_t cap = kDefaultFunctorCap);

}  // namespace qk
