#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/completion.hpp"

namespace qk {

// Φ: C ⇸ A is Cauchy when [Φ, A]: A ⇸ C is a right adjoint in Dist(Q).
struct CauchyWitness {
    Distributor right_adjoint;
    bool unit = false;    // C <= Φ*⊗Φ
    bool counit = false;  // Φ⊗Φ* <= A
    bool holds() const noexcept { return unit && counit; }
};

CauchyWitness cauchy_witness(const Distributor& phi);
bool is_cauchy_distributor(const Distributor& phi);
bool is_cauchy_presheaf(const Distributor& phi);

// F: C → A with Φ = A(−,F−), column by column.
FunctorResult converges_to(const Distributor& phi);

struct CauchyCompleteness {
    bool holds = false;
    std::vector<Distributor> cauchy;      // Cauchy presheaves in enumeration order
    std::vector<std::size_t> witnesses;   // representing objects
    std::optional<std::size_t> failing;   // index into cauchy
};

CauchyCompleteness cauchy_completeness(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
bool is_cauchy_complete(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);

struct CauchyCompletion {
    PresheafCategory completion;            // full subcategory of PA on Cauchy presheaves
    std::vector<Distributor> right_adjoints;
    QFunctor unit;                          // i_A: A → A_cc
    const CategoryRef& category() const noexcept { return completion.category; }
};

CauchyCompletion cauchy_completion(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap);
// ψ*⊗φ for Cauchy presheaves, which should equal the presheaf hom.
Elem cauchy_hom_via_adjoint(const Distributor& psi_star, const Distributor& phi);

// A(−,i−) and A_cc(i−,−) compose to the identities A and A_cc.
bool check_self_equivalence_in_dist(const CauchyCompletion& cc);

struct MoritaResult {
    bool equivalent = false;
    std::vector<std::size_t> bijection;  // objects of A_cc to objects of B_cc
    std::string reason;
    CategoryRef left;
    CategoryRef right;
};

// Compares skeletal Cauchy completions by a type- and hom-preserving bijection.
MoritaResult morita_equivalent(const CategoryRef& a, const CategoryRef& b,
                               std::size_t cap = kDefaultPresheafCap);
// The bijection search on its own, for skeletal categories.
std::optional<std::vector<std::size_t>> find_isomorphism(const QCategory& a, const QCategory& b);

struct CauchyColimCheck {
    bool holds = false;
    std::optional<std::size_t> failing_weight;
    std::optional<std::size_t> failing_diagram;
    std::size_t checked = 0;
};

// Every Cauchy presheaf on A with every endofunctor of A has a weighted colimit.
CauchyColimCheck cauchy_colim_check(const CategoryRef& a, std::size_t cap = kDefaultPresheafCap,
                                    std::size_t functor_cap = kDefaultFunctorCap);

}  // namespace qk
