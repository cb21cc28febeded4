#include "qk/cauchy.hpp"

#include <algorithm>
#include <tuple>

namespace qk {

CauchyWitness cauchy_witness(const Distributor& phi) {
    CauchyWitness w{dist_lift(phi, identity_dist(phi.cod()))};
    w.unit = dist_leq(identity_dist(phi.dom()), dist_compose(w.right_adjoint, phi));
    w.counit = dist_leq(dist_compose(phi, w.right_adjoint), identity_dist(phi.cod()));
    return w;
}

bool is_cauchy_distributor(const Distributor& phi) { return cauchy_witness(phi).holds(); }

bool is_cauchy_presheaf(const Distributor& phi) {
    if (phi.dom()->size() != 1) throw DomainError("a presheaf has a one-object domain");
    return is_cauchy_distributor(phi);
}

FunctorResult converges_to(const Distributor& phi) {
    const auto& C = *phi.dom();
    const auto& A = *phi.cod();
    FunctorResult r;
    std::vector<std::size_t> map;
    for (std::size_t c = 0; c < C.size(); ++c) {
        std::optional<std::size_t> found;
        for (std::size_t a = 0; a < A.size() && !found; ++a) {
            if (A.type(a) != C.type(c)) continue;
            bool rep = true;
            for (std::size_t x = 0; x < A.size() && rep; ++x) rep = A.hom(x, a) == phi.at(x, c);
            if (rep) found = a;
        }
        if (!found) {
            r.failing = c;
            return r;
        }
        map.push_back(*found);
    }
    r.value = QFunctor(phi.dom(), phi.cod(), std::move(map));
    return r;
}

CauchyCompleteness cauchy_completeness(const CategoryRef& a, std::size_t cap) {
    CauchyCompleteness r;
    for (auto& phi : enumerate_presheaves(a, cap))
        if (is_cauchy_distributor(phi)) r.cauchy.push_back(std::move(phi));
    for (std::size_t i = 0; i < r.cauchy.size(); ++i) {
        auto f = converges_to(r.cauchy[i]);
        if (!f) {
            r.failing = i;
            return r;
        }
        r.witnesses.push_back((*f)(0));
    }
    r.holds = true;
    return r;
}

bool is_cauchy_complete(const CategoryRef& a, std::size_t cap) {
    return cauchy_completeness(a, cap).holds;
}

CauchyCompletion cauchy_completion(const CategoryRef& a, std::size_t cap) {
    std::vector<Distributor> cauchy;
    std::vector<Distributor> adjoints;
    for (auto& phi : enumerate_presheaves(a, cap)) {
        auto w = cauchy_witness(phi);
        if (!w.holds()) continue;
        cauchy.push_back(std::move(phi));
        adjoints.push_back(std::move(w.right_adjoint));
    }
    CauchyCompletion cc{presheaf_subcategory(a, std::move(cauchy)), std::move(adjoints), {}};
    std::vector<std::size_t> map;
    for (std::size_t x = 0; x < a->size(); ++x) {
        auto i = cc.completion.find(representable(a, x));
        if (!i) throw Error("internal: representable presheaf is not Cauchy");
        map.push_back(*i);
    }
    cc.unit = QFunctor(a, cc.completion.category, std::move(map));
    return cc;
}

Elem cauchy_hom_via_adjoint(const Distributor& psi_star, const Distributor& phi) {
    return dist_compose(psi_star, phi).at(0, 0);
}

bool check_self_equivalence_in_dist(const CauchyCompletion& cc) {
    const Distributor left = graph_left(cc.unit);    // A ⇸ A_cc
    const Distributor right = graph_right(cc.unit);  // A_cc ⇸ A
    return dist_compose(right, left) == identity_dist(cc.unit.dom()) &&
           dist_compose(left, right) == identity_dist(cc.unit.cod());
}

namespace {

using Fingerprint = std::pair<std::pair<ObjId, Elem>, std::vector<std::tuple<ObjId, Elem, Elem>>>;

Fingerprint fingerprint(const QCategory& c, std::size_t x) {
    std::vector<std::tuple<ObjId, Elem, Elem>> row;
    for (std::size_t y = 0; y < c.size(); ++y)
        if (y != x) row.emplace_back(c.type(y), c.hom(x, y), c.hom(y, x));
    std::sort(row.begin(), row.end());
    return {{c.type(x), c.hom(x, x)}, std::move(row)};
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const QCategory& a, const QCategory& b) {
    if (!same_base(a.base(), b.base())) throw DomainError("Morita comparison across bases");
    const std::size_t n = a.size();
    if (b.size() != n) return std::nullopt;
    std::vector<Fingerprint> fa, fb;
    for (std::size_t x = 0; x < n; ++x) {
        fa.push_back(fingerprint(a, x));
        fb.push_back(fingerprint(b, x));
    }
    {
        auto sa = fa, sb = fb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<std::size_t> map(n);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || fa[i] != fb[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a.hom(i, k) == b.hom(j, map[k]) && a.hom(k, i) == b.hom(map[k], j);
            if (!ok) continue;
            used[j] = 1;
            map[i] = j;
            if (go(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

MoritaResult morita_equivalent(const CategoryRef& a, const CategoryRef& b, std::size_t cap) {
    if (!same_base(a->base(), b->base())) throw DomainError("Morita comparison across bases");
    MoritaResult r;
    auto ca = cauchy_completion(a, cap);
    auto cb = cauchy_completion(b, cap);
    r.left = ca.category();
    r.right = cb.category();
    if (r.left->size() != r.right->size()) {
        r.reason = "Cauchy completions have " + std::to_string(r.left->size()) + " and " +
                   std::to_string(r.right->size()) + " objects";
        return r;
    }
    auto iso = find_isomorphism(*r.left, *r.right);
    if (!iso) {
        r.reason = "no type- and hom-preserving bijection between the Cauchy completions";
        return r;
    }
    r.equivalent = true;
    r.bijection = std::move(*iso);
    return r;
}

CauchyColimCheck cauchy_colim_check(const CategoryRef& a, std::size_t cap, std::size_t functor_cap) {
    CauchyColimCheck r;
    std::vector<Distributor> weights;
    for (auto& phi : enumerate_presheaves(a, cap))
        if (is_cauchy_distributor(phi)) weights.push_back(std::move(phi));
    const auto endos = enumerate_functors(a, a, functor_cap);
    for (std::size_t w = 0; w < weights.size(); ++w)
        for (std::size_t f = 0; f < endos.size(); ++f) {
            ++r.checked;
            if (!weighted_colim(weights[w], endos[f])) {
                r.failing_weight = w;
                r.failing_diagram = f;
                return r;
            }
        }
    r.holds = true;
    return r;
}

}  // namespace qk
