#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include "qk/enriched.hpp"
#include "qk/laws.hpp"

using namespace qk;

namespace {

std::vector<CategoryRef> bool2_categories() {
    std::vector<CategoryRef> out;
    for (const char* f : {"bool2.qk", "chain-vs-doubled.qk", "antichain.qk"}) {
        auto doc = oracle::load(f);
        for (const auto& n : doc.names("category")) out.push_back(doc.categories.at(n));
    }
    return out;
}

// Every map between the object sets, counted when it is monotone.
std::size_t monotone_maps(const QCategory& a, const QCategory& b) {
    const auto la = oracle::bool2_order(a), lb = oracle::bool2_order(b);
    std::size_t count = 0;
    std::vector<std::size_t> m(a.size(), 0);
    while (true) {
        bool ok = true;
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < a.size(); ++y)
                if (la[x * a.size() + y] && !lb[m[x] * b.size() + m[y]]) ok = false;
        count += ok;
        std::size_t i = 0;
        while (i < m.size() && ++m[i] == b.size()) m[i++] = 0;
        if (i == m.size()) break;
    }
    return count;
}

// Relations R(b,a) with b' >= b, R(b',a) implies R(b,a) and R(b,a'), a' >= a implies R(b,a).
std::size_t bool2_distributors(const QCategory& a, const QCategory& b) {
    const auto la = oracle::bool2_order(a), lb = oracle::bool2_order(b);
    const std::size_t cells = a.size() * b.size();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
        auto r = [&](std::size_t y, std::size_t x) { return (mask >> (y * a.size() + x) & 1) != 0; };
        bool ok = true;
        for (std::size_t y = 0; y < b.size(); ++y)
            for (std::size_t x = 0; x < a.size(); ++x) {
                for (std::size_t y2 = 0; y2 < b.size(); ++y2)
                    if (lb[y * b.size() + y2] && r(y2, x) && !r(y, x)) ok = false;
                for (std::size_t x2 = 0; x2 < a.size(); ++x2)
                    if (r(y, x2) && la[x2 * a.size() + x] && !r(y, x)) ok = false;
            }
        count += ok;
    }
    return count;
}

CategoryRef discrete(const QuantaloidRef& q, std::size_t n) {
    TypedSet objs;
    std::vector<Elem> homs(n * n, q->hom(0, 0).bottom());
    for (std::size_t i = 0; i < n; ++i) {
        objs.labels.push_back("x" + std::to_string(i));
        objs.types.push_back(0);
        homs[i * n + i] = q->identity(0);
    }
    return QCategory::make(q, objs, homs);
}

}  // namespace

TEST_CASE("fixture categories over bool2 are preorders") {
    for (const auto& a : bool2_categories()) {
        CHECK(a->validate().ok());
        const auto le = oracle::bool2_order(*a);
        const auto n = a->size();
        for (std::size_t x = 0; x < n; ++x) {
            CHECK(le[x * n + x]);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (le[x * n + y] && le[y * n + z]) CHECK(le[x * n + z]);
        }
    }
}

TEST_CASE("a non-transitive matrix is rejected") {
    const auto q = bool2();
    TypedSet objs{{"a", "b", "c"}, {0, 0, 0}};
    // a <= b, b <= c but not a <= c
    std::vector<Elem> m = {1, 1, 0, 0, 1, 1, 0, 0, 1};
    CHECK_THROWS_AS(QCategory::make(q, objs, m), ValidationError);
    const auto closed = close_category(q, objs, m);
    CHECK(closed->validate().ok());
    CHECK(closed->hom(0, 2) == 1);
}

TEST_CASE("functor enumeration counts monotone maps") {
    const auto cats = bool2_categories();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            const auto fs = enumerate_functors(a, b);
            CHECK(fs.size() == monotone_maps(*a, *b));
            for (const auto& f : fs) CHECK(f.validate().ok());
        }
}

TEST_CASE("distributor enumeration counts two-sided ideals") {
    const auto cats = bool2_categories();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            if (a->size() * b->size() > 16) continue;
            CHECK(enumerate_distributors(a, b, std::size_t{1} << 16).size() == bool2_distributors(*a, *b));
        }
}

TEST_CASE("composition over bool2 is the relational product") {
    const auto cats = bool2_categories();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            if (a->size() * b->size() > 8) continue;
            for (const auto& c : cats) {
                if (b->size() * c->size() > 8) continue;
                const auto phis = enumerate_distributors(a, b);
                const auto psis = enumerate_distributors(b, c);
                for (const auto& phi : phis)
                    for (const auto& psi : psis) {
                        const auto r = dist_compose(psi, phi);
                        for (std::size_t z = 0; z < c->size(); ++z)
                            for (std::size_t x = 0; x < a->size(); ++x) {
                                bool any = false;
                                for (std::size_t y = 0; y < b->size(); ++y) any = any || (psi.at(z, y) == 1 && phi.at(y, x) == 1);
                                CHECK((r.at(z, x) == 1) == any);
                            }
                    }
            }
        }
}

TEST_CASE("tropical composition is the capped min-plus product") {
    const auto t = tropical_trunc(3);
    const auto& l = t->hom(0, 0);
    const auto d = discrete(t, 4);
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 20; ++k) {
        std::vector<std::size_t> m(16), n(16);
        for (auto& x : m) x = rng() % 4;
        for (auto& x : n) x = rng() % 4;
        auto as_elems = [&](const std::vector<std::size_t>& v) {
            std::vector<Elem> e;
            for (auto x : v) e.push_back(*l.find(std::to_string(x)));
            return e;
        };
        // entries (b,a): row b of the matrix is the target
        const Distributor phi = make_distributor(d, d, as_elems(n));
        const Distributor psi = make_distributor(d, d, as_elems(m));
        const auto r = dist_compose(psi, phi);
        const auto expect = oracle::minplus(m, n, 4, 3);
        for (std::size_t i = 0; i < 16; ++i) CHECK(l.label(r.entries()[i]) == std::to_string(expect[i]));
    }
}

TEST_CASE("identity distributors are neutral and composition is associative") {
    for (const auto& a : bool2_categories()) {
        if (a->size() > 3) continue;
        const auto ds = enumerate_distributors(a, a);
        const auto id = identity_dist(a);
        for (const auto& x : ds) {
            CHECK(dist_compose(id, x) == x);
            CHECK(dist_compose(x, id) == x);
            for (const auto& y : ds)
                for (const auto& z : ds) CHECK(dist_compose(dist_compose(x, y), z) == dist_compose(x, dist_compose(y, z)));
        }
    }
}

TEST_CASE("residuals of distributors are the largest solutions") {
    for (const auto& a : bool2_categories()) {
        if (a->size() > 2) continue;
        const auto ds = enumerate_distributors(a, a);
        for (const auto& psi : ds)
            for (const auto& theta : ds) {
                const auto l = dist_lift(psi, theta);
                const auto e = dist_ext(psi, theta);
                for (const auto& x : ds) {
                    CHECK(dist_leq(dist_compose(psi, x), theta) == dist_leq(x, l));
                    CHECK(dist_leq(dist_compose(x, psi), theta) == dist_leq(x, e));
                }
            }
    }
}

TEST_CASE("graphs of functors are adjoint and adjunctions are Galois connections") {
    for (const auto& a : bool2_categories()) {
        const auto le = oracle::bool2_order(*a);
        const auto n = a->size();
        const auto fs = enumerate_functors(a, a);
        for (const auto& f : fs) {
            CHECK(check_dist_adjunction(graph_left(f), graph_right(f)));
            for (const auto& g : fs) {
                bool galois = true;
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) galois = galois && le[f(x) * n + y] == le[x * n + g(y)];
                CHECK(functor_adjoint_pair(f, g) == galois);
            }
        }
    }
}

TEST_CASE("equivalences and skeletal quotients") {
    auto doc = oracle::load("chain-vs-doubled.qk");
    const auto& f = doc.functors.at("F");
    const auto& g = doc.functors.at("G");
    CHECK(is_equivalence(f));
    CHECK(fully_faithful(f));
    CHECK(essentially_surjective(g));
    CHECK(functors_isomorphic(compose_functors(f, g), identity_functor(doc.categories.at("B"))));

    const auto s = skeletal_quotient(doc.categories.at("B"));
    CHECK(s.category->size() == 2);
    CHECK(is_skeletal(*s.category));
    CHECK_FALSE(is_skeletal(*doc.categories.at("B")));
    CHECK(is_equivalence(s.projection));
    CHECK(objects_isomorphic(*doc.categories.at("B"), 0, 1));
    CHECK_FALSE(objects_isomorphic(*doc.categories.at("B"), 0, 2));
}

TEST_CASE("opposites reverse the order and are involutive") {
    for (const auto& a : bool2_categories()) {
        const auto op = opposite_category(a);
        const auto n = a->size();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) CHECK(op->hom(x, y) == a->hom(y, x));
        CHECK(same_category(*opposite_category(op), *a));
    }
}

TEST_CASE("random categories are valid and deterministic") {
    for (const auto& q : {bool2(), tropical_trunc(3), random_quantaloid(1, 2, 4), rel_locale(chain_lattice(3))})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto a = random_category(q, seed);
            CHECK(a->validate().ok());
            CHECK(same_category(*a, *random_category(q, seed)));
        }
}

TEST_CASE("mismatched arguments raise errors") {
    auto doc = oracle::load("chain-vs-doubled.qk");
    const auto& a = doc.categories.at("A");
    const auto& b = doc.categories.at("B");
    CHECK_THROWS_AS(dist_compose(identity_dist(a), identity_dist(b)), DomainError);
    CHECK_THROWS_AS(make_functor(a, a, {1, 0}), ValidationError);  // reverses a <= b
    CHECK_THROWS_AS(Distributor(a, b, {1}), StructuralError);
    CHECK_THROWS_AS(enumerate_distributors(b, b, 10), CapExceeded);
}
