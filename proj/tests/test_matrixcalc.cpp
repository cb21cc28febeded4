#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include "qk/completion.hpp"
#include "qk/matrixcalc.hpp"

using namespace qk;

namespace {

std::vector<QuantaloidRef> bases() {
    return {bool2(), tropical_trunc(3), rel_locale(chain_lattice(3)), random_quantaloid(7, 2, 4)};
}

std::vector<CategoryRef> corpus_categories() {
    std::vector<CategoryRef> out;
    for (const auto& f : oracle::fixture_names()) {
        auto doc = oracle::load(f);
        for (const auto& n : doc.names("category")) out.push_back(doc.categories.at(n));
    }
    return out;
}

}  // namespace

TEST_CASE("identity matrices on same-typed elements are diagonal") {
    for (const auto& q : bases()) {
        const TypedSet x{{"y", "z", "w"}, {0, 0, q->object_count() - 1}};
        const auto id = matr_identity(q, x);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const auto want = i == j ? q->identity(x.types[i]) : q->hom(x.types[j], x.types[i]).bottom();
                CHECK(id.at(i, j) == want);
            }
        const auto m = matr_bottom(q, x, x);
        CHECK(matr_compose(id, m) == m);
        CHECK(matr_leq(m, id));
    }
}

TEST_CASE("matrix composition matches distributor composition") {
    for (const auto& a : corpus_categories()) {
        if (distributor_estimate(*a, *a) > (std::size_t{1} << 16)) continue;
        const auto ds = enumerate_distributors(a, a, std::size_t{1} << 16);
        const std::size_t k = std::min<std::size_t>(ds.size(), 12);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                CHECK(matrix_of(dist_compose(ds[i], ds[j])) == matr_compose(matrix_of(ds[i]), matrix_of(ds[j])));
        // a category is a monad in Matr
        const auto m = matrix_of(*a);
        CHECK(matr_compose(m, m) == m);
        CHECK(matr_leq(matr_identity(a->base_ref(), a->objects()), m));
    }
}

TEST_CASE("bool2 matrix composition is the relational product") {
    const auto q = bool2();
    std::mt19937_64 rng(11);
    const TypedSet x{{"a", "b", "c"}, {0, 0, 0}};
    for (int k = 0; k < 30; ++k) {
        std::vector<Elem> m(9), n(9);
        for (auto& e : m) e = rng() % 2;
        for (auto& e : n) e = rng() % 2;
        const auto r = matr_compose(QMatrix(q, x, x, n), QMatrix(q, x, x, m));
        for (std::size_t z = 0; z < 3; ++z)
            for (std::size_t i = 0; i < 3; ++i) {
                bool any = false;
                for (std::size_t y = 0; y < 3; ++y) any = any || (n[z * 3 + y] && m[y * 3 + i]);
                CHECK((r.at(z, i) == 1) == any);
            }
    }
}

TEST_CASE("malformed matrices are rejected") {
    const auto q = bool2();
    const TypedSet x{{"a", "b"}, {0, 0}};
    const TypedSet y{{"c"}, {0}};
    CHECK_THROWS_AS(QMatrix(q, x, x, {1, 0, 0}), StructuralError);
    CHECK_THROWS_AS(QMatrix(q, x, x, {1, 0, 0, 2}), StructuralError);
    CHECK_THROWS_AS(QMatrix(q, TypedSet{{"a"}, {3}}, y, {0}), StructuralError);
    CHECK_THROWS_AS(matr_compose(matr_identity(q, x), matr_identity(q, y)), DomainError);
    CHECK_THROWS_AS(matr_join(matr_identity(q, x), matr_bottom(q, x, y)), DomainError);
}

TEST_CASE("direct sums satisfy their equations") {
    for (const auto& q : bases()) {
        MatrixCalculus mc{q};
        std::vector<TypedSet> fam;
        for (ObjId t = 0; t < q->object_count(); ++t) fam.push_back({{"x"}, {t}});
        const ObjId top = q->object_count() - 1;
        fam.push_back({{"y", "z"}, {top, top}});
        const auto ds = direct_sum(q, fam);
        CHECK(ds.sum.size() == q->object_count() + 2);
        CHECK(verify_direct_sum(mc, fam, ds.sum, ds.projections, ds.coprojections));
        // a lowered coprojection breaks the sum, unless its component is trivial
        const auto last = fam.size() - 1;
        auto s = ds.coprojections;
        s[last] = matr_bottom(q, fam[last], ds.sum);
        if (q->hom(top, top).size() > 1) CHECK_FALSE(verify_direct_sum(mc, fam, ds.sum, ds.projections, s));
    }
}

TEST_CASE("monads in Bim split") {
    for (const auto& q : bases()) {
        BaseCalculus calc{q};
        BimoduleCalculus<BaseCalculus> bim{calc};
        std::size_t splits = 0;
        for (ObjId a = 0; a < q->object_count(); ++a)
            for (const auto& t : enumerate_monads(calc, a)) {
                CHECK(is_monad(calc, t));
                for (const auto& s : calc.arrows(a, a, 1u << 16)) {
                    const Bimodule<BaseCalculus> sb{t, t, s};
                    const bool ok = is_bimodule(calc, t, t, s) && bim.leq(bim.compose(sb, sb), sb) &&
                                    bim.leq(bim.identity(t), sb);
                    if (!ok) {
                        CHECK_THROWS_AS(split_monad(bim, t, s), DomainError);
                        continue;
                    }
                    CHECK(split_monad(bim, t, s).verified);
                    ++splits;
                }
            }
        CHECK(splits > 0);
    }
}

TEST_CASE("shapes validate and reject broken composition tables") {
    for (const auto& s : {Shape::discrete({"a", "b"}), Shape::generic_object(), Shape::parallel_pair(), Shape::chain(3)})
        CHECK(s.validate().ok());
    CHECK(Shape::chain(3).arrows.size() == 6);
    auto broken = Shape::chain(3);
    broken.composition.erase(broken.composition.begin());
    CHECK_FALSE(broken.validate().ok());
    auto wrong_id = Shape::parallel_pair();
    wrong_id.identities[0] = *wrong_id.find_arrow("u");
    CHECK_FALSE(wrong_id.validate().ok());
    CHECK_THROWS_AS(Shape::from_generators({"0"}, {{"f", 0, 0}}, {}), StructuralError);
    const auto op = Shape::chain(2).opposite();
    CHECK(op.validate().ok());
    CHECK(op.hom(1, 0).size() == 1);
    CHECK(op.hom(0, 1).empty());
}

TEST_CASE("lax and oplax transformations swap under opposites") {
    for (const auto& q : bases()) {
        BaseCalculus calc{q};
        BaseCalculus opc{opposite_quantaloid(*q)};
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const auto f = random_lax_functor(q, seed, 2);
            CHECK(validate_lax_functor(calc, f).ok());
            const auto g = random_lax_functor_on(q, f.shape, seed + 100);
            const auto lax = enumerate_transfos(calc, f, g, TransfoKind::lax, 1u << 14);
            const auto oplax = enumerate_transfos(opc, opposite_lax_functor(g, opc), opposite_lax_functor(f, opc),
                                                  TransfoKind::oplax, 1u << 14);
            CHECK(lax.size() == oplax.size());
        }
    }
}

TEST_CASE("lax colimits in Dist") {
    for (const auto& q : bases()) {
        BaseCalculus calc{q};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto f = random_lax_functor(q, seed, 2);
            const auto lc = lax_colimit_in_dist(calc, f);
            CHECK(lc.verified());
            const auto apexes = default_apex_set(lc, {});
            CHECK(verify_lax_colimit_universality(lc, apexes, 1u << 14).holds);

            // lowering one coprojection to bottom must be detected
            auto broken = lc;
            broken.coprojections[0] = dist_bottom(broken.coprojections[0].dom(), broken.coprojections[0].cod());
            const bool was_bottom = broken.coprojections[0] == lc.coprojections[0];
            if (!was_bottom) CHECK_FALSE(verify_lax_colimit_universality(broken, apexes, 1u << 14).holds);
        }
        CHECK_THROWS_AS(verify_lax_colimit_universality(lax_colimit_in_dist(calc, random_lax_functor(q, 1, 2)), {}),
                        DomainError);
    }
}

TEST_CASE("distributors are bimodules of matrices") {
    std::vector<CategoryRef> cats = corpus_categories();
    std::vector<Distributor> dists;
    for (const auto& a : cats) {
        dists.push_back(identity_dist(a));
        for (const auto& p : enumerate_presheaves(a)) dists.push_back(p);
    }
    const auto rep = dist_equals_bim_matr(cats, dists);
    CHECK(rep.holds);
    for (const auto& r : rep.rows) CHECK_MESSAGE(r.agrees, r.what);
    for (const auto& phi : dists) CHECK(is_bimodule(MatrixCalculus{phi.dom()->base_ref()},
                                                    monad_of(*phi.dom()), monad_of(*phi.cod()), matrix_of(phi)));
}
