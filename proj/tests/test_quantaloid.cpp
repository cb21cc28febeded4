#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include "qk/quantaloid.hpp"

using namespace qk;

namespace {

std::vector<QuantaloidRef> corpus() {
    return {bool2(),
            rel_locale(chain_lattice(3), "L3"),
            rel_locale(lattice_from_order({"0", "l", "r", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), "D4"),
            tropical_trunc(3),
            random_quantaloid(1, 2, 4),
            random_quantaloid(2, 2, 4),
            random_quantaloid(3, 3, 4)};
}

bool adjoint(const Quantaloid& q, ObjId a, ObjId b, Elem f, Elem g) {
    return q.hom(a, a).leq(q.identity(a), q.compose(a, b, a, g, f)) &&
           q.hom(b, b).leq(q.compose(b, a, b, f, g), q.identity(b));
}

}  // namespace

TEST_CASE("generated quantaloids satisfy the axioms") {
    for (const auto& q : corpus()) {
        auto r = validate_quantaloid(q->candidate());
        CHECK_MESSAGE(r.ok(), r.summary());
    }
}

TEST_CASE("random quantaloids are deterministic and respect the hom cap") {
    auto a = random_quantaloid(5, 2, 4), b = random_quantaloid(5, 2, 4);
    CHECK(*a == *b);
    for (ObjId x = 0; x < a->object_count(); ++x)
        for (ObjId y = 0; y < a->object_count(); ++y) CHECK(a->hom(x, y).size() <= 4);
}

TEST_CASE("residuals agree with the scanning oracle") {
    for (const auto& qr : corpus()) {
        const auto& q = *qr;
        const auto n = q.object_count();
        for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
                for (ObjId c = 0; c < n; ++c) {
                    for (Elem g = 0; g < q.hom(b, c).size(); ++g)
                        for (Elem h = 0; h < q.hom(a, c).size(); ++h) CHECK(q.lift(a, b, c, g, h) == oracle::lift(q, a, b, c, g, h));
                    for (Elem f = 0; f < q.hom(a, b).size(); ++f)
                        for (Elem h = 0; h < q.hom(a, c).size(); ++h) CHECK(q.ext(a, b, c, f, h) == oracle::ext(q, a, b, c, f, h));
                }
    }
}

TEST_CASE("adjoints found by the library match a brute search") {
    for (const auto& qr : corpus()) {
        const auto& q = *qr;
        for (ObjId a = 0; a < q.object_count(); ++a)
            for (ObjId b = 0; b < q.object_count(); ++b)
                for (Elem f = 0; f < q.hom(a, b).size(); ++f) {
                    std::optional<Elem> brute;
                    for (Elem g = 0; g < q.hom(b, a).size() && !brute; ++g)
                        if (adjoint(q, a, b, f, g)) brute = g;
                    auto r = q.right_adjoint_of({a, b, f});
                    REQUIRE(r.has_value() == brute.has_value());
                    if (r) CHECK(r->elem == *brute);
                }
    }
}

TEST_CASE("bool2 and tropical arithmetic") {
    const auto b = bool2();
    CHECK(b->compose(0, 0, 0, 1, 1) == 1);
    CHECK(b->compose(0, 0, 0, 1, 0) == 0);
    CHECK(b->lift(0, 0, 0, 0, 0) == 1);  // 0 => 0

    const auto t = tropical_trunc(3);
    const auto& l = t->hom(0, 0);
    CHECK(l.label(l.bottom()) == "3");  // larger distances are lower
    CHECK(t->identity(0) == *l.find("0"));
    CHECK(t->compose(0, 0, 0, *l.find("2"), *l.find("2")) == *l.find("3"));
    // truncated subtraction: [g,h] = max(h - g, 0)
    CHECK(t->lift(0, 0, 0, *l.find("1"), *l.find("3")) == *l.find("2"));
    CHECK(t->lift(0, 0, 0, *l.find("2"), *l.find("1")) == *l.find("0"));
}

TEST_CASE("rel_locale rejects lattices that are not distributive") {
    const auto m3 = lattice_from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(distributivity_failure(m3).has_value());
    CHECK_THROWS_AS(rel_locale(m3), DomainError);
    CHECK_FALSE(distributivity_failure(chain_lattice(4)).has_value());
}

TEST_CASE("rel_locale has the expected hom lattices") {
    const auto q = rel_locale(chain_lattice(3));
    CHECK(q->object_count() == 3);
    // hom(u, v) is the down-set of u ∧ v
    CHECK(q->hom(0, 2).size() == 1);
    CHECK(q->hom(1, 2).size() == 2);
    CHECK(q->hom(2, 2).size() == 3);
}

TEST_CASE("opposite quantaloid reverses composition") {
    for (const auto& qr : corpus()) {
        const auto& q = *qr;
        const auto op = opposite_quantaloid(q);
        const auto n = q.object_count();
        CHECK(validate_quantaloid(op->candidate()).ok());
        for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
                for (ObjId c = 0; c < n; ++c)
                    for (Elem g = 0; g < q.hom(b, c).size(); ++g)
                        for (Elem f = 0; f < q.hom(a, b).size(); ++f)
                            CHECK(q.compose(a, b, c, g, f) == op->compose(c, b, a, f, g));
        CHECK(*opposite_quantaloid(*op) == q);
    }
}

TEST_CASE("validation reports a broken composition table") {
    auto c = bool2()->candidate();
    c.compose[0] = {1, 1, 1, 1};  // 0∘0 = 1 breaks the bottom law
    CHECK_FALSE(validate_quantaloid(c).ok());
    CHECK_THROWS_AS(Quantaloid::make(c), ValidationError);

    auto d = bool2()->candidate();
    d.identities[0] = Elem{0};
    CHECK_FALSE(validate_quantaloid(d).ok());

    auto e = bool2()->candidate();
    e.compose[0].pop_back();
    CHECK_THROWS_AS(validate_quantaloid(e), StructuralError);
}

TEST_CASE("arrow lookup by label") {
    const auto q = rel_locale(chain_lattice(3));
    CHECK(q->arrow(1, 2, "1").elem == *q->hom(1, 2).find("1"));
    CHECK_THROWS_AS(q->arrow(1, 2, "2"), DomainError);
    CHECK_THROWS_AS(q->arrow(7, 2, "0"), DomainError);
}
