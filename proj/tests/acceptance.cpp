// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "cli_contract.hpp"
#include "oracles.hpp"
#include "qk/cauchy.hpp"
#include "qk/laws.hpp"

using namespace qk;

namespace {

struct Named {
    std::string name;
    CategoryRef a;
};

struct Corpus {
    std::vector<std::pair<std::string, QkDocument>> docs;
    std::vector<std::pair<std::string, QuantaloidRef>> quantaloids;
    std::vector<Named> categories;
};

Corpus load_corpus() {
    Corpus c;
    for (const auto& f : oracle::fixture_names()) {
        auto doc = oracle::load(f);
        for (const auto& n : doc.names("quantaloid")) c.quantaloids.emplace_back(f + ":" + n, doc.quantaloids.at(n));
        for (const auto& n : doc.names("category")) c.categories.push_back({f + ":" + n, doc.categories.at(n)});
        c.docs.emplace_back(f, std::move(doc));
    }
    return c;
}

// First failure wins; empty means the criterion holds.
struct Verdict {
    std::string failure;
    std::string note;
    void fail(const std::string& s) {
        if (failure.empty()) failure = s;
    }
};

std::string law_failures(const LawReport& r, bool skips_fail) {
    for (const auto& row : r.rows)
        if (row.status == LawStatus::fail || (skips_fail && row.status == LawStatus::skipped))
            return row.suite + "/" + row.law + " [" + row.instance + "]: " + row.detail;
    return {};
}

// Runs the named suites over every fixture document.
void suites(const Corpus& c, std::initializer_list<const char*> names, Verdict& v, bool skips_fail = true) {
    std::size_t rows = 0;
    for (const char* s : names)
        for (const auto& [f, doc] : c.docs) {
            LawOptions o;
            o.suite = s;
            const auto rep = run_laws(doc, o);
            rows += rep.rows.size();
            if (rep.rows.empty()) v.fail(std::string("suite ") + s + " produced no rows on " + f);
            if (auto e = law_failures(rep, skips_fail); !e.empty()) v.fail(f + ": " + e);
        }
    v.note += std::to_string(rows) + " law rows";
}

bool is_bool2(const QCategory& a) { return a.base() == *bool2(); }

// ------------------------------------------------------------------ criteria

Verdict residual_suite(const Corpus& c) {
    Verdict v;
    suites(c, {"lemma04"}, v);
    return v;
}

Verdict dist_quantaloid(const Corpus& c) {
    Verdict v;
    suites(c, {"prop4"}, v);
    // distributors between different categories over one base
    std::size_t triples = 0;
    for (const auto& x : c.categories)
        for (const auto& y : c.categories) {
            if (x.a->base_ref() != y.a->base_ref()) continue;
            if (distributor_estimate(*x.a, *y.a) > 4096 || distributor_estimate(*y.a, *x.a) > 4096) continue;
            auto xy = enumerate_distributors(x.a, y.a, 4096);
            auto yx = enumerate_distributors(y.a, x.a, 4096);
            if (xy.size() > 8) xy.resize(8);
            if (yx.size() > 8) yx.resize(8);
            for (const auto& f : xy) {
                if (!(dist_compose(identity_dist(y.a), f) == f) || !(dist_compose(f, identity_dist(x.a)) == f))
                    v.fail("identity law on " + x.name + " -> " + y.name);
                for (const auto& g : yx)
                    for (const auto& h : xy) {
                        ++triples;
                        if (!(dist_compose(h, dist_compose(g, f)) == dist_compose(dist_compose(h, g), f)))
                            v.fail("associativity across " + x.name + ", " + y.name);
                        if (!(dist_compose(g, dist_join(f, h)) == dist_join(dist_compose(g, f), dist_compose(g, h))))
                            v.fail("distributivity across " + x.name + ", " + y.name);
                    }
            }
        }
    v.note += ", " + std::to_string(triples) + " cross-category triples";
    return v;
}

Verdict graphs(const Corpus& c) {
    Verdict v;
    suites(c, {"prop6", "prop8"}, v);
    std::size_t n = 0;
    for (const auto& x : c.categories)
        for (const auto& f : enumerate_functors(x.a, x.a)) {
            ++n;
            if (!check_dist_adjunction(graph_left(f), graph_right(f))) v.fail("graph adjunction on " + x.name);
        }
    v.note += ", " + std::to_string(n) + " endofunctors";
    return v;
}

Verdict yoneda_criterion(const Corpus& c) {
    Verdict v;
    std::size_t presheaves = 0, cats = 0;
    for (const auto& x : c.categories) {
        std::vector<Distributor> ps;
        try {
            ps = enumerate_presheaves(x.a, 64);
        } catch (const CapExceeded&) {
            continue;
        }
        ++cats;
        const auto pa = presheaf_category(x.a, 64);
        const auto y = yoneda(pa);
        for (std::size_t i = 0; i < pa.presheaves.size(); ++i) {
            const auto& phi = pa.presheaves[i];
            ++presheaves;
            for (std::size_t a = 0; a < x.a->size(); ++a)
                if (presheaf_hom(representable(x.a, a), phi) != phi.at(a, 0)) v.fail("Yoneda on " + x.name);
            const auto col = weighted_colim(phi, y);
            if (!col || (*col)(0) != i) v.fail("colim(phi, Y) on " + x.name);
        }
    }
    if (cats != c.categories.size()) v.fail("a corpus category has more than 64 presheaves");
    v.note = std::to_string(presheaves) + " presheaves on " + std::to_string(cats) + " categories";
    return v;
}

Verdict complete_cocomplete(const Corpus& c) {
    Verdict v;
    suites(c, {"prop1004", "prop1005"}, v);
    std::size_t yes = 0;
    for (const auto& x : c.categories) {
        const bool co = is_cocomplete(x.a);
        if (co != is_complete(x.a)) v.fail("complete and cocomplete differ on " + x.name);
        yes += co;
    }
    v.note += ", " + std::to_string(yes) + "/" + std::to_string(c.categories.size()) + " cocomplete";
    return v;
}

Verdict presheaf_cocomplete(const Corpus& c) {
    Verdict v;
    suites(c, {"prop107"}, v);
    std::size_t exhaustive = 0, sampled = 0;
    for (const auto& x : c.categories) {
        const auto pa = presheaf_category(x.a);
        try {
            enumerate_presheaves(pa.category);
            ++exhaustive;
        } catch (const CapExceeded&) {
            ++sampled;
        }
    }
    v.note += ", P(PA) exhaustive on " + std::to_string(exhaustive) + ", sampled on " + std::to_string(sampled);
    return v;
}

Verdict cauchy_identity(const Corpus& c) {
    Verdict v;
    for (const auto& x : c.categories) {
        const auto cc = cauchy_completion(x.a);
        if (!check_self_equivalence_in_dist(cc)) v.fail("A vs A_cc composites on " + x.name);
        if (!is_cauchy_complete(cc.category())) v.fail("A_cc not Cauchy complete on " + x.name);
    }
    v.note = std::to_string(c.categories.size()) + " categories";
    return v;
}

Verdict bool2_sanity(const Corpus& c) {
    Verdict v;
    std::size_t cats = 0;
    for (const auto& x : c.categories) {
        if (!is_bool2(*x.a)) continue;
        ++cats;
        const auto n = x.a->size();
        const auto le = oracle::bool2_order(*x.a);
        const auto downs = oracle::downsets(le, n);
        const auto ps = enumerate_presheaves(x.a);
        if (ps.size() != downs.size()) v.fail("presheaf count on " + x.name);
        std::set<std::vector<bool>> principal, cauchy;
        for (std::size_t p = 0; p < n; ++p) {
            std::vector<bool> d(n);
            for (std::size_t y = 0; y < n; ++y) d[y] = le[y * n + p];
            principal.insert(d);
        }
        for (const auto& p : ps) {
            std::vector<bool> d(n);
            for (std::size_t y = 0; y < n; ++y) d[y] = p.at(y, 0) == 1;
            if (std::find(downs.begin(), downs.end(), d) == downs.end()) v.fail("presheaf is not a down-set on " + x.name);
            if (is_cauchy_presheaf(p)) cauchy.insert(d);
        }
        if (cauchy != principal) v.fail("Cauchy presheaves differ from principal down-sets on " + x.name);
        if (!is_cauchy_complete(x.a)) v.fail(x.name + " is not Cauchy complete");
    }
    if (cats == 0) v.fail("no bool2 categories in the corpus");
    v.note = std::to_string(cats) + " bool2 categories";
    return v;
}

Verdict morita(const Corpus& c) {
    Verdict v;
    for (const auto& x : c.categories) {
        const auto s = morita_equivalent(x.a, skeletal_quotient(x.a).category);
        if (!s.equivalent || s.bijection.empty()) v.fail("A vs skeletal quotient on " + x.name + ": " + s.reason);
        const auto k = morita_equivalent(x.a, cauchy_completion(x.a).category());
        if (!k.equivalent || k.bijection.empty()) v.fail("A vs A_cc on " + x.name + ": " + k.reason);
    }
    const auto doc = oracle::load("chain-vs-doubled.qk");
    if (morita_equivalent(doc.categories.at("A"), doc.categories.at("D")).equivalent)
        v.fail("2-chain and 2-antichain reported Morita equivalent");
    if (!morita_equivalent(doc.categories.at("A"), doc.categories.at("B")).equivalent)
        v.fail("2-chain and its doubling reported inequivalent");
    v.note = std::to_string(c.categories.size()) + " categories";
    return v;
}

Verdict appendix(const Corpus& c) {
    Verdict v;
    std::vector<CategoryRef> cats;
    std::vector<Distributor> dists;
    for (const auto& x : c.categories) {
        cats.push_back(x.a);
        dists.push_back(identity_dist(x.a));
        for (const auto& p : enumerate_presheaves(x.a)) dists.push_back(p);
    }
    for (const auto& [f, doc] : c.docs)
        for (const auto& [n, d] : doc.distributors) dists.push_back(d);
    const auto bm = dist_equals_bim_matr(cats, dists);
    for (const auto& r : bm.rows)
        if (!r.agrees) v.fail("Dist = Bim(Matr): " + r.what);
    std::size_t lax = 0, splits = 0;
    for (const auto& [name, q] : c.quantaloids) {
        MatrixCalculus mc{q};
        std::vector<TypedSet> fam;
        for (ObjId t = 0; t < q->object_count(); ++t) fam.push_back({{"x"}, {t}});
        fam.push_back({{"y", "z"}, {0, 0}});
        const auto ds = direct_sum(q, fam);
        if (!verify_direct_sum(mc, fam, ds.sum, ds.projections, ds.coprojections)) v.fail("direct sum over " + name);

        BaseCalculus calc{q};
        BimoduleCalculus<BaseCalculus> bim{calc};
        for (ObjId a = 0; a < q->object_count(); ++a)
            for (const auto& t : enumerate_monads(calc, a))
                for (const auto& s : calc.arrows(a, a, 1u << 16)) {
                    const Bimodule<BaseCalculus> sb{t, t, s};
                    if (!is_bimodule(calc, t, t, s) || !bim.leq(bim.compose(sb, sb), sb) || !bim.leq(bim.identity(t), sb))
                        continue;
                    ++splits;
                    if (!split_monad(bim, t, s).verified) v.fail("monad splitting over " + name);
                }

        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto f = random_lax_functor(q, seed, 2);
            const auto lc = lax_colimit_in_dist(calc, f);
            ++lax;
            if (!lc.sums_to_identity || !lc.projections_match) v.fail("lax colimit equations over " + name);
            if (!verify_lax_colimit_universality(lc, default_apex_set(lc, {}), 1u << 14).holds)
                v.fail("lax colimit universality over " + name);
        }
    }
    v.note = std::to_string(bm.rows.size()) + " Bim/Matr rows, " + std::to_string(splits) + " splittings, " +
             std::to_string(lax) + " lax functors";
    return v;
}

Verdict tropical() {
    Verdict v;
    const auto t = tropical_trunc(3);
    const auto& l = t->hom(0, 0);
    TypedSet objs;
    std::vector<Elem> homs(16, l.bottom());
    for (std::size_t i = 0; i < 4; ++i) {
        objs.labels.push_back("x" + std::to_string(i));
        objs.types.push_back(0);
        homs[i * 4 + i] = t->identity(0);
    }
    const auto d = QCategory::make(t, objs, homs);
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 20; ++k) {
        std::vector<std::size_t> m(16), n(16);
        for (auto& x : m) x = rng() % 4;
        for (auto& x : n) x = rng() % 4;
        auto elems = [&](const std::vector<std::size_t>& vs) {
            std::vector<Elem> e;
            for (auto x : vs) e.push_back(*l.find(std::to_string(x)));
            return e;
        };
        const auto r = dist_compose(make_distributor(d, d, elems(m)), make_distributor(d, d, elems(n)));
        const auto expect = oracle::minplus(m, n, 4, 3);
        for (std::size_t i = 0; i < 16; ++i)
            if (l.label(r.entries()[i]) != std::to_string(expect[i])) v.fail("instance " + std::to_string(k));
    }
    v.note = "20 instances";
    return v;
}

Verdict command_line(const Corpus& c) {
    Verdict v;
    for (const auto& [f, doc] : c.docs) {
        const auto again = parse(pretty_print(doc));
        if (!again.ok() || !(*again.document == doc)) v.fail("round-trip on " + f);
    }
    for (const auto& cs : contract::kContract) {
        const auto r = contract::call(cs.args);
        if (r.code != cs.code) {
            std::string line;
            for (const auto& a : cs.args) line += " " + a;
            v.fail("exit " + std::to_string(r.code) + " for" + line);
        }
    }
    for (const auto& [f, doc] : c.docs)
        if (contract::call({"laws", f}).code != 0) v.fail("laws " + f);
    v.note = std::to_string(contract::kContract.size()) + " exit-code cases";
    return v;
}

}  // namespace

int main() {
    const Corpus corpus = load_corpus();
    struct Criterion {
        const char* title;
        double limit;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"residual suite, items 1-7, on every corpus quantaloid", 10, [&] { return residual_suite(corpus); }},
        {"Dist(Q) quantaloid laws on enumerated distributors", 60, [&] { return dist_quantaloid(corpus); }},
        {"graph adjunction and functoriality", 30, [&] { return graphs(corpus); }},
        {"Yoneda and colim(phi, Y) = phi where |PA| <= 64", 60, [&] { return yoneda_criterion(corpus); }},
        {"complete = cocomplete, limit/colimit transfer", 60, [&] { return complete_cocomplete(corpus); }},
        {"PA is cocomplete", 120, [&] { return presheaf_cocomplete(corpus); }},
        {"A vs A_cc composites are identities, A_cc Cauchy complete", 60, [&] { return cauchy_identity(corpus); }},
        {"bool2: presheaves are down-sets, Cauchy = principal", 10, [&] { return bool2_sanity(corpus); }},
        {"Morita: skeletal quotient, Cauchy completion, chain vs antichain", 30, [&] { return morita(corpus); }},
        {"Dist = Bim(Matr), direct sums, splittings, lax colimits", 60, [&] { return appendix(corpus); }},
        {"tropical composition is the capped min-plus product", 5, [] { return tropical(); }},
        {"CLI round-trip, exit codes, full law run", 120, [&] { return command_line(corpus); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (v.failure.empty() && secs >= c.limit) v.fail("took longer than the limit");
        const bool ok = v.failure.empty();
        failed += !ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << c.title << " (" << timing;
        if (!v.note.empty()) std::cout << "; " << v.note;
        std::cout << ")";
        if (!ok) std::cout << ": " << v.failure;
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
