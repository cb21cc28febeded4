#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include "qk/laws.hpp"

using namespace qk;

namespace {

std::string failures(const LawReport& r) {
    std::string s;
    for (const auto& row : r.rows)
        if (row.status == LawStatus::fail) s += row.suite + "/" + row.law + " [" + row.instance + "]: " + row.detail + "\n";
    return s;
}

LawOptions suite(const std::string& name) {
    LawOptions o;
    o.suite = name;
    return o;
}

}  // namespace

TEST_CASE("the residual suite has seven laws, all passing on bool2") {
    const auto rep = run_laws(oracle::load("bool2.qk"), suite("lemma04"));
    std::set<std::string> laws;
    for (const auto& r : rep.rows) {
        CHECK(r.suite == "lemma04");
        laws.insert(r.law);
    }
    CHECK(laws.size() == 7);
    CHECK(rep.rows.size() == 14);  // the document quantaloid and one random one
    CHECK_MESSAGE(rep.passed(), failures(rep));
    CHECK(rep.count(LawStatus::skipped) == 0);
}

TEST_CASE("an empty document passes vacuously with a warning") {
    const auto empty = parse("# nothing here\n");
    REQUIRE(empty.ok());
    auto rep = run_laws(*empty.document, LawOptions{});
    CHECK(rep.passed());
    REQUIRE(rep.warnings.size() == 1);
    CHECK(rep.warnings[0].find("empty document") != std::string::npos);

    LawOptions none;
    none.random = 0;
    rep = run_laws(*empty.document, none);
    CHECK(rep.rows.empty());
    CHECK(rep.passed());
}

TEST_CASE("filtering by suite") {
    const auto doc = oracle::load("rel3.qk");
    const auto rep = run_laws(doc, suite("prop150"));
    REQUIRE_FALSE(rep.rows.empty());
    for (const auto& r : rep.rows) CHECK(r.suite == "prop150");
    CHECK_MESSAGE(rep.passed(), failures(rep));
    CHECK(rep.rows.size() == 5);  // P, S and a random category over each of the three bases
    CHECK(run_laws(doc, suite("no-such-suite")).rows.empty());
}

TEST_CASE("the catalogue names every suite") {
    const auto cat = law_catalogue();
    const auto suites = law_suites();
    CHECK(std::is_sorted(suites.begin(), suites.end()));
    for (const auto& s : suites) {
        CHECK(is_law_suite(s));
        CHECK(std::any_of(cat.begin(), cat.end(), [&](const LawInfo& i) { return i.suite == s; }));
    }
    for (const char* s : {"lemma04", "prop4", "prop6", "prop8", "prop104", "cor109", "prop1004", "prop1005", "prop107",
                          "prop146", "prop150", "prop155", "prop25", "prop38", "prop40.0", "dist-bim-matr"})
        CHECK_MESSAGE(is_law_suite(s), s);
    CHECK_FALSE(is_law_suite("nope"));
    for (const auto& i : cat) CHECK_FALSE(i.anchor.empty());
}

TEST_CASE("reports are deterministic and sorted") {
    const auto doc = oracle::load("chain-vs-doubled.qk");
    LawOptions o;
    o.seed = 5;
    const auto a = run_laws(doc, o), b = run_laws(doc, o);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].instance == b.rows[i].instance);
        CHECK(a.rows[i].status == b.rows[i].status);
        CHECK(a.rows[i].detail == b.rows[i].detail);
    }
    CHECK(std::is_sorted(a.rows.begin(), a.rows.end(), [](const LawRow& x, const LawRow& y) {
        return std::tie(x.suite, x.law, x.instance) < std::tie(y.suite, y.law, y.instance);
    }));
    o.seed = 6;
    const auto c = run_laws(doc, o);
    bool differs = false;
    for (std::size_t i = 0; i < std::min(a.rows.size(), c.rows.size()); ++i) differs = differs || a.rows[i].instance != c.rows[i].instance;
    CHECK(differs);
}

TEST_CASE("a tiny cap skips rows instead of failing them") {
    LawOptions o;
    o.cap = 2;
    o.functor_cap = 2;
    const auto rep = run_laws(oracle::load("tropical3.qk"), o);
    CHECK(rep.count(LawStatus::skipped) > 0);
    CHECK_MESSAGE(rep.passed(), failures(rep));
    for (const auto& r : rep.rows)
        if (r.status == LawStatus::skipped) CHECK(r.detail.find("cap") != std::string::npos);
}

TEST_CASE("every law passes on the fixture corpus") {
    for (const auto& f : oracle::fixture_names()) {
        INFO(f);
        const auto rep = run_laws(oracle::load(f), LawOptions{});
        CHECK_MESSAGE(rep.passed(), failures(rep));
        CHECK(rep.count(LawStatus::skipped) == 0);
        CHECK(rep.count(LawStatus::pass) == rep.rows.size());
    }
}

TEST_CASE("more random instances are still lawful") {
    LawOptions o;
    o.random = 3;
    o.seed = 17;
    const auto rep = run_laws(oracle::load("reldiamond.qk"), o);
    CHECK_MESSAGE(rep.passed(), failures(rep));
}
