#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace qk;

namespace {

bool has_error(const ParseResult& r) {
    for (const auto& d : r.diagnostics)
        if (d.severity == Diagnostic::Severity::error) return true;
    return false;
}

// The first error, with a check that it points inside the source.
Diagnostic first_error(const ParseResult& r, std::string_view src) {
    REQUIRE_FALSE(r.ok());
    REQUIRE(has_error(r));
    for (const auto& d : r.diagnostics)
        if (d.severity == Diagnostic::Severity::error) {
            const auto lines = static_cast<std::size_t>(std::count(src.begin(), src.end(), '\n')) + 1;
            CHECK(d.span.line >= 1);
            CHECK(d.span.line <= lines);
            return d;
        }
    return {};
}

std::string at_span(std::string_view src, const Span& s) {
    std::size_t line = 1, pos = 0;
    while (line < s.line && pos < src.size())
        if (src[pos++] == '\n') ++line;
    return std::string(src.substr(pos + s.column - 1, s.length));
}

const char* kBool2Prelude = "quantaloid Two = bool2;\n";

}  // namespace

TEST_CASE("the bool2 fixture parses to one quantaloid and one category") {
    auto doc = oracle::load("bool2.qk");
    CHECK(doc.declarations.size() == 2);
    CHECK(doc.names("quantaloid") == std::vector<std::string>{"Two"});
    CHECK(doc.names("category") == std::vector<std::string>{"C"});
    const auto& c = doc.categories.at("C");
    CHECK(c->size() == 2);
    CHECK(c->hom(0, 1) == 1);  // hom a b
    CHECK(c->hom(1, 0) == 0);
    CHECK(doc.kind_of("C") == std::optional<std::string>("category"));
    CHECK_FALSE(doc.kind_of("nothing").has_value());
}

TEST_CASE("a bad hom element gets a diagnostic at its span") {
    const std::string src = std::string(kBool2Prelude) + "category C over Two {\n  objects: a, b;\n  hom a b = z;\n}\n";
    const auto r = parse(src);
    const auto d = first_error(r, src);
    CHECK(d.span.line == 4);
    CHECK(d.span.column == 13);
    CHECK(at_span(src, d.span) == "z");
    CHECK(d.format("x.qk").rfind("x.qk:4:13: error: ", 0) == 0);
}

TEST_CASE("pretty printing round-trips the corpus") {
    for (const auto& f : oracle::fixture_names()) {
        INFO(f);
        const auto doc = oracle::load(f);
        const auto text = pretty_print(doc);
        const auto again = parse(text);
        REQUIRE(again.ok());
        CHECK(*again.document == doc);
        CHECK(pretty_print(*again.document) == text);
        for (const auto& n : doc.names("category"))
            CHECK(same_category(*doc.categories.at(n), *again.document->categories.at(n)));
    }
}

TEST_CASE("the parser is total on mutated inputs") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "{}();:,=<>-|*#\n abcxyz01";
    std::size_t docs = 0, failures = 0;
    for (const auto& f : oracle::fixture_names()) {
        const auto base = oracle::read_text(oracle::fixture_path(f));
        for (int k = 0; k < 150; ++k) {
            auto s = base;
            const int edits = 1 + static_cast<int>(rng() % 4);
            for (int e = 0; e < edits && !s.empty(); ++e) {
                const auto pos = rng() % s.size();
                switch (rng() % 4) {
                    case 0: s.erase(pos, 1); break;
                    case 1: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                    case 2: s[pos] = alphabet[rng() % alphabet.size()]; break;
                    default: s.resize(pos); break;
                }
            }
            ParseResult r;
            REQUIRE_NOTHROW(r = parse(s));
            if (r.ok()) {
                ++docs;
            } else {
                ++failures;
                first_error(r, s);
            }
        }
    }
    CHECK(docs > 0);
    CHECK(failures > 0);
    std::string noise;
    for (int i = 0; i < 2000; ++i) noise.push_back(static_cast<char>(rng() % 256));
    CHECK_NOTHROW(parse(noise));
    CHECK(parse("").ok());
}

TEST_CASE("duplicate and unknown names are diagnosed") {
    SUBCASE("duplicate declaration") {
        const std::string src = std::string(kBool2Prelude) + "quantaloid Two = bool2;\n";
        const auto d = first_error(parse(src), src);
        CHECK(d.span.line == 2);
        CHECK(d.message.find("Two") != std::string::npos);
    }
    SUBCASE("unknown base") {
        const std::string src = "category C over Nope { objects: a; }\n";
        CHECK(at_span(src, first_error(parse(src), src).span) == "Nope");
    }
    SUBCASE("unknown object in a hom") {
        const std::string src = std::string(kBool2Prelude) + "category C over Two { objects: a; hom a q = 1; }\n";
        CHECK(at_span(src, first_error(parse(src), src).span) == "q");
    }
    SUBCASE("duplicate object") {
        const std::string src = std::string(kBool2Prelude) + "category C over Two { objects: a, a; }\n";
        first_error(parse(src), src);
    }
    SUBCASE("functor that is not monotone") {
        const std::string src = std::string(kBool2Prelude) +
                                "category C over Two { objects: a, b; hom a b = 1; }\n"
                                "functor F: C -> C { a -> b, b -> a }\n";
        first_error(parse(src), src);
    }
    SUBCASE("distributor missing an action inequality is reported, not repaired") {
        const std::string src = std::string(kBool2Prelude) +
                                "category C over Two { objects: a, b; hom a b = 1; }\n"
                                "distributor d: C -|-> C { (a,a) -> 1 }\n";
        first_error(parse(src), src);
    }
    SUBCASE("lattice that is not complete") {
        const std::string src = "lattice L { elements: a, b; }\n";
        first_error(parse(src), src);
    }
    SUBCASE("rel_locale over a non-distributive lattice") {
        const std::string src =
            "lattice M3 { elements: 0, a, b, c, 1; order: 0 <= a <= 1, 0 <= b <= 1, 0 <= c <= 1; }\n"
            "quantaloid R = rel_locale(M3);\n";
        first_error(parse(src), src);
    }
}

TEST_CASE("distributor entries default to bottom") {
    auto doc = oracle::load("antichain.qk");
    const auto& phi = doc.distributors.at("phi");
    CHECK(phi.at(0, 0) == 1);
    const std::string src = std::string(kBool2Prelude) +
                            "category C over Two { objects: a, b; hom a b = 1; }\n"
                            "distributor d: C -|-> C { (a,b) -> 1 }\n";
    const auto r = parse(src);
    REQUIRE(r.ok());
    const auto& d = r.document->distributors.at("d");
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(1, 1) == 0);
}

TEST_CASE("generate directives build the tables") {
    auto rel3 = oracle::load("rel3.qk");
    const auto& m = rel3.quantaloids.at("M");
    const auto& l = m->hom(0, 0);
    const auto h = *l.find("h"), top = *l.find("1"), bot = *l.find("0");
    CHECK(m->compose(0, 0, 0, h, top) == h);
    CHECK(m->compose(0, 0, 0, h, h) == h);
    CHECK(m->compose(0, 0, 0, bot, top) == bot);
    CHECK(m->identity(0) == top);

    const std::string src =
        "lattice C4 { elements: 3, 2, 1, 0; order: 3 <= 2 <= 1 <= 0; }\n"
        "quantaloid P { objects: *; hom * *: C4; generate: plus-cap; }\n";
    const auto r = parse(src);
    REQUIRE(r.ok());
    const auto& p = r.document->quantaloids.at("P");
    const auto& c4 = p->hom(0, 0);
    CHECK(p->compose(0, 0, 0, *c4.find("1"), *c4.find("1")) == *c4.find("2"));
    CHECK(p->compose(0, 0, 0, *c4.find("2"), *c4.find("2")) == *c4.find("3"));
    CHECK(p->identity(0) == *c4.find("0"));

    const std::string bad = "lattice L { elements: 0, 1; order: 0 <= 1; }\n"
                            "quantaloid Q { objects: *; hom * *: L; generate: sideways; }\n";
    CHECK(at_span(bad, first_error(parse(bad), bad).span) == "sideways");
}

TEST_CASE("explicit composition tables override the directive") {
    const std::string src =
        "lattice L { elements: 0, 1; order: 0 <= 1; }\n"
        "quantaloid Q {\n  objects: *;\n  hom * *: L;\n"
        "  compose * * *: { (0,0) -> 0, (0,1) -> 0, (1,0) -> 0, (1,1) -> 1 };\n  id *: 1;\n}\n";
    const auto r = parse(src);
    REQUIRE(r.ok());
    CHECK(*r.document->quantaloids.at("Q") == *bool2());
}

TEST_CASE("builtin quantaloids") {
    auto trop = oracle::load("tropical3.qk");
    CHECK(*trop.quantaloids.at("T") == *tropical_trunc(3));
    auto rnd = oracle::load("random.qk");
    CHECK(*rnd.quantaloids.at("Rnd") == *random_quantaloid(7, 2, 4));
    const auto r = parse("quantaloid T = tropical(x);\n");
    CHECK_FALSE(r.ok());
}

TEST_CASE("shapes and lax functors") {
    auto doc = oracle::load("lax.qk");
    const auto& arrow = doc.shapes.at("Arrow");
    CHECK(arrow.validate().ok());
    CHECK(arrow.arrows.size() == 3);
    const auto& loop = doc.shapes.at("Loop");
    CHECK(loop.arrows.size() == 2);
    const auto& l = doc.lax_functors.at("L");
    CHECK(validate_lax_functor(BaseCalculus{l.base}, l.functor).ok());
    CHECK(doc.names("laxfunctor") == std::vector<std::string>{"L", "M"});

    const std::string missing = std::string(kBool2Prelude) +
                                "shape S { objects: o; arrows: e: o -> o; }\n";
    first_error(parse(missing), missing);  // e∘e is not listed

    const std::string not_lax = std::string(kBool2Prelude) +
                                "shape S { objects: a, b, c; arrows: f: a -> b, g: b -> c, h: a -> c; compose: (g,f) -> h; }\n"
                                "laxfunctor F: S -> Two { objects: a -> *, b -> *, c -> *; arrows: f -> 1, g -> 1, h -> 0; }\n";
    first_error(parse(not_lax), not_lax);  // Fg∘Ff = 1 is not below F(g∘f) = 0
}
