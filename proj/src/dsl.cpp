#include "qk/dsl.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace qk {

std::string Diagnostic::format(const std::string& file) const {
    std::string s = file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                    (severity == Severity::error ? "error" : "warning") + ": " + message;
    if (!hint.empty()) s += "\n  hint: " + hint;
    return s;
}

const Name& declaration_name(const Declaration& d) {
    return std::visit([](const auto& x) -> const Name& { return x.name; }, d);
}

std::string declaration_kind(const Declaration& d) {
    static const char* kinds[] = {"lattice", "quantaloid", "category", "functor", "distributor", "shape", "laxfunctor"};
    return kinds[d.index()];
}

std::vector<std::string> QkDocument::names(const std::string& kind) const {
    std::vector<std::string> out;
    for (const auto& d : declarations)
        if (declaration_kind(d) == kind) out.push_back(declaration_name(d).text);
    return out;
}

std::optional<std::string> QkDocument::kind_of(const std::string& name) const {
    for (const auto& d : declarations)
        if (declaration_name(d).text == name) return declaration_kind(d);
    return std::nullopt;
}

namespace {

// ------------------------------------------------------------------- lexer

enum class Tok { ident, lbrace, rbrace, lparen, rparen, comma, semi, colon, equals, arrow, distarrow, leq, end };

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::ident: return "a name";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::semi: return "';'";
        case Tok::colon: return "':'";
        case Tok::equals: return "'='";
        case Tok::arrow: return "'->'";
        case Tok::distarrow: return "'-|->'";
        case Tok::leq: return "'<='";
        case Tok::end: return "end of input";
    }
    return "?";
}

bool name_start(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '*' || c == '\'';
}

std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k && i < src.size(); ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(src.substr(i, len)), {line, col, len}});
        advance(len);
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (name_start(c)) {
            std::size_t j = i;
            while (j < src.size() &&
                   (name_start(src[j]) ||
                    (src[j] == '-' && j + 1 < src.size() && std::isalnum(static_cast<unsigned char>(src[j + 1])))))
                ++j;
            push(Tok::ident, j - i);
            continue;
        }
        auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
        if (starts("-|->")) push(Tok::distarrow, 4);
        else if (starts("->")) push(Tok::arrow, 2);
        else if (starts("<=")) push(Tok::leq, 2);
        else if (c == '{') push(Tok::lbrace, 1);
        else if (c == '}') push(Tok::rbrace, 1);
        else if (c == '(') push(Tok::lparen, 1);
        else if (c == ')') push(Tok::rparen, 1);
        else if (c == ',') push(Tok::comma, 1);
        else if (c == ';') push(Tok::semi, 1);
        else if (c == ':') push(Tok::colon, 1);
        else if (c == '=') push(Tok::equals, 1);
        else {
            // one UTF-8 sequence counts as one column
            std::size_t len = 1;
            while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
            diags.push_back({Diagnostic::Severity::error, {line, col, 1},
                             "unexpected character '" + std::string(src.substr(i, len)) + "'", ""});
            i += len;
            ++col;
        }
    }
    out.push_back({Tok::end, "", {line, col, 0}});
    return out;
}

// ------------------------------------------------------------------ parser

struct Fail {};

const std::set<std::string> kDeclKeywords = {"lattice",     "quantaloid", "category", "functor",
                                             "distributor", "shape",      "laxfunctor"};

class Parser {
public:
    Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags) : toks_(std::move(toks)), diags_(diags) {}

    std::vector<Declaration> document() {
        std::vector<Declaration> out;
        while (peek().kind != Tok::end) {
            const std::size_t start = pos_;
            try {
                const auto& t = peek();
                if (t.kind != Tok::ident || !kDeclKeywords.count(t.text)) {
                    error(t.span, "expected a declaration, found " + describe(t),
                          "declarations start with lattice, quantaloid, category, functor, distributor, shape or "
                          "laxfunctor");
                }
                out.push_back(declaration());
            } catch (const Fail&) {
                recover(start);
            }
        }
        return out;
    }

private:
    std::vector<Token> toks_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    static std::string describe(const Token& t) {
        return t.kind == Tok::ident ? "'" + t.text + "'" : tok_name(t.kind);
    }
    [[noreturn]] void error(const Span& s, std::string msg, std::string hint = "") {
        diags_.push_back({Diagnostic::Severity::error, s, std::move(msg), std::move(hint)});
        throw Fail{};
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    void expect(Tok k, const char* context) {
        if (!accept(k)) error(peek().span, std::string("expected ") + tok_name(k) + " " + context + ", found " + describe(peek()));
    }
    Name name(const char* what) {
        if (peek().kind != Tok::ident) error(peek().span, std::string("expected ") + what + ", found " + describe(peek()));
        const auto& t = next();
        return {t.text, t.span};
    }
    bool accept_keyword(const char* kw) {
        if (peek().kind == Tok::ident && peek().text == kw) {
            next();
            return true;
        }
        return false;
    }
    void keyword(const char* kw) {
        if (!accept_keyword(kw)) error(peek().span, std::string("expected '") + kw + "', found " + describe(peek()));
    }
    void end_statement() {
        if (accept(Tok::semi)) return;
        if (peek().kind == Tok::rbrace) return;
        error(peek().span, "expected ';' after statement, found " + describe(peek()));
    }
    void end_declaration() {
        while (accept(Tok::semi)) {
        }
    }
    // Skip the failed declaration: up to a ';' at depth 0 or the '}' closing its body.
    void recover(std::size_t start) {
        pos_ = start;
        if (peek().kind == Tok::end) return;
        next();
        int depth = 0;
        while (peek().kind != Tok::end) {
            const auto& t = peek();
            if (depth == 0 && t.kind == Tok::ident && kDeclKeywords.count(t.text) && pos_ > start + 1 &&
                toks_[pos_ - 1].kind != Tok::colon && toks_[pos_ - 1].kind != Tok::comma)
                return;
            next();
            if (t.kind == Tok::lbrace) ++depth;
            else if (t.kind == Tok::rbrace) {
                if (--depth <= 0) {
                    end_declaration();
                    return;
                }
            } else if (t.kind == Tok::semi && depth == 0) return;
        }
    }

    template <class F>
    void list(F item) {
        item();
        while (accept(Tok::comma)) item();
    }

    // Items separated by ',' or ';' up to the closing brace.
    template <class F>
    void entries_until_brace(F item) {
        while (peek().kind != Tok::rbrace) {
            if (peek().kind == Tok::end) error(peek().span, "unterminated block: expected '}'");
            item();
            if (!accept(Tok::comma) && !accept(Tok::semi) && peek().kind != Tok::rbrace)
                error(peek().span, "expected ',' or ';' between entries, found " + describe(peek()));
        }
    }

    CompositeEntry composite() {
        CompositeEntry e;
        expect(Tok::lparen, "to open a composite entry");
        e.g = name("an arrow");
        expect(Tok::comma, "between the arrows of a composite");
        e.f = name("an arrow");
        expect(Tok::rparen, "to close a composite entry");
        expect(Tok::arrow, "in a composite entry");
        e.h = name("an arrow");
        return e;
    }

    Declaration declaration() {
        const auto kw = next().text;
        if (kw == "lattice") return lattice();
        if (kw == "quantaloid") return quantaloid();
        if (kw == "category") return category();
        if (kw == "functor") return functor();
        if (kw == "distributor") return distributor();
        if (kw == "shape") return shape();
        return laxfunctor();
    }

    LatticeDecl lattice() {
        LatticeDecl d;
        d.name = name("a lattice name");
        expect(Tok::lbrace, "to open the lattice body");
        while (!accept(Tok::rbrace)) {
            if (accept_keyword("elements")) {
                expect(Tok::colon, "after 'elements'");
                list([&] { d.elements.push_back(name("an element")); });
            } else if (accept_keyword("order")) {
                expect(Tok::colon, "after 'order'");
                list([&] {
                    Name lo = name("an element");
                    expect(Tok::leq, "in an order statement");
                    Name hi = name("an element");
                    d.order.emplace_back(lo, hi);
                    while (accept(Tok::leq)) {
                        lo = hi;
                        hi = name("an element");
                        d.order.emplace_back(lo, hi);
                    }
                });
            } else {
                error(peek().span, "expected 'elements' or 'order' in a lattice, found " + describe(peek()));
            }
            end_statement();
        }
        end_declaration();
        return d;
    }

    std::string directive() {
        const Name n = name("a generate directive");
        if (n.text != "meet" && n.text != "plus-cap" && n.text != "table")
            error(n.span, "unknown generate directive '" + n.text + "'", "use meet, plus-cap or table");
        return n.text;
    }

    QuantaloidDecl quantaloid() {
        QuantaloidDecl d;
        d.name = name("a quantaloid name");
        if (accept(Tok::equals)) {
            const Name b = name("a builtin quantaloid");
            static const std::set<std::string> builtins = {"bool2", "rel_locale", "tropical", "random", "opposite"};
            if (!builtins.count(b.text))
                error(b.span, "unknown builtin quantaloid '" + b.text + "'",
                      "use bool2, rel_locale(L), tropical(N), random(SEED,OBJECTS,HOMCAP) or opposite(Q)");
            d.builtin = b.text;
            if (b.text != "bool2") {
                expect(Tok::lparen, "after the builtin name");
                list([&] { d.args.push_back(name("an argument")); });
                expect(Tok::rparen, "to close the argument list");
            }
            if (!accept(Tok::semi) && peek().kind != Tok::end)
                error(peek().span, "expected ';' after the quantaloid, found " + describe(peek()));
            end_declaration();
            return d;
        }
        expect(Tok::lbrace, "to open the quantaloid body");
        while (!accept(Tok::rbrace)) {
            if (accept_keyword("objects")) {
                expect(Tok::colon, "after 'objects'");
                list([&] { d.objects.push_back(name("an object")); });
            } else if (accept_keyword("hom")) {
                Name x = name("an object"), y = name("an object");
                expect(Tok::colon, "before the hom lattice");
                d.homs.emplace_back(x, y, name("a lattice name"));
            } else if (accept_keyword("compose")) {
                ComposeDecl c;
                c.x = name("an object");
                c.y = name("an object");
                c.z = name("an object");
                expect(Tok::colon, "after the composition triple");
                if (accept_keyword("generate")) c.generate = directive();
                if (accept(Tok::lbrace)) {
                    entries_until_brace([&] { c.entries.push_back(composite()); });
                    expect(Tok::rbrace, "to close the composition table");
                } else if (c.generate.empty()) {
                    error(peek().span, "expected a table or a generate directive, found " + describe(peek()));
                }
                d.compose.push_back(std::move(c));
            } else if (accept_keyword("id")) {
                Name x = name("an object");
                expect(Tok::colon, "after the object");
                d.ids.emplace_back(x, name("an element"));
            } else if (accept_keyword("generate")) {
                expect(Tok::colon, "after 'generate'");
                d.generate = directive();
            } else {
                error(peek().span, "expected objects, hom, compose, id or generate, found " + describe(peek()));
            }
            end_statement();
        }
        end_declaration();
        return d;
    }

    CategoryDecl category() {
        CategoryDecl d;
        d.name = name("a category name");
        keyword("over");
        d.base = name("a quantaloid name");
        expect(Tok::lbrace, "to open the category body");
        while (!accept(Tok::rbrace)) {
            if (accept_keyword("objects")) {
                expect(Tok::colon, "after 'objects'");
                list([&] {
                    Name o = name("an object");
                    std::optional<Name> t;
                    if (accept(Tok::colon)) t = name("a base object");
                    d.objects.emplace_back(o, t);
                });
            } else if (accept_keyword("hom")) {
                Name a = name("an object"), b = name("an object");
                expect(Tok::equals, "before the hom value");
                d.homs.emplace_back(a, b, name("an arrow"));
            } else {
                error(peek().span, "expected 'objects' or 'hom' in a category, found " + describe(peek()));
            }
            end_statement();
        }
        end_declaration();
        return d;
    }

    FunctorDecl functor() {
        FunctorDecl d;
        d.name = name("a functor name");
        expect(Tok::colon, "after the functor name");
        d.dom = name("a category");
        expect(Tok::arrow, "between domain and codomain");
        d.cod = name("a category");
        expect(Tok::lbrace, "to open the functor body");
        entries_until_brace([&] {
            Name a = name("an object");
            expect(Tok::arrow, "in a functor entry");
            d.map.emplace_back(a, name("an object"));
        });
        expect(Tok::rbrace, "to close the functor");
        end_declaration();
        return d;
    }

    DistributorDecl distributor() {
        DistributorDecl d;
        d.name = name("a distributor name");
        expect(Tok::colon, "after the distributor name");
        d.dom = name("a category");
        expect(Tok::distarrow, "between domain and codomain");
        d.cod = name("a category");
        expect(Tok::lbrace, "to open the distributor body");
        entries_until_brace([&] {
            expect(Tok::lparen, "to open a distributor entry");
            Name b = name("a codomain object");
            expect(Tok::comma, "between the objects of an entry");
            Name a = name("a domain object");
            expect(Tok::rparen, "to close the entry position");
            expect(Tok::arrow, "in a distributor entry");
            d.entries.emplace_back(b, a, name("an arrow"));
        });
        expect(Tok::rbrace, "to close the distributor");
        end_declaration();
        return d;
    }

    ShapeDecl shape() {
        ShapeDecl d;
        d.name = name("a shape name");
        expect(Tok::lbrace, "to open the shape body");
        while (!accept(Tok::rbrace)) {
            if (accept_keyword("objects")) {
                expect(Tok::colon, "after 'objects'");
                list([&] { d.objects.push_back(name("an object")); });
            } else if (accept_keyword("arrows")) {
                expect(Tok::colon, "after 'arrows'");
                list([&] {
                    Name l = name("an arrow");
                    expect(Tok::colon, "after the arrow name");
                    Name s = name("an object");
                    expect(Tok::arrow, "in an arrow declaration");
                    d.arrows.emplace_back(l, s, name("an object"));
                });
            } else if (accept_keyword("compose")) {
                expect(Tok::colon, "after 'compose'");
                list([&] { d.compose.push_back(composite()); });
            } else {
                error(peek().span, "expected objects, arrows or compose in a shape, found " + describe(peek()));
            }
            end_statement();
        }
        end_declaration();
        return d;
    }

    LaxFunctorDecl laxfunctor() {
        LaxFunctorDecl d;
        d.name = name("a lax functor name");
        expect(Tok::colon, "after the lax functor name");
        d.shape = name("a shape");
        expect(Tok::arrow, "between shape and base");
        d.base = name("a quantaloid");
        expect(Tok::lbrace, "to open the lax functor body");
        while (!accept(Tok::rbrace)) {
            if (accept_keyword("objects")) {
                expect(Tok::colon, "after 'objects'");
                list([&] {
                    Name o = name("a shape object");
                    expect(Tok::arrow, "in an object assignment");
                    d.objects.emplace_back(o, name("a base object"));
                });
            } else if (accept_keyword("arrows")) {
                expect(Tok::colon, "after 'arrows'");
                list([&] {
                    Name a = name("a shape arrow");
                    expect(Tok::arrow, "in an arrow assignment");
                    d.arrows.emplace_back(a, name("an arrow"));
                });
            } else {
                error(peek().span, "expected objects or arrows in a lax functor, found " + describe(peek()));
            }
            end_statement();
        }
        end_declaration();
        return d;
    }
};

// ---------------------------------------------------------------- resolver

class Resolver {
public:
    Resolver(QkDocument& doc, std::vector<Diagnostic>& diags) : doc_(doc), diags_(diags) {}

    void run() {
        for (const auto& d : doc_.declarations) {
            const Name& n = declaration_name(d);
            if (!seen_.insert(n.text).second) {
                err(n.span, "duplicate name '" + n.text + "'", "every declaration needs its own name");
                continue;
            }
            try {
                std::visit([&](const auto& x) { resolve(x); }, d);
            } catch (const Fail&) {
                failed_.insert(n.text);
            } catch (const std::exception& e) {
                diags_.push_back({Diagnostic::Severity::error, n.span, e.what(), ""});
                failed_.insert(n.text);
            }
        }
    }

private:
    QkDocument& doc_;
    std::vector<Diagnostic>& diags_;
    std::set<std::string> seen_;
    std::set<std::string> failed_;
    std::map<std::pair<const Quantaloid*, ObjId>, CategoryRef> units_;

    void err(const Span& s, std::string msg, std::string hint = "") {
        diags_.push_back({Diagnostic::Severity::error, s, std::move(msg), std::move(hint)});
    }
    [[noreturn]] void fail(const Span& s, std::string msg, std::string hint = "") {
        err(s, std::move(msg), std::move(hint));
        throw Fail{};
    }
    void report(const Span& s, const ValidationReport& r, const std::string& what) {
        for (const auto& v : r.violations) err(s, what + ": " + v);
        if (r.ok()) err(s, what + " is invalid");
        throw Fail{};
    }
    [[noreturn]] void missing(const Name& n, const char* kind) {
        if (failed_.count(n.text)) fail(n.span, "'" + n.text + "' refers to an invalid declaration");
        if (auto k = doc_.kind_of(n.text); k && seen_.count(n.text))
            fail(n.span, "'" + n.text + "' is a " + *k + ", expected a " + kind);
        fail(n.span, std::string("unknown ") + kind + " '" + n.text + "'");
    }

    const CompleteLattice& lattice_ref(const Name& n) {
        auto it = doc_.lattices.find(n.text);
        if (it == doc_.lattices.end()) missing(n, "lattice");
        return it->second;
    }
    const QuantaloidRef& quantaloid_ref(const Name& n) {
        auto it = doc_.quantaloids.find(n.text);
        if (it == doc_.quantaloids.end()) missing(n, "quantaloid");
        return it->second;
    }
    ObjId base_object(const Quantaloid& q, const Name& n) {
        auto o = q.find_object(n.text);
        if (!o) fail(n.span, "'" + n.text + "' is not an object of the base", "objects: " + join(q.object_labels()));
        return *o;
    }
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    }
    Elem element(const CompleteLattice& l, const Name& n, const std::string& where) {
        auto e = l.find(n.text);
        if (!e) fail(n.span, "'" + n.text + "' is not an element of " + where, "elements: " + join(l.labels()));
        return *e;
    }
    std::string hom_name(const Quantaloid& q, ObjId a, ObjId b) {
        return "hom(" + q.object_label(a) + "," + q.object_label(b) + ")";
    }
    std::size_t number(const Name& n) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), v);
        if (ec != std::errc() || p != n.text.data() + n.text.size())
            fail(n.span, "expected a non-negative integer, found '" + n.text + "'");
        return v;
    }
    std::size_t index_in(const std::vector<std::string>& labels, const Name& n, const std::string& where) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == n.text) return i;
        fail(n.span, "'" + n.text + "' is not an object of " + where);
    }

    // A named category, or *X (just * over a one-object base) for a unit category.
    const CategoryRef* try_named(const Name& n) {
        auto it = doc_.categories.find(n.text);
        return it == doc_.categories.end() ? nullptr : &it->second;
    }
    CategoryRef category_ref(const Name& n, const QuantaloidRef* base) {
        if (auto c = try_named(n)) return *c;
        if (n.text.empty() || n.text[0] != '*') missing(n, "category");
        if (!base) fail(n.span, "cannot infer the base of unit category '" + n.text + "'",
                        "name a declared category on the other side");
        const std::string obj = n.text.substr(1);
        ObjId t = 0;
        if (obj.empty()) {
            if ((*base)->object_count() != 1)
                fail(n.span, "'*' needs an object name over a base with several objects", "write *X");
        } else {
            t = base_object(**base, Name{obj, n.span});
        }
        auto& slot = units_[{base->get(), t}];
        if (!slot) slot = unit_category(*base, t);
        return slot;
    }
    std::pair<CategoryRef, CategoryRef> category_pair(const Name& dom, const Name& cod) {
        const CategoryRef* d = try_named(dom);
        const CategoryRef* c = try_named(cod);
        const QuantaloidRef* base = d ? &(*d)->base_ref() : c ? &(*c)->base_ref() : nullptr;
        return {category_ref(dom, base), category_ref(cod, base)};
    }

    void resolve(const LatticeDecl& d) {
        std::vector<std::string> labels;
        for (const auto& e : d.elements) labels.push_back(e.text);
        std::vector<std::pair<Elem, Elem>> gen;
        for (const auto& [lo, hi] : d.order)
            gen.emplace_back(index_in(labels, lo, "lattice " + d.name.text), index_in(labels, hi, "lattice " + d.name.text));
        try {
            doc_.lattices.emplace(d.name.text, lattice_from_order(std::move(labels), gen));
        } catch (const ValidationError& e) {
            report(d.name.span, e.report(), "lattice " + d.name.text);
        } catch (const StructuralError& e) {
            fail(d.name.span, "lattice " + d.name.text + ": " + e.what());
        }
    }

    void resolve(const QuantaloidDecl& d) {
        QuantaloidRef q;
        const auto arity = [&](std::size_t k) {
            if (d.args.size() != k)
                fail(d.name.span, d.builtin + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
        };
        try {
            if (d.builtin == "bool2") {
                q = bool2();
            } else if (d.builtin == "rel_locale") {
                arity(1);
                q = rel_locale(lattice_ref(d.args[0]), d.args[0].text);
            } else if (d.builtin == "tropical") {
                arity(1);
                q = tropical_trunc(number(d.args[0]));
            } else if (d.builtin == "random") {
                arity(3);
                q = random_quantaloid(number(d.args[0]), number(d.args[1]), number(d.args[2]));
            } else if (d.builtin == "opposite") {
                arity(1);
                q = opposite_quantaloid(*quantaloid_ref(d.args[0]));
            } else {
                q = table(d);
            }
        } catch (const ValidationError& e) {
            report(d.name.span, e.report(), "quantaloid " + d.name.text);
        } catch (const DomainError& e) {
            fail(d.args.empty() ? d.name.span : d.args[0].span, e.what());
        } catch (const StructuralError& e) {
            fail(d.name.span, "quantaloid " + d.name.text + ": " + e.what());
        }
        doc_.quantaloids.emplace(d.name.text, std::move(q));
    }

    QuantaloidRef table(const QuantaloidDecl& d) {
        QuantaloidCandidate c;
        for (const auto& o : d.objects) {
            for (const auto& x : c.objects)
                if (x == o.text) fail(o.span, "duplicate object '" + o.text + "'");
            c.objects.push_back(o.text);
        }
        const std::size_t n = c.objects.size();
        if (n == 0) fail(d.name.span, "quantaloid " + d.name.text + " has no objects");
        auto obj = [&](const Name& x) { return index_in(c.objects, x, "quantaloid " + d.name.text); };
        c.homs.assign(n * n, std::nullopt);
        for (const auto& [x, y, l] : d.homs) {
            auto& slot = c.homs[obj(x) * n + obj(y)];
            if (slot) fail(x.span, "hom " + x.text + " " + y.text + " declared twice");
            slot = lattice_ref(l);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!c.homs[a * n + b])
                    fail(d.name.span, "missing hom " + c.objects[a] + " " + c.objects[b],
                         "add 'hom " + c.objects[a] + " " + c.objects[b] + ": LATTICE;'");
        auto hom = [&](std::size_t a, std::size_t b) -> const CompleteLattice& { return *c.homs[a * n + b]; };
        auto hname = [&](std::size_t a, std::size_t b) { return "hom(" + c.objects[a] + "," + c.objects[b] + ")"; };

        std::map<std::size_t, const ComposeDecl*> by_triple;
        for (const auto& cd : d.compose) {
            const std::size_t key = (obj(cd.x) * n + obj(cd.y)) * n + obj(cd.z);
            if (!by_triple.emplace(key, &cd).second) fail(cd.x.span, "composition triple declared twice");
        }
        c.compose.resize(n * n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t z = 0; z < n; ++z) {
                    const auto key = (a * n + b) * n + z;
                    const ComposeDecl* cd = by_triple.count(key) ? by_triple[key] : nullptr;
                    const std::string gen = cd && !cd->generate.empty() ? cd->generate : d.generate;
                    const auto& fa = hom(a, b);
                    const auto& gb = hom(b, z);
                    const auto& hc = hom(a, z);
                    std::vector<std::optional<Elem>> t(gb.size() * fa.size());
                    for (Elem g = 0; g < gb.size(); ++g)
                        for (Elem f = 0; f < fa.size(); ++f)
                            t[g * fa.size() + f] = generated(gen, gb.label(g), fa.label(f), hc);
                    if (cd)
                        for (const auto& e : cd->entries) {
                            const Elem g = element(gb, e.g, hname(b, z));
                            const Elem f = element(fa, e.f, hname(a, b));
                            t[g * fa.size() + f] = element(hc, e.h, hname(a, z));
                        }
                    auto& out = c.compose[key];
                    for (Elem g = 0; g < gb.size(); ++g)
                        for (Elem f = 0; f < fa.size(); ++f) {
                            if (!t[g * fa.size() + f])
                                fail(cd ? cd->x.span : d.name.span,
                                     "composition " + c.objects[a] + " " + c.objects[b] + " " + c.objects[z] +
                                         " has no entry for (" + gb.label(g) + "," + fa.label(f) + ")",
                                     "list the entry or use a generate directive");
                            out.push_back(*t[g * fa.size() + f]);
                        }
                }
        c.identities.assign(n, std::nullopt);
        for (const auto& [x, e] : d.ids) c.identities[obj(x)] = element(hom(obj(x), obj(x)), e, hname(obj(x), obj(x)));
        for (std::size_t a = 0; a < n; ++a) {
            if (c.identities[a]) continue;
            const std::string gen = d.generate;
            if (gen == "meet") c.identities[a] = hom(a, a).top();
            else if (gen == "plus-cap" && hom(a, a).find("0")) c.identities[a] = *hom(a, a).find("0");
            else fail(d.name.span, "missing identity for " + c.objects[a], "add 'id " + c.objects[a] + ": ELEMENT;'");
        }
        return Quantaloid::make(std::move(c), {QuantaloidOrigin::Kind::table, ""});
    }

    static std::optional<Elem> generated(const std::string& gen, const std::string& g, const std::string& f,
                                         const CompleteLattice& h) {
        if (gen == "meet") {
            auto x = h.find(g), y = h.find(f);
            if (!x || !y) return std::nullopt;
            return h.meet(*x, *y);
        }
        if (gen == "plus-cap") {
            std::size_t x = 0, y = 0, cap = 0;
            auto num = [](const std::string& s, std::size_t& v) {
                auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
                return ec == std::errc() && p == s.data() + s.size();
            };
            if (!num(g, x) || !num(f, y)) return std::nullopt;
            for (const auto& l : h.labels()) {
                std::size_t v = 0;
                if (!num(l, v)) return std::nullopt;
                cap = std::max(cap, v);
            }
            return h.find(std::to_string(std::min(x + y, cap)));
        }
        return std::nullopt;
    }

    void resolve(const CategoryDecl& d) {
        const auto& base = quantaloid_ref(d.base);
        const auto& q = *base;
        TypedSet objs;
        for (const auto& [o, t] : d.objects) {
            for (const auto& x : objs.labels)
                if (x == o.text) fail(o.span, "duplicate object '" + o.text + "'");
            objs.labels.push_back(o.text);
            if (t) {
                objs.types.push_back(base_object(q, *t));
            } else {
                if (q.object_count() != 1)
                    fail(o.span, "object '" + o.text + "' needs a type over a base with several objects",
                         "write " + o.text + ":X");
                objs.types.push_back(0);
            }
        }
        const std::size_t n = objs.size();
        std::vector<Elem> homs(n * n);
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t a = 0; a < n; ++a)
                homs[a2 * n + a] = a2 == a ? q.identity(objs.types[a]) : q.hom(objs.types[a], objs.types[a2]).bottom();
        std::set<std::pair<std::size_t, std::size_t>> given;
        for (const auto& [a, b, z] : d.homs) {
            const auto i = index_in(objs.labels, a, "category " + d.name.text);
            const auto j = index_in(objs.labels, b, "category " + d.name.text);
            if (!given.insert({i, j}).second) fail(a.span, "hom " + a.text + " " + b.text + " given twice");
            homs[i * n + j] = element(q.hom(objs.types[j], objs.types[i]), z, hom_name(q, objs.types[j], objs.types[i]));
        }
        try {
            doc_.categories.emplace(d.name.text, QCategory::make(base, std::move(objs), std::move(homs)));
        } catch (const ValidationError& e) {
            report(d.name.span, e.report(), "category " + d.name.text);
        }
    }

    void resolve(const FunctorDecl& d) {
        auto [a, b] = category_pair(d.dom, d.cod);
        std::vector<std::optional<std::size_t>> map(a->size());
        for (const auto& [x, y] : d.map) {
            const auto i = index_in(a->objects().labels, x, "the domain");
            if (map[i]) fail(x.span, "object '" + x.text + "' mapped twice");
            map[i] = index_in(b->objects().labels, y, "the codomain");
        }
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (!map[i]) fail(d.name.span, "functor " + d.name.text + " does not map '" + a->label(i) + "'");
            m.push_back(*map[i]);
        }
        try {
            doc_.functors.emplace(d.name.text, make_functor(a, b, std::move(m)));
        } catch (const ValidationError& e) {
            report(d.name.span, e.report(), "functor " + d.name.text);
        }
    }

    void resolve(const DistributorDecl& d) {
        auto [a, b] = category_pair(d.dom, d.cod);
        const auto& q = a->base();
        std::vector<Elem> e(a->size() * b->size());
        for (std::size_t y = 0; y < b->size(); ++y)
            for (std::size_t x = 0; x < a->size(); ++x) e[y * a->size() + x] = q.hom(a->type(x), b->type(y)).bottom();
        std::set<std::pair<std::size_t, std::size_t>> given;
        for (const auto& [bn, an, z] : d.entries) {
            const auto y = index_in(b->objects().labels, bn, "the codomain");
            const auto x = index_in(a->objects().labels, an, "the domain");
            if (!given.insert({y, x}).second) fail(bn.span, "entry (" + bn.text + "," + an.text + ") given twice");
            e[y * a->size() + x] = element(q.hom(a->type(x), b->type(y)), z, hom_name(q, a->type(x), b->type(y)));
        }
        try {
            doc_.distributors.emplace(d.name.text, make_distributor(a, b, std::move(e)));
        } catch (const ValidationError& ex) {
            report(d.name.span, ex.report(), "distributor " + d.name.text);
        }
    }

    void resolve(const ShapeDecl& d) {
        std::vector<std::string> objs;
        for (const auto& o : d.objects) {
            for (const auto& x : objs)
                if (x == o.text) fail(o.span, "duplicate object '" + o.text + "'");
            objs.push_back(o.text);
        }
        std::vector<std::string> labels;
        std::vector<Shape::Arrow> gens;
        for (const auto& [l, s, t] : d.arrows) {
            for (const auto& x : labels)
                if (x == l.text) fail(l.span, "duplicate arrow '" + l.text + "'");
            if (l.text.rfind("1_", 0) == 0) fail(l.span, "arrow names starting with 1_ are reserved for identities");
            labels.push_back(l.text);
            gens.push_back({l.text, index_in(objs, s, "shape " + d.name.text), index_in(objs, t, "shape " + d.name.text)});
        }
        auto arrow = [&](const Name& n) {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == n.text) return i;
            fail(n.span, "'" + n.text + "' is not a non-identity arrow of shape " + d.name.text);
        };
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
        for (const auto& e : d.compose) comp[{arrow(e.g), arrow(e.f)}] = arrow(e.h);
        try {
            doc_.shapes.emplace(d.name.text, Shape::from_generators(std::move(objs), std::move(gens), std::move(comp)));
        } catch (const StructuralError& e) {
            fail(d.name.span, "shape " + d.name.text + ": " + e.what());
        }
    }

    void resolve(const LaxFunctorDecl& d) {
        auto it = doc_.shapes.find(d.shape.text);
        if (it == doc_.shapes.end()) missing(d.shape, "shape");
        const Shape& shape = it->second;
        const auto& base = quantaloid_ref(d.base);
        const auto& q = *base;
        std::vector<std::optional<ObjId>> objs(shape.objects.size());
        for (const auto& [o, x] : d.objects) {
            const auto i = index_in(shape.objects, o, "shape " + d.shape.text);
            if (objs[i]) fail(o.span, "shape object '" + o.text + "' assigned twice");
            objs[i] = base_object(q, x);
        }
        LaxFunctor<BaseCalculus> f{shape, {}, {}};
        for (std::size_t i = 0; i < objs.size(); ++i) {
            if (!objs[i]) fail(d.name.span, "lax functor " + d.name.text + " does not map '" + shape.objects[i] + "'");
            f.objects.push_back(*objs[i]);
        }
        std::vector<std::string> arrow_labels;
        for (const auto& a : shape.arrows) arrow_labels.push_back(a.label);
        std::vector<char> given(shape.arrows.size(), 0);
        for (std::size_t i = 0; i < shape.arrows.size(); ++i) {
            const auto& a = shape.arrows[i];
            const bool is_id = shape.identities[a.source] == i;
            f.arrows.push_back(is_id ? q.identity_arrow(f.objects[a.source]) : q.bottom(f.objects[a.source], f.objects[a.target]));
        }
        for (const auto& [an, z] : d.arrows) {
            std::size_t i = 0;
            while (i < arrow_labels.size() && arrow_labels[i] != an.text) ++i;
            if (i == arrow_labels.size()) fail(an.span, "'" + an.text + "' is not an arrow of shape " + d.shape.text);
            if (given[i]) fail(an.span, "arrow '" + an.text + "' assigned twice");
            given[i] = 1;
            const ObjId s = f.objects[shape.arrows[i].source], t = f.objects[shape.arrows[i].target];
            f.arrows[i] = {s, t, element(q.hom(s, t), z, hom_name(q, s, t))};
        }
        BaseCalculus calc{base};
        if (auto r = validate_lax_functor(calc, f); !r.ok()) report(d.name.span, r, "lax functor " + d.name.text);
        doc_.lax_functors.emplace(d.name.text, LaxFunctorValue{base, std::move(f)});
    }
};

}  // namespace

ParseResult parse(std::string_view source) {
    ParseResult r;
    try {
        auto toks = lex(source, r.diagnostics);
        QkDocument doc;
        Parser p(std::move(toks), r.diagnostics);
        doc.declarations = p.document();
        if (!r.diagnostics.empty()) return r;
        Resolver(doc, r.diagnostics).run();
        if (!r.diagnostics.empty()) return r;
        r.document = std::move(doc);
    } catch (const std::exception& e) {
        r.document.reset();
        r.diagnostics.push_back({Diagnostic::Severity::error, {1, 1, 0}, std::string("internal error: ") + e.what(), ""});
    }
    return r;
}

}  // namespace qk
