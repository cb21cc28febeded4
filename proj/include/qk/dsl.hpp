#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "qk/matrixcalc.hpp"

namespace qk {

struct Span {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 0;
};

struct Diagnostic {
    enum class Severity { error, warning };
    Severity severity = Severity::error;
    Span span;
    std::string message;
    std::string hint;
    // "file:line:col: error: message" plus an indented hint line.
    std::string format(const std::string& file) const;
};

// A name as written, with its position. Equality ignores the position.
struct Name {
    std::string text;
    Span span;
    bool operator==(const Name& o) const { return text == o.text; }
};

struct CompositeEntry {
    Name g, f, h;  // (g,f) -> h
    bool operator==(const CompositeEntry&) const = default;
};

struct LatticeDecl {
    Name name;
    std::vector<Name> elements;
    std::vector<std::pair<Name, Name>> order;
    bool operator==(const LatticeDecl&) const = default;
};

struct ComposeDecl {
    Name x, y, z;
    std::string generate;  // empty, "meet", "plus-cap" or "table"
    std::vector<CompositeEntry> entries;
    bool operator==(const ComposeDecl&) const = default;
};

struct QuantaloidDecl {
    Name name;
    // Shorthand form: bool2, rel_locale, tropical, random, opposite; empty for a table.
    std::string builtin;
    std::vector<Name> args;
    std::vector<Name> objects;
    std::vector<std::tuple<Name, Name, Name>> homs;  // X Y : LATTICE
    std::vector<ComposeDecl> compose;
    std::vector<std::pair<Name, Name>> ids;
    std::string generate;  // default directive for triples without their own
    bool operator==(const QuantaloidDecl&) const = default;
};

struct CategoryDecl {
    Name name;
    Name base;
    std::vector<std::pair<Name, std::optional<Name>>> objects;
    std::vector<std::tuple<Name, Name, Name>> homs;  // hom a b = z means A(a,b) = z
    bool operator==(const CategoryDecl&) const = default;
};

struct FunctorDecl {
    Name name, dom, cod;
    std::vector<std::pair<Name, Name>> map;
    bool operator==(const FunctorDecl&) const = default;
};

struct DistributorDecl {
    Name name, dom, cod;
    std::vector<std::tuple<Name, Name, Name>> entries;  // (b,a) -> z
    bool operator==(const DistributorDecl&) const = default;
};

struct ShapeDecl {
    Name name;
    std::vector<Name> objects;
    std::vector<std::tuple<Name, Name, Name>> arrows;  // label: source -> target
    std::vector<CompositeEntry> compose;
    bool operator==(const ShapeDecl&) const = default;
};

struct LaxFunctorDecl {
    Name name, shape, base;
    std::vector<std::pair<Name, Name>> objects;
    std::vector<std::pair<Name, Name>> arrows;
    bool operator==(const LaxFunctorDecl&) const = default;
};

using Declaration = std::variant<LatticeDecl, QuantaloidDecl, CategoryDecl, FunctorDecl, DistributorDecl,
                                 ShapeDecl, LaxFunctorDecl>;

const Name& declaration_name(const Declaration& d);
std::string declaration_kind(const Declaration& d);

struct LaxFunctorValue {
    QuantaloidRef base;
    LaxFunctor<BaseCalculus> functor;
};

struct QkDocument {
    std::vector<Declaration> declarations;

    std::map<std::string, CompleteLattice> lattices;
    std::map<std::string, QuantaloidRef> quantaloids;
    std::map<std::string, CategoryRef> categories;
    std::map<std::string, QFunctor> functors;
    std::map<std::string, Distributor> distributors;
    std::map<std::string, Shape> shapes;
    std::map<std::string, LaxFunctorValue> lax_functors;

    // Names of a kind in declaration order.
    std::vector<std::string> names(const std::string& kind) const;
    std::optional<std::string> kind_of(const std::string& name) const;
    // Declarations compared as written, positions ignored.
    bool operator==(const QkDocument& o) const { return declarations == o.declarations; }
};

struct ParseResult {
    std::optional<QkDocument> document;
    std::vector<Diagnostic> diagnostics;  // warnings may accompany a document
    bool ok() const noexcept { return document.has_value(); }
};

// Total: returns a document, or a nonempty list of error diagnostics.
ParseResult parse(std::string_view source);

// Canonical text; parse(pretty_print(doc)) yields an equal document.
std::string pretty_print(const QkDocument& doc);
std::string pretty_print(const Declaration& d);

}  // namespace qk
