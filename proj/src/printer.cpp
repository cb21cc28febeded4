#include "qk/dsl.hpp"

namespace qk {

namespace {

template <class T, class F>
std::string joined(const std::vector<T>& v, F show) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += ", ";
        s += show(x);
    }
    return s;
}

std::string entry(const CompositeEntry& e) { return "(" + e.g.text + "," + e.f.text + ") -> " + e.h.text; }

std::string print(const LatticeDecl& d) {
    std::string s = "lattice " + d.name.text + " {\n";
    if (!d.elements.empty()) s += "  elements: " + joined(d.elements, [](const Name& n) { return n.text; }) + ";\n";
    if (!d.order.empty())
        s += "  order: " + joined(d.order, [](const auto& p) { return p.first.text + " <= " + p.second.text; }) + ";\n";
    return s + "}\n";
}

std::string print(const QuantaloidDecl& d) {
    if (!d.builtin.empty()) {
        std::string s = "quantaloid " + d.name.text + " = " + d.builtin;
        if (d.builtin != "bool2") s += "(" + joined(d.args, [](const Name& n) { return n.text; }) + ")";
        return s + ";\n";
    }
    std::string s = "quantaloid " + d.name.text + " {\n";
    if (!d.objects.empty()) s += "  objects: " + joined(d.objects, [](const Name& n) { return n.text; }) + ";\n";
    if (!d.generate.empty()) s += "  generate: " + d.generate + ";\n";
    for (const auto& [x, y, l] : d.homs) s += "  hom " + x.text + " " + y.text + ": " + l.text + ";\n";
    for (const auto& c : d.compose) {
        s += "  compose " + c.x.text + " " + c.y.text + " " + c.z.text + ":";
        if (!c.generate.empty()) s += " generate " + c.generate;
        if (!c.entries.empty() || c.generate.empty()) s += " { " + joined(c.entries, entry) + " }";
        s += ";\n";
    }
    for (const auto& [x, e] : d.ids) s += "  id " + x.text + ": " + e.text + ";\n";
    return s + "}\n";
}

std::string print(const CategoryDecl& d) {
    std::string s = "category " + d.name.text + " over " + d.base.text + " {\n";
    if (!d.objects.empty())
        s += "  objects: " + joined(d.objects, [](const auto& p) { return p.first.text + (p.second ? ":" + p.second->text : ""); }) +
             ";\n";
    for (const auto& [a, b, z] : d.homs) s += "  hom " + a.text + " " + b.text + " = " + z.text + ";\n";
    return s + "}\n";
}

std::string print(const FunctorDecl& d) {
    std::string s = "functor " + d.name.text + ": " + d.dom.text + " -> " + d.cod.text + " {\n";
    if (!d.map.empty()) s += "  " + joined(d.map, [](const auto& p) { return p.first.text + " -> " + p.second.text; }) + ";\n";
    return s + "}\n";
}

std::string print(const DistributorDecl& d) {
    std::string s = "distributor " + d.name.text + ": " + d.dom.text + " -|-> " + d.cod.text + " {\n";
    if (!d.entries.empty())
        s += "  " + joined(d.entries, [](const auto& t) {
                 return "(" + std::get<0>(t).text + "," + std::get<1>(t).text + ") -> " + std::get<2>(t).text;
             }) + ";\n";
    return s + "}\n";
}

std::string print(const ShapeDecl& d) {
    std::string s = "shape " + d.name.text + " {\n";
    if (!d.objects.empty()) s += "  objects: " + joined(d.objects, [](const Name& n) { return n.text; }) + ";\n";
    if (!d.arrows.empty())
        s += "  arrows: " + joined(d.arrows, [](const auto& t) {
                 return std::get<0>(t).text + ": " + std::get<1>(t).text + " -> " + std::get<2>(t).text;
             }) + ";\n";
    if (!d.compose.empty()) s += "  compose: " + joined(d.compose, entry) + ";\n";
    return s + "}\n";
}

std::string print(const LaxFunctorDecl& d) {
    std::string s = "laxfunctor " + d.name.text + ": " + d.shape.text + " -> " + d.base.text + " {\n";
    auto pairs = [](const auto& p) { return p.first.text + " -> " + p.second.text; };
    if (!d.objects.empty()) s += "  objects: " + joined(d.objects, pairs) + ";\n";
    if (!d.arrows.empty()) s += "  arrows: " + joined(d.arrows, pairs) + ";\n";
    return s + "}\n";
}

}  // namespace

std::string pretty_print(const Declaration& d) {
    return std::visit([](const auto& x) { return print(x); }, d);
}

std::string pretty_print(const QkDocument& doc) {
    std::string s;
    for (std::size_t i = 0; i < doc.declarations.size(); ++i) {
        if (i) s += "\n";
        s += pretty_print(doc.declarations[i]);
    }
    return s;
}

}  // namespace qk
