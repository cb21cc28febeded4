#include "qk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "qk/json_export.hpp"
#include "qk/laws.hpp"

namespace qk::cli {

namespace {

// Bad names or ill-typed requests on the command line: exit 2.
struct UsageError : Error {
    using Error::Error;
};

struct Globals {
    bool json = false;
    std::size_t cap = kDefaultPresheafCap;
    std::uint64_t seed = 1;
};

struct Session {
    std::string file;
    QkDocument doc;
    const Globals& g;
    std::ostream& out;
    std::ostream& err;

    int emit(const Json& j, const std::string& text, int code) {
        if (g.json)
            out << j.dump(2) << "\n";
        else
            out << text;
        return code;
    }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const QkDocument& doc, const std::string& name,
                                        const std::string& kind) {
    auto it = m.find(name);
    if (it != m.end()) return it->second;
    if (auto k = doc.kind_of(name)) throw UsageError("'" + name + "' is a " + *k + ", expected a " + kind);
    throw UsageError("unknown " + kind + " '" + name + "'");
}

const CategoryRef& category(Session& s, const std::string& n) { return lookup(s.doc.categories, s.doc, n, "category"); }
const Distributor& distributor(Session& s, const std::string& n) {
    return lookup(s.doc.distributors, s.doc, n, "distributor");
}
const QFunctor& functor(Session& s, const std::string& n) { return lookup(s.doc.functors, s.doc, n, "functor"); }

// Q/X/Y/label, or Q/label for a one-object quantaloid.
std::optional<std::pair<QuantaloidRef, QArrow>> arrow_ref(Session& s, const std::string& ref) {
    std::vector<std::string> parts;
    std::stringstream ss(ref);
    for (std::string p; std::getline(ss, p, '/');) parts.push_back(p);
    if (parts.size() != 2 && parts.size() != 4) return std::nullopt;
    const auto& q = lookup(s.doc.quantaloids, s.doc, parts[0], "quantaloid");
    if (parts.size() == 2) {
        if (q->object_count() != 1) throw UsageError("'" + ref + "': write Q/X/Y/label for a quantaloid with several objects");
        try {
            return std::make_pair(q, q->arrow(0, 0, parts[1]));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    auto x = q->find_object(parts[1]), y = q->find_object(parts[2]);
    if (!x || !y) throw UsageError("'" + ref + "' names an unknown object");
    try {
        return std::make_pair(q, q->arrow(*x, *y, parts[3]));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// compose, lift and ext on arrows, distributors and (for compose) functors.
int binary_op(Session& s, const std::string& op, const std::string& lhs, const std::string& rhs) {
    auto j = envelope(op);
    if (auto l = arrow_ref(s, lhs)) {
        auto r = arrow_ref(s, rhs);
        if (!r || r->first != l->first) throw UsageError("both operands must be arrows of the same quantaloid");
        const auto& q = *l->first;
        const auto& g = l->second;
        const auto& f = r->second;
        QArrow res;
        if (op == "compose") {
            if (f.target != g.source) throw UsageError("arrows are not composable");
            res = q.compose(g, f);
        } else if (op == "lift") {
            if (g.target != f.target) throw UsageError("lift needs arrows with a common target");
            res = q.lift(g, f);
        } else {
            if (g.source != f.source) throw UsageError("ext needs arrows with a common source");
            res = q.ext(g, f);
        }
        j["result"] = to_json(q, res);
        return s.emit(j, q.format(res) + "\n", kExitOk);
    }
    if (s.doc.distributors.count(lhs)) {
        const auto& a = distributor(s, lhs);
        const auto& b = distributor(s, rhs);
        Distributor res;
        try {
            res = op == "compose" ? dist_compose(a, b) : op == "lift" ? dist_lift(a, b) : dist_ext(a, b);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        j["result"] = to_json(res);
        return s.emit(j, format_distributor(res) + "\n", kExitOk);
    }
    if (s.doc.functors.count(lhs)) {
        if (op != "compose") throw UsageError(op + " is defined on arrows and distributors");
        const auto& g = functor(s, lhs);
        const auto& f = functor(s, rhs);
        if (f.cod() != g.dom() && !same_category(*f.cod(), *g.dom())) throw UsageError("functors are not composable");
        const auto res = compose_functors(g, QFunctor(f.dom(), g.dom(), f.map()));
        j["result"] = to_json(res);
        return s.emit(j, format_functor(res) + "\n", kExitOk);
    }
    if (auto k = s.doc.kind_of(lhs)) throw UsageError("'" + lhs + "' is a " + *k + ", expected an arrow, distributor or functor");
    throw UsageError("unknown operand '" + lhs + "'");
}

Json failing_point(const Distributor& weight, const FunctorResult& r) {
    if (!r.failing) return nullptr;
    return Json{{"object", weight.dom()->label(*r.failing)}};
}

int colim_or_lim(Session& s, bool colim, const std::string& wname, const std::string& fname) {
    const auto& w = distributor(s, wname);
    const auto& f = functor(s, fname);
    FunctorResult r;
    try {
        r = colim ? weighted_colim(w, f) : weighted_lim(w, f);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const std::string cmd = colim ? "colim" : "lim";
    auto j = envelope(cmd);
    j["weight"] = wname;
    j["diagram"] = fname;
    j["exists"] = r.exists();
    if (r) {
        j["result"] = to_json(*r);
        return s.emit(j, cmd + " exists: " + format_functor(*r) + "\n", kExitOk);
    }
    j["failing"] = failing_point(w, r);
    std::string text = cmd + " does not exist";
    if (r.failing) text += ": no representing object at " + w.dom()->label(*r.failing);
    return s.emit(j, text + "\n", kExitFails);
}

int presheaves_cmd(Session& s, const std::string& cname) {
    const auto& a = category(s, cname);
    const auto ps = enumerate_presheaves(a, s.g.cap);
    auto j = envelope("presheaves");
    j["category"] = cname;
    j["count"] = ps.size();
    Json arr = Json::array();
    std::string text = std::to_string(ps.size()) + " presheaves on " + cname + "\n";
    for (const auto& p : ps) {
        arr.push_back(Json{{"type", a->base().object_label(p.dom()->type(0))}, {"presheaf", to_json(p)}});
        text += "  " + format_distributor(p) + "\n";
    }
    j["presheaves"] = std::move(arr);
    return s.emit(j, text, kExitOk);
}

int yoneda_cmd(Session& s, const std::string& cname) {
    const auto& a = category(s, cname);
    const auto pa = presheaf_category(a, s.g.cap);
    const auto y = yoneda(pa);
    std::size_t checked = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < pa.presheaves.size(); ++i) {
        const auto& phi = pa.presheaves[i];
        for (std::size_t x = 0; x < a->size(); ++x, ++checked)
            if (presheaf_hom(representable(a, x), phi) != phi.at(x, 0))
                failures.push_back(Json{{"law", "yoneda"}, {"presheaf", i}, {"object", a->label(x)}});
        auto col = weighted_colim(phi, y);
        ++checked;
        if (!col || (*col)(0) != i) failures.push_back(Json{{"law", "colim-yoneda"}, {"presheaf", i}});
    }
    auto j = envelope("yoneda-check");
    j["category"] = cname;
    j["presheaves"] = pa.presheaves.size();
    j["checked"] = checked;
    j["holds"] = failures.empty();
    j["failures"] = failures;
    std::string text = "yoneda: " + std::to_string(checked) + " checks over " + std::to_string(pa.presheaves.size()) +
                       " presheaves, " + std::to_string(failures.size()) + " failures\n";
    return s.emit(j, text, failures.empty() ? kExitOk : kExitFails);
}

int kan_cmd(Session& s, const std::string& fname, const std::string& gname, bool brute, bool right) {
    const auto& f = functor(s, fname);
    const auto& g = functor(s, gname);
    if (f.dom() != g.dom() && !same_category(*f.dom(), *g.dom())) throw UsageError("F and G need a common domain");
    FunctorResult r;
    if (brute)
        r = right ? kan_right_bruteforce(f, g) : kan_left_bruteforce(f, g);
    else
        r = right ? kan_right_pointwise(f, g) : kan_left_pointwise(f, g);
    auto j = envelope("kan");
    j["side"] = right ? "right" : "left";
    j["method"] = brute ? "bruteforce" : "pointwise";
    j["exists"] = r.exists();
    std::string text = std::string(right ? "right" : "left") + " Kan extension ";
    if (r) {
        j["result"] = to_json(*r);
        return s.emit(j, text + "exists: " + format_functor(*r) + "\n", kExitOk);
    }
    if (r.failing) j["failing"] = Json{{"object", g.cod()->label(*r.failing)}};
    text += "does not exist";
    if (r.failing) text += " at " + g.cod()->label(*r.failing);
    return s.emit(j, text + "\n", kExitFails);
}

int cocomplete_cmd(Session& s, const std::string& cname) {
    const auto& a = category(s, cname);
    const auto r = cocompleteness(a, s.g.cap);
    auto j = envelope("cocomplete");
    j["category"] = cname;
    j["holds"] = r.holds;
    j["weights"] = r.weights.size();
    std::string text = cname + (r.holds ? " is cocomplete" : " is not cocomplete");
    if (r.failing) {
        j["failing"] = Json{{"weight", to_json(r.weights[*r.failing])}};
        text += ": no colimit for " + format_distributor(r.weights[*r.failing]);
    }
    return s.emit(j, text + "\n", r.holds ? kExitOk : kExitFails);
}

int cauchy_complete_cmd(Session& s, const std::string& cname) {
    const auto& a = category(s, cname);
    const auto c = cauchy_completeness(a, s.g.cap);
    const auto cc = cauchy_completion(a, s.g.cap);
    auto j = envelope("cauchy-complete");
    j["category"] = cname;
    j["holds"] = c.holds;
    j["cauchy_presheaves"] = c.cauchy.size();
    j["completion"] = to_json(*cc.category());
    j["unit"] = to_json(cc.unit);
    std::string text = cname + (c.holds ? " is Cauchy complete" : " is not Cauchy complete");
    text += " (" + std::to_string(c.cauchy.size()) + " Cauchy presheaves)";
    if (c.failing) {
        j["failing"] = to_json(c.cauchy[*c.failing]);
        text += ": " + format_distributor(c.cauchy[*c.failing]) + " is not representable";
    }
    return s.emit(j, text + "\n", c.holds ? kExitOk : kExitFails);
}

int cauchy_test_cmd(Session& s, const std::string& pname) {
    const auto& phi = distributor(s, pname);
    const auto w = cauchy_witness(phi);
    auto j = envelope("cauchy-test");
    j["distributor"] = pname;
    j["holds"] = w.holds();
    j["unit"] = w.unit;
    j["counit"] = w.counit;
    j["right_adjoint"] = to_json(w.right_adjoint);
    std::string text = pname + (w.holds() ? " is Cauchy" : " is not Cauchy") + " (unit " + bool_text(w.unit) +
                       ", counit " + bool_text(w.counit) + ")\n";
    return s.emit(j, text, w.holds() ? kExitOk : kExitFails);
}

// Objects of A_cc named by the objects of A they represent, else by the presheaf.
std::vector<std::string> completion_labels(const CategoryRef& a, std::size_t cap) {
    const auto cc = cauchy_completion(a, cap);
    std::vector<std::string> out(cc.category()->size());
    for (std::size_t x = 0; x < a->size(); ++x) {
        auto& l = out[cc.unit(x)];
        l += (l.empty() ? "y(" : "=y(") + a->label(x) + ")";
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].empty()) out[i] = format_distributor(cc.completion.presheaves[i]);
    return out;
}

int morita_cmd(Session& s, const std::string& an, const std::string& bn) {
    const auto& a = category(s, an);
    const auto& b = category(s, bn);
    if (!same_base(a->base(), b->base())) throw UsageError("categories over different bases");
    const auto r = morita_equivalent(a, b, s.g.cap);
    auto j = envelope("morita");
    j["left"] = an;
    j["right"] = bn;
    j["equivalent"] = r.equivalent;
    std::string text = an + " and " + bn +
                       (r.equivalent ? " are Morita equivalent" : " are not Morita equivalent");
    if (r.equivalent) {
        Json bij = Json::array();
        text += "\n  bijection of Cauchy completions:";
        const auto ll = completion_labels(a, s.g.cap), rl = completion_labels(b, s.g.cap);
        for (std::size_t i = 0; i < r.bijection.size(); ++i) {
            bij.push_back(Json{{"left", ll[i]}, {"right", rl[r.bijection[i]]}});
            text += "\n    " + ll[i] + " -> " + rl[r.bijection[i]];
        }
        j["bijection"] = std::move(bij);
    } else {
        j["reason"] = r.reason;
        text += ": " + r.reason;
    }
    return s.emit(j, text + "\n", r.equivalent ? kExitOk : kExitFails);
}

int matr_cmd(Session& s, const std::string& psin, const std::string& phin) {
    const auto& psi = distributor(s, psin);
    const auto& phi = distributor(s, phin);
    const auto m = matrix_of(psi), n = matrix_of(phi);
    if (!(n.cod() == m.dom())) throw UsageError("matrices are not composable");
    const auto prod = matr_compose(m, n);
    const bool agrees = prod == matrix_of(dist_compose(psi, phi));
    auto j = envelope("matr");
    j["product"] = to_json(prod);
    j["agrees_with_distributor_composite"] = agrees;
    MatrixCalculus mc{psi.dom()->base_ref()};
    return s.emit(j, mc.describe(prod) + "\nagrees with " + psin + " ⊗ " + phin + ": " + bool_text(agrees) + "\n",
                  agrees ? kExitOk : kExitFails);
}

int bim_cmd(Session& s) {
    std::vector<CategoryRef> cats;
    std::vector<Distributor> dists;
    for (const auto& n : s.doc.names("category")) cats.push_back(s.doc.categories.at(n));
    for (const auto& n : s.doc.names("distributor")) dists.push_back(s.doc.distributors.at(n));
    const auto r = dist_equals_bim_matr(cats, dists);
    auto j = envelope("bim");
    j["holds"] = r.holds;
    Json rows = Json::array();
    std::string text;
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"check", row.what}, {"agrees", row.agrees}});
        text += std::string(row.agrees ? "ok   " : "FAIL ") + row.what + "\n";
    }
    j["rows"] = std::move(rows);
    text += "Dist = Bim(Matr): " + bool_text(r.holds) + " (" + std::to_string(r.rows.size()) + " checks)\n";
    return s.emit(j, text, r.holds ? kExitOk : kExitFails);
}

int dsum_cmd(Session& s, const std::vector<std::string>& names) {
    if (names.empty()) throw UsageError("dsum needs at least one category");
    std::vector<TypedSet> fam;
    QuantaloidRef base;
    for (const auto& n : names) {
        const auto& a = category(s, n);
        if (base && !same_base(*base, a->base())) throw UsageError("categories over different bases");
        base = a->base_ref();
        fam.push_back(a->objects());
    }
    MatrixCalculus mc{base};
    const auto d = direct_sum(base, fam);
    const bool eqs = verify_direct_sum(mc, fam, d.sum, d.projections, d.coprojections);
    std::vector<TypedSet> apexes;
    for (ObjId t = 0; t < base->object_count(); ++t) apexes.push_back({{"*" + base->object_label(t)}, {t}});
    const auto u = verify_lax_universality(mc, discrete_diagram(mc, fam),
                                           LaxCandidate<MatrixCalculus>{d.sum, d.projections, d.coprojections}, apexes,
                                           s.g.cap * 1024);
    auto j = envelope("dsum");
    j["sum"] = mc.describe(d.sum);
    Json ps = Json::array(), cs = Json::array();
    for (const auto& p : d.projections) ps.push_back(to_json(p));
    for (const auto& c : d.coprojections) cs.push_back(to_json(c));
    j["projections"] = std::move(ps);
    j["coprojections"] = std::move(cs);
    j["equations"] = eqs;
    j["universality"] = to_json(u);
    const bool ok = eqs && u.holds;
    std::string text = "direct sum " + mc.describe(d.sum) + "\n  equations: " + bool_text(eqs) +
                       "\n  universality over " + std::to_string(apexes.size()) + " sampled apexes: " + bool_text(u.holds) + "\n";
    return s.emit(j, text, ok ? kExitOk : kExitFails);
}

int split_cmd(Session& s, const std::string& qn, const std::string& xn, const std::string& tn, const std::string& sn) {
    const auto& q = lookup(s.doc.quantaloids, s.doc, qn, "quantaloid");
    auto x = q->find_object(xn);
    if (!x) throw UsageError("unknown object '" + xn + "' of " + qn);
    QArrow t, sa;
    try {
        t = q->arrow(*x, *x, tn);
        sa = q->arrow(*x, *x, sn);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    BaseCalculus calc{q};
    BimQ bim{calc};
    MonadSplit<BaseCalculus> sp;
    try {
        sp = split_monad(bim, Monad<BaseCalculus>{*x, t}, sa);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::vector<Monad<BaseCalculus>> apexes;
    for (ObjId a = 0; a < q->object_count(); ++a)
        for (const auto& m : enumerate_monads(calc, a)) apexes.push_back(m);
    LaxFunctor<BimQ> f{Shape::generic_object(), {Monad<BaseCalculus>{*x, t}}, {Bimodule<BaseCalculus>{{*x, t}, {*x, t}, sa}}};
    const auto u = verify_lax_universality(bim, f, LaxCandidate<BimQ>{sp.object, {sp.projection}, {sp.coprojection}},
                                           apexes, s.g.cap * 1024);
    auto j = envelope("split");
    j["object"] = bim.describe(sp.object);
    j["projection"] = bim.describe(sp.projection);
    j["coprojection"] = bim.describe(sp.coprojection);
    j["equations"] = sp.verified;
    j["universality"] = to_json(u);
    const bool ok = sp.verified && u.holds;
    std::string text = "split object " + bim.describe(sp.object) + "\n  p∘s' = s, s'∘p = 1: " + bool_text(sp.verified) +
                       "\n  universality over " + std::to_string(apexes.size()) + " sampled apexes: " + bool_text(u.holds) + "\n";
    return s.emit(j, text, ok ? kExitOk : kExitFails);
}

int lax_colim_cmd(Session& s, const std::string& name) {
    const auto& lf = lookup(s.doc.lax_functors, s.doc, name, "laxfunctor");
    BaseCalculus calc{lf.base};
    const auto lc = lax_colimit_in_dist(calc, lf.functor);
    std::vector<CategoryRef> extra;
    for (const auto& n : s.doc.names("category")) {
        const auto& a = s.doc.categories.at(n);
        if (same_base(a->base(), *lf.base) && a->size() <= 2) extra.push_back(a);
    }
    const auto apexes = default_apex_set(lc, extra);
    const auto u = verify_lax_colimit_universality(lc, apexes, s.g.cap * 1024);
    auto j = envelope("lax-colim");
    j["laxfunctor"] = name;
    j["category"] = to_json(*lc.category);
    j["sums_to_identity"] = lc.sums_to_identity;
    j["projections_match"] = lc.projections_match;
    j["adjunctions"] = lc.adjunctions;
    j["universality"] = to_json(u);
    const bool ok = lc.verified() && u.holds;
    std::string text = "lax colimit of " + name + ": " + std::to_string(lc.category->size()) + " objects\n" +
                       "  ⋁ s∘p = 1: " + bool_text(lc.sums_to_identity) + "\n  p∘s = 𝔻: " + bool_text(lc.projections_match) +
                       "\n  s ⊣ p: " + bool_text(lc.adjunctions) + "\n  universality over " + std::to_string(apexes.size()) +
                       " sampled apexes: " + bool_text(u.holds) + "\n";
    return s.emit(j, text, ok ? kExitOk : kExitFails);
}

int laws_cmd(Session& s, const std::optional<std::string>& suite, std::size_t random) {
    if (suite && !is_law_suite(*suite)) throw UsageError("unknown suite '" + *suite + "'");
    LawOptions o;
    o.suite = suite;
    o.seed = s.g.seed;
    o.cap = s.g.cap;
    o.random = random;
    const auto r = run_laws(s.doc, o);
    for (const auto& w : r.warnings) s.err << s.file << ": warning: " << w << "\n";
    auto j = envelope("laws");
    j["seed"] = o.seed;
    j["cap"] = o.cap;
    if (suite) j["suite"] = *suite;
    Json rows = Json::array();
    std::string text;
    for (const auto& row : r.rows) {
        Json x{{"suite", row.suite}, {"law", row.law}, {"anchor", row.anchor}, {"instance", row.instance},
               {"status", status_name(row.status)}};
        if (!row.detail.empty()) x["detail"] = row.detail;
        rows.push_back(std::move(x));
        text += std::string(row.status == LawStatus::pass ? "pass " : row.status == LawStatus::fail ? "FAIL " : "skip ") +
                row.suite + "/" + row.law + " [" + row.instance + "]";
        if (!row.detail.empty()) text += ": " + row.detail;
        text += "\n";
    }
    j["rows"] = std::move(rows);
    j["warnings"] = r.warnings;
    j["passed"] = r.count(LawStatus::pass);
    j["failed"] = r.count(LawStatus::fail);
    j["skipped"] = r.count(LawStatus::skipped);
    text += std::to_string(r.count(LawStatus::pass)) + " passed, " + std::to_string(r.count(LawStatus::fail)) +
            " failed, " + std::to_string(r.count(LawStatus::skipped)) + " skipped\n";
    const int code = !r.passed() ? kExitFails : r.count(LawStatus::skipped) > 0 ? kExitCap : kExitOk;
    if (code == kExitCap)
        s.err << s.file << ": error: " << r.count(LawStatus::skipped) << " rows skipped at the cap\n  hint: raise --cap\n";
    return s.emit(j, text, code);
}

int validate_cmd(Session& s) {
    auto j = envelope("validate");
    Json decls = Json::array();
    std::string text;
    for (const auto& d : s.doc.declarations) {
        decls.push_back(Json{{"kind", declaration_kind(d)}, {"name", declaration_name(d).text}});
        text += declaration_kind(d) + " " + declaration_name(d).text + "\n";
    }
    j["declarations"] = std::move(decls);
    j["valid"] = true;
    return s.emit(j, text + s.file + ": " + std::to_string(s.doc.declarations.size()) + " declarations, valid\n", kExitOk);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite quantaloid-enriched category calculus", "qk"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--cap", g.cap, "enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for random instances");

    std::string file;
    std::vector<std::string> pos;
    std::function<int(Session&)> action;

    auto sub = [&](const std::string& name, const std::string& help, std::vector<std::string> names,
                   std::function<int(Session&)> f) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("FILE", file, ".qk document")->required();
        for (const auto& n : names) {
            if (n.ends_with("...")) {
                c->add_option(n.substr(0, n.size() - 3), pos, n)->required();
            } else {
                c->add_option_function<std::string>(n, [&pos](const std::string& v) { pos.push_back(v); }, n)->required();
            }
        }
        c->callback([&action, f] { action = f; });
        return c;
    };

    sub("validate", "parse and validate a document", {}, [](Session& s) { return validate_cmd(s); });
    for (const char* op : {"compose", "lift", "ext"}) {
        std::string o = op;
        sub(o, o + " of arrows (Q/X/Y/label), distributors or functors", {"LHS", "RHS"},
            [&pos, o](Session& s) { return binary_op(s, o, pos[0], pos[1]); });
    }
    sub("colim", "weighted colimit colim(THETA, F)", {"THETA", "F"},
        [&pos](Session& s) { return colim_or_lim(s, true, pos[0], pos[1]); });
    sub("lim", "weighted limit lim(PHI, F)", {"PHI", "F"}, [&pos](Session& s) { return colim_or_lim(s, false, pos[0], pos[1]); });
    sub("presheaves", "enumerate presheaves", {"CAT"}, [&pos](Session& s) { return presheaves_cmd(s, pos[0]); });
    sub("yoneda-check", "Yoneda lemma and colim(φ,Y) = φ for every presheaf", {"CAT"},
        [&pos](Session& s) { return yoneda_cmd(s, pos[0]); });
    bool brute = false, right = false;
    auto* kan = sub("kan", "Kan extension of F along G", {"F", "G"},
                    [&pos, &brute, &right](Session& s) { return kan_cmd(s, pos[0], pos[1], brute, right); });
    kan->add_flag("--bruteforce", brute, "search all functors rather than the pointwise formula");
    kan->add_flag("--right", right, "right Kan extension");
    sub("cocomplete", "is CAT cocomplete", {"CAT"}, [&pos](Session& s) { return cocomplete_cmd(s, pos[0]); });
    sub("cauchy-complete", "Cauchy completeness and completion of CAT", {"CAT"},
        [&pos](Session& s) { return cauchy_complete_cmd(s, pos[0]); });
    sub("cauchy-test", "is the distributor PHI Cauchy", {"PHI"}, [&pos](Session& s) { return cauchy_test_cmd(s, pos[0]); });
    sub("morita", "Morita equivalence of A and B", {"A", "B"}, [&pos](Session& s) { return morita_cmd(s, pos[0], pos[1]); });
    sub("matr", "matrix product of PSI and PHI", {"PSI", "PHI"}, [&pos](Session& s) { return matr_cmd(s, pos[0], pos[1]); });
    sub("bim", "Dist(Q) against Bim(Matr(Q)) on the document", {}, [](Session& s) { return bim_cmd(s); });
    sub("dsum", "direct sum of the object sets of categories", {"CAT..."}, [&pos](Session& s) { return dsum_cmd(s, pos); });
    sub("split", "split the monad S on the monad T at object X of Q", {"Q", "X", "T", "S"},
        [&pos](Session& s) { return split_cmd(s, pos[0], pos[1], pos[2], pos[3]); });
    sub("lax-colim", "lax colimit in Dist(Q) of a lax functor", {"LAXF"},
        [&pos](Session& s) { return lax_colim_cmd(s, pos[0]); });
    std::optional<std::string> suite;
    std::size_t random = 1;
    auto* laws = sub("laws", "run the law battery", {}, [&suite, &random](Session& s) { return laws_cmd(s, suite, random); });
    laws->add_option("--suite", suite, "run one suite");
    laws->add_option("--random", random, "seeded random instances per base");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qk: " << e.what() << "\n";
        return kExitInvalid;
    }

    const auto text = read_file(file);
    if (!text) {
        err << file << ": error: cannot read file\n";
        return kExitInvalid;
    }
    auto parsed = parse(*text);
    for (const auto& d : parsed.diagnostics) err << d.format(file) << "\n";
    if (!parsed.ok()) return kExitInvalid;

    Session s{file, std::move(*parsed.document), g, out, err};
    try {
        return action(s);
    } catch (const CapExceeded& e) {
        err << file << ": error: " << e.what() << "\n  hint: raise --cap\n";
        return kExitCap;
    } catch (const UsageError& e) {
        err << file << ": error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DomainError& e) {
        err << file << ": error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << file << ": error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace qk::cli
