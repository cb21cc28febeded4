#include "qk/json_export.hpp"

namespace qk {

Json to_json(const CompleteLattice& l) {
    Json j;
    j["elements"] = l.labels();
    Json leq = Json::array();
    for (Elem x = 0; x < l.size(); ++x) {
        Json row = Json::array();
        for (Elem y = 0; y < l.size(); ++y) row.push_back(l.leq(x, y) ? 1 : 0);
        leq.push_back(std::move(row));
    }
    j["leq"] = std::move(leq);
    return j;
}

Json to_json(const Quantaloid& q) {
    Json j;
    j["objects"] = q.object_labels();
    Json homs = Json::array();
    for (ObjId a = 0; a < q.object_count(); ++a)
        for (ObjId b = 0; b < q.object_count(); ++b) {
            Json h;
            h["source"] = q.object_label(a);
            h["target"] = q.object_label(b);
            h["lattice"] = to_json(q.hom(a, b));
            homs.push_back(std::move(h));
        }
    j["homs"] = std::move(homs);
    Json ids = Json::object();
    for (ObjId a = 0; a < q.object_count(); ++a) ids[q.object_label(a)] = q.hom(a, a).label(q.identity(a));
    j["identities"] = std::move(ids);
    Json comp = Json::array();
    const auto n = q.object_count();
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (ObjId c = 0; c < n; ++c) {
                Json t;
                t["triple"] = {q.object_label(a), q.object_label(b), q.object_label(c)};
                Json rows = Json::array();
                for (Elem g = 0; g < q.hom(b, c).size(); ++g) {
                    Json row = Json::array();
                    for (Elem f = 0; f < q.hom(a, b).size(); ++f)
                        row.push_back(q.hom(a, c).label(q.compose(a, b, c, g, f)));
                    rows.push_back(std::move(row));
                }
                t["table"] = std::move(rows);
                comp.push_back(std::move(t));
            }
    j["compose"] = std::move(comp);
    return j;
}

Json to_json(const Quantaloid& q, const QArrow& f) {
    return Json{{"source", q.object_label(f.source)},
                {"target", q.object_label(f.target)},
                {"element", q.hom(f.source, f.target).label(f.elem)}};
}

Json to_json(const QCategory& a) {
    Json j;
    Json objs = Json::array();
    for (std::size_t x = 0; x < a.size(); ++x)
        objs.push_back(Json{{"label", a.label(x)}, {"type", a.base().object_label(a.type(x))}});
    j["objects"] = std::move(objs);
    Json hom = Json::array();
    for (std::size_t x2 = 0; x2 < a.size(); ++x2) {
        Json row = Json::array();
        for (std::size_t x = 0; x < a.size(); ++x) row.push_back(a.base().hom(a.type(x), a.type(x2)).label(a.hom(x2, x)));
        hom.push_back(std::move(row));
    }
    j["hom"] = std::move(hom);
    return j;
}

Json to_json(const Distributor& phi) {
    Json j;
    j["domain"] = phi.dom()->objects().labels;
    j["codomain"] = phi.cod()->objects().labels;
    Json rows = Json::array();
    for (std::size_t b = 0; b < phi.cod()->size(); ++b) {
        Json row = Json::array();
        for (std::size_t a = 0; a < phi.dom()->size(); ++a)
            row.push_back(phi.base().hom(phi.dom()->type(a), phi.cod()->type(b)).label(phi.at(b, a)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const QFunctor& f) {
    Json m = Json::object();
    for (std::size_t a = 0; a < f.dom()->size(); ++a) m[f.dom()->label(a)] = f.cod()->label(f(a));
    return Json{{"map", std::move(m)}};
}

Json to_json(const QMatrix& m) {
    Json j;
    j["domain"] = m.dom().labels;
    j["codomain"] = m.cod().labels;
    Json rows = Json::array();
    for (std::size_t y = 0; y < m.cod().size(); ++y) {
        Json row = Json::array();
        for (std::size_t x = 0; x < m.dom().size(); ++x)
            row.push_back(m.base().hom(m.dom().types[x], m.cod().types[y]).label(m.at(y, x)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const Shape& s) {
    Json arrows = Json::array();
    for (const auto& a : s.arrows)
        arrows.push_back(Json{{"label", a.label}, {"source", s.objects[a.source]}, {"target", s.objects[a.target]}});
    return Json{{"objects", s.objects}, {"arrows", std::move(arrows)}};
}

Json to_json(const UniversalityReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x{{"apex", row.apex},
               {"homs", row.homs},
               {"cones", row.cones},
               {"limit", row.limit_ok},
               {"colimit", row.colimit_ok}};
        if (!row.note.empty()) x["note"] = row.note;
        rows.push_back(std::move(x));
    }
    return Json{{"holds", r.holds},
                {"candidate_is_cone", r.candidate_is_cone},
                {"candidate_is_cocone", r.candidate_is_cocone},
                {"apex_set", "sampled"},
                {"apexes", std::move(rows)}};
}

Json envelope(const std::string& command) { return Json{{"schema", kJsonSchema}, {"command", command}}; }

}  // namespace qk
