#include "asymih/report.hpp"

namespace asymih {

Json to_json(const GaussRat& z) { return z.to_string(); }

Json to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& z : p) out.push_back(to_json(z));
    return out;
}

Json to_json(const MonomialArc& arc) {
    return Json{{"text", arc.to_string()},
                {"exponents", {arc.exponents[0], arc.exponents[1]}},
                {"coefficients", {to_json(arc.coefficients[0]), to_json(arc.coefficients[1])}}};
}

Json to_json(const Witness& w) { return Json{{"arc", to_json(w.arc)}, {"target", to_json(w.target)}}; }

Json to_json(const AlgebraicSet& s) {
    Json comps = Json::array();
    for (const auto& c : s.components) {
        Json wit = Json::array();
        for (const auto& w : c.witnesses) wit.push_back(to_json(w));
        Json samples = Json::array();
        for (const auto& r : c.samples) samples.push_back(Json{{"target", to_json(r.target)}, {"outcome", r.outcome}});
        comps.push_back(Json{{"equation", c.equation.to_string()},
                             {"status", to_string(c.status)},
                             {"witnesses", wit},
                             {"samples", samples}});
    }
    Json aux = Json::array();
    for (const auto& a : s.auxiliary) aux.push_back(a.to_string());
    return Json{{"ambient_vars", s.ambient_vars}, {"components", comps}, {"auxiliary", aux}};
}

Json to_json(const DirectionSet& d) {
    Json dirs = Json::array();
    for (const auto& dir : d.directions) {
        dirs.push_back(Json{{"point", {to_json(dir.point[0]), to_json(dir.point[1])}}, {"multiplicity", dir.multiplicity}});
    }
    return Json{{"directions", dirs},
                {"nonrational", d.nonrational},
                {"degenerate", d.degenerate},
                {"all_directions", d.all_directions}};
}

Json to_json(const ArcLimit& l) {
    Json vals = Json::array();
    for (const auto& v : l.values) vals.push_back(v ? to_json(*v) : Json("inf"));
    return Json{{"values", vals}, {"finite", l.finite()}};
}

Json to_json(const PMReport& r) {
    Json sing = Json::array();
    for (const auto& s : r.singular) {
        sing.push_back(Json{{"simplex", s.simplex}, {"codim", s.codim}, {"reason", s.reason}});
    }
    return Json{{"is_pure", r.is_pure}, {"sing_codim_ok", r.sing_codim_ok}, {"singular", sing}};
}

Json to_json(const ChainVector& c, const SimplicialComplex& x) {
    Json terms = Json::array();
    const auto& all = x.simplices(c.degree);
    for (const auto& [k, a] : c.coefficients) {
        terms.push_back(Json{{"simplex", all.at(k)}, {"coefficient", rational_to_string(a)}});
    }
    return Json{{"degree", c.degree}, {"terms", terms}};
}

Json to_json(const std::vector<long>& ranks) {
    Json out = Json::array();
    for (long r : ranks) out.push_back(r);
    return out;
}

Json to_json(const DualityReport& r) {
    Json out{{"applicable", r.applicable}};
    if (!r.applicable) {
        out["reason"] = r.reason;
        return out;
    }
    out["p_ranks"] = to_json(r.p_ranks);
    out["q_ranks"] = to_json(r.q_ranks);
    out["passed"] = r.passed;
    return out;
}

Json to_json(const EquivalenceReport& r) {
    Json ih2 = Json::array();
    for (const auto& p : r.ih2) ih2.push_back(Json{{"perversity", p.name}, {"values", p.values}, {"rank", p.rank}});
    Json out{{"id", r.id}, {"kind", r.kind}};
    out["verdict"] = r.verdict ? Json(to_string(*r.verdict)) : Json(nullptr);
    out["betti"] = to_json(r.betti);
    out["b2"] = r.b2;
    out["ih2"] = ih2;
    out["pseudomanifold"] = r.pseudomanifold;
    out["even_strata"] = r.even_strata;
    out["locus_contained"] = r.locus_contained;
    out["consistent"] = r.consistent;
    out["excluded"] = r.excluded;
    out["control"] = r.control;
    out["as_expected"] = r.as_expected;
    out["diagnostics"] = r.diagnostics;
    return out;
}

}  // namespace asymih
