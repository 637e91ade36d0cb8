#include "asymih/models.hpp"

#include "asymih/complex_io.hpp"
#include "asymih/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#ifndef ASYMIH_DEFAULT_DATA_DIR
#define ASYMIH_DEFAULT_DATA_DIR "data"
#endif

namespace asymih {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("ASYMIH_DATA_DIR"); env && *env) return env;
    return ASYMIH_DEFAULT_DATA_DIR;
}

std::filesystem::path resolve_complex(const std::string& name_or_path) {
    std::filesystem::path p(name_or_path);
    if (std::filesystem::is_regular_file(p)) return p;
    std::filesystem::path named = data_dir() / "complexes" / p;
    if (named.extension() != ".json") named += ".json";
    if (std::filesystem::is_regular_file(named)) return named;
    throw ComplexError("no complex file or catalog complex named '" + name_or_path + "'");
}

Filtration load_filtration(const std::filesystem::path& path) {
    const auto doc = read_json_file(path);
    auto x = load_complex(doc);
    const auto indices = filtration_indices(doc);
    if (indices.empty()) return Filtration::trivial(std::move(x));
    return Filtration::from_subcomplexes(std::move(x), indices);
}

std::vector<CatalogEntry> catalog(const std::filesystem::path& dir) {
    const auto doc = read_json_file(dir / "catalog.json");
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw CatalogError("catalog.json: missing 'entries'");
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    for (const auto& e : doc["entries"]) {
        const std::string id = e.value("id", "");
        if (id.empty() || !seen.insert(id).second) throw CatalogError("catalog entry with missing or repeated id");
        const std::string kind = e.value("kind", "");
        if (kind != "map" && kind != "topology") throw CatalogError(id + ": kind must be 'map' or 'topology'");
        std::optional<PolyMap> map;
        if (kind == "map") {
            if (!e.contains("map")) throw CatalogError(id + ": map entry without a map");
            map = parse_map(e["map"].get<std::string>());
        }
        const std::string model = e.value("model", "");
        std::filesystem::path path = dir / "complexes" / (model + ".json");
        CatalogEntry entry{id, kind, map, model, load_filtration(path), e.value("label", ""), std::nullopt,
                           e.value("control", false), e.value("notes", "")};
        if (e.contains("expected") && e["expected"].contains("proper")) {
            entry.expected_proper = e["expected"]["proper"].get<bool>();
        }
        if (!entry.label.empty() && !entry.model.base().has_subcomplex(entry.label)) {
            throw CatalogError(id + ": label '" + entry.label + "' is not a subcomplex of " + model);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
    for (const auto& e : entries) {
        if (e.id == id) return e;
    }
    throw CatalogError("no catalog entry '" + id + "'");
}

bool even_strata_check(const Filtration& f) {
    for (int i = 0; i <= f.m(); ++i) {
        if (f.stratum_dim(i) && i % 2 != 0) return false;
    }
    return true;
}

bool singular_locus_contained(const CatalogEntry& entry, const PMReport& report) {
    const auto& x = entry.model.base();
    const Subcomplex* label = entry.label.empty() ? nullptr : &x.subcomplex(entry.label);
    for (const auto& s : report.singular) {
        if (!label || !label->contains(s.simplex)) return false;
    }
    for (int v : entry.model.singular_vertices()) {
        if (!label || !label->contains({v})) return false;
    }
    return true;
}

EquivalenceReport verify_equivalence(const CatalogEntry& entry, const JelonekOptions& opts) {
    const auto& x = entry.model.base();
    auto pm = validate_pseudomanifold(x);
    if (!pm.is_pseudomanifold()) throw ModelRejected(entry.id + ": model is not a pseudomanifold", std::move(pm));

    EquivalenceReport rep;
    rep.id = entry.id;
    rep.kind = entry.kind;
    rep.control = entry.control;
    rep.pseudomanifold = true;
    rep.even_strata = even_strata_check(entry.model);
    rep.locus_contained = singular_locus_contained(entry, pm);
    rep.betti = betti(x);
    rep.b2 = rep.betti.size() > 2 ? rep.betti[2] : 0;

    const auto sp = standard_perversities(entry.model.m());
    const std::pair<const char*, const Perversity*> named[] = {
        {"0", &sp.zero}, {"m", &sp.lower_middle}, {"n", &sp.upper_middle}, {"t", &sp.top}};
    bool face = true;
    for (const auto& [name, p] : named) {
        const auto ranks = ih_betti(entry.model, *p);
        const long r = ranks.size() > 2 ? ranks[2] : 0;
        rep.ih2.push_back({name, p->to_string(), r});
        if ((r == 0) != (rep.b2 == 0)) {
            face = false;
            rep.diagnostics.push_back(std::string("IH_2 for perversity ") + name + " disagrees with H_2");
        }
    }

    if (entry.map) {
        rep.verdict = is_proper(*entry.map, opts);
        if (*rep.verdict == Properness::unknown) {
            rep.excluded = true;
            rep.consistent = face;
            rep.diagnostics.push_back("properness unknown; only the topological face is judged");
        } else {
            const bool proper = *rep.verdict == Properness::proper;
            rep.consistent = face && (proper == (rep.b2 == 0));
            if (proper != (rep.b2 == 0)) rep.diagnostics.push_back("properness verdict disagrees with H_2");
            if (entry.expected_proper && *entry.expected_proper != proper) {
                rep.diagnostics.push_back("properness verdict differs from the catalog expectation");
            }
        }
    } else {
        rep.consistent = face;
    }
    if (!rep.even_strata) rep.diagnostics.push_back("stratum of odd dimension");
    if (!rep.locus_contained) rep.diagnostics.push_back("singular simplices outside the labeled subcomplex");
    rep.as_expected = rep.consistent != rep.control;
    return rep;
}

ArcCycle allowable_arc_cycle(const SimplicialComplex& x, const std::vector<int>& singular) {
    ArcCycle out;
    if (x.dim() < 2) {
        out.diagnostic = "complex has no triangles";
        return out;
    }
    std::vector<char> in_sing(static_cast<std::size_t>(x.vertex_count()), 0);
    for (int v : singular) in_sing.at(static_cast<std::size_t>(v)) = 1;
    std::vector<std::size_t> allowed;
    const auto& tris = x.simplices(2);
    for (std::size_t k = 0; k < tris.size(); ++k) {
        int n = 0;
        for (int v : tris[k]) n += in_sing[static_cast<std::size_t>(v)];
        if (n <= 1) allowed.push_back(k);
    }
    if (allowed.empty()) {
        out.diagnostic = "no triangle meets the singular set in at most one vertex";
        return out;
    }
    std::vector<SparseVec> cycles;
    for (auto& v : kernel_basis(boundary_matrix(x, 2).select_columns(allowed))) {
        for (auto& [k, c] : v) k = allowed[k];
        cycles.push_back(std::move(v));
    }
    if (cycles.empty()) {
        out.diagnostic = "no 2-cycle is supported on allowable triangles";
        return out;
    }
    Reducer image;
    if (x.dim() >= 3) {
        for (const auto& c : boundary_matrix(x, 3).columns) image.add(c);
    }
    for (auto& z : rref_basis(cycles)) {
        if (image.add(clear_denominators(z))) {
            out.cycle = ChainVector{2, std::move(z)};
            out.diagnostic = "allowable cycle found";
            return out;
        }
    }
    out.diagnostic = "every allowable 2-cycle bounds";
    return out;
}

ArcCycle allowable_arc_cycle(const CatalogEntry& entry) {
    if (entry.expected_proper.value_or(false)) return {std::nullopt, "entry is proper"};
    return allowable_arc_cycle(entry.model.base(), entry.model.singular_vertices());
}

}  // namespace asymih
