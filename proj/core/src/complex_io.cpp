#include "asymih/complex_io.hpp"

#include <algorithm>
#include <fstream>

namespace asymih {
namespace {

std::vector<Simplex> simplex_list(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw ComplexError(what + " must be an array of simplices");
    std::vector<Simplex> out;
    for (const auto& s : j) {
        if (!s.is_array()) throw ComplexError(what + " entries must be arrays of vertex ids");
        Simplex simplex;
        for (const auto& v : s) {
            if (!v.is_number_integer()) throw ComplexError(what + " vertex ids must be integers");
            simplex.push_back(v.get<int>());
        }
        out.push_back(std::move(simplex));
    }
    return out;
}

}  // namespace

SimplicialComplex load_complex(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ComplexError("complex document must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
        throw ComplexError("missing integer field 'vertices'");
    }
    if (!doc.contains("top_simplices")) throw ComplexError("missing field 'top_simplices'");
    auto x = SimplicialComplex::from_top_simplices(doc["vertices"].get<int>(),
                                                   simplex_list(doc["top_simplices"], "top_simplices"));
    if (doc.contains("subcomplexes")) {
        const auto& subs = doc["subcomplexes"];
        if (!subs.is_object()) throw ComplexError("'subcomplexes' must be an object");
        for (const auto& [name, tops] : subs.items()) {
            x.add_subcomplex(name, simplex_list(tops, "subcomplex '" + name + "'"));
        }
    }
    if (doc.contains("boundary")) {
        if (!doc["boundary"].is_string()) throw ComplexError("'boundary' must name a subcomplex");
        x.set_boundary(doc["boundary"].get<std::string>());
    }
    for (const auto& [i, name] : filtration_indices(doc)) {
        if (!x.has_subcomplex(name)) {
            throw ComplexError("filtration index " + std::to_string(i) + " refers to unknown subcomplex '" + name + "'");
        }
    }
    return x;
}

std::map<int, std::string> filtration_indices(const nlohmann::json& doc) {
    std::map<int, std::string> out;
    if (!doc.is_object() || !doc.contains("filtration")) return out;
    const auto& f = doc["filtration"];
    if (!f.is_object() || !f.contains("indices") || !f["indices"].is_object()) {
        throw ComplexError("'filtration' must contain an 'indices' object");
    }
    for (const auto& [key, name] : f["indices"].items()) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ComplexError("filtration index '" + key + "' is not an integer");
        }
        if (!name.is_string()) throw ComplexError("filtration index " + key + " must name a subcomplex");
        out[i] = name.get<std::string>();
    }
    return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& x) {
    nlohmann::json doc;
    doc["vertices"] = x.vertex_count();
    doc["top_simplices"] = x.maximal_simplices();
    if (!x.subcomplexes().empty()) {
        nlohmann::json subs = nlohmann::json::object();
        for (const auto& [name, sub] : x.subcomplexes()) {
            subs[name] = sub.maximal_simplices();
        }
        doc["subcomplexes"] = subs;
    }
    if (x.boundary_name()) doc["boundary"] = *x.boundary_name();
    return doc;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ComplexError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ComplexError(path.string() + ": " + e.what());
    }
}

SimplicialComplex load_complex_file(const std::filesystem::path& path) { return load_complex(read_json_file(path)); }

}  // namespace asymih
