#include "cli.hpp"

#include "asymih/asymptotic.hpp"
#include "asymih/complex_io.hpp"
#include "asymih/critical_values.hpp"
#include "asymih/parse.hpp"
#include "asymih/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace asymih::cli {
namespace {

struct Config {
    std::uint64_t seed = 0;
    int max_exp = 4;
    int samples = 3;
    std::string format = "text";
    bool strict = false;

    JelonekOptions jelonek() const { return {samples, max_exp, seed}; }
};

struct Outcome {
    Json result;
    std::string text;
    int code = ok;
};

std::string join(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string point_text(const Point& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + p[k].to_string();
    return s + ")";
}

std::string set_text(const AlgebraicSet& s) {
    std::ostringstream os;
    if (s.components.empty()) os << "  (empty)\n";
    for (const auto& c : s.components) {
        os << "  " << c.equation.to_string() << " = 0  [" << to_string(c.status) << "]\n";
        for (const auto& w : c.witnesses) os << "    witness " << w.arc.to_string() << " -> " << point_text(w.target) << "\n";
        for (const auto& r : c.samples) os << "    sample " << point_text(r.target) << ": " << r.outcome << "\n";
    }
    for (const auto& a : s.auxiliary) os << "  auxiliary " << a.to_string() << " = 0\n";
    return os.str();
}

// A map argument naming an existing file is read from that file.
PolyMap load_map(const std::string& arg) {
    if (!std::filesystem::is_regular_file(arg)) return parse_map(arg);
    std::ifstream in(arg);
    std::stringstream text;
    text << in.rdbuf();
    return parse_map(text.str());
}

int verdict_code(Properness p, const Config& cfg) {
    return (p == Properness::unknown && cfg.strict) ? unknown_verdict : ok;
}

Outcome cmd_jelonek(const std::string& text, const Config& cfg) {
    const PolyMap f = load_map(text);
    const AlgebraicSet cand = jelonek_candidates(f);
    const AlgebraicSet set = jelonek_set(f, cfg.jelonek());
    const Properness verdict = properness_of(set);
    Outcome o;
    o.result = Json{{"map", f.to_string()},
                    {"candidates", to_json(cand)},
                    {"jelonek_set", to_json(set)},
                    {"verdict", to_string(verdict)}};
    o.text = "map " + f.to_string() + "\ncandidates:\n" + set_text(cand) + "jelonek set:\n" + set_text(set) +
             "verdict " + to_string(verdict) + "\n";
    o.code = verdict_code(verdict, cfg);
    return o;
}

Outcome cmd_proper(const std::string& text, const Config& cfg) {
    const PolyMap f = load_map(text);
    const AlgebraicSet set = jelonek_set(f, cfg.jelonek());
    const Properness verdict = properness_of(set);
    Outcome o;
    o.result = Json{{"map", f.to_string()}, {"verdict", to_string(verdict)}, {"jelonek_set", to_json(set)}};
    o.text = to_string(verdict) + "\n";
    o.code = verdict_code(verdict, cfg);
    return o;
}

Outcome cmd_initial_forms(const std::string& text) {
    const PolyMap f = load_map(text);
    Outcome o;
    Json forms = Json::array();
    std::ostringstream os;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Poly& c = f[k];
        const std::string form = c.is_zero() ? "0" : c.initial_form().to_string();
        const int deg = c.degree().value_or(-1);
        forms.push_back(Json{{"component", c.to_string()}, {"initial_form", form},
                             {"degree", c.is_zero() ? Json(nullptr) : Json(deg)}});
        os << "F" << k + 1 << "^ = " << form << "\n";
    }
    const Poly jac = jacobian_det(f);
    o.result = Json{{"map", f.to_string()}, {"initial_forms", forms}, {"jacobian", jac.to_string()}};
    os << "jacobian " << jac.to_string() << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_directions(const std::string& text) {
    const PolyMap f = load_map(text);
    const DirectionSet d = asymptotic_directions(f);
    Outcome o;
    o.result = Json{{"map", f.to_string()}, {"directions", to_json(d)}};
    std::ostringstream os;
    if (d.all_directions) os << "all directions\n";
    for (const auto& dir : d.directions) {
        os << "[" << dir.point[0].to_string() << " : " << dir.point[1].to_string() << "]";
        if (dir.multiplicity > 1) os << " multiplicity " << dir.multiplicity;
        os << "\n";
    }
    if (d.nonrational) os << d.nonrational << " direction(s) outside Q(i)\n";
    if (d.degenerate) os << "degenerate: a component is constant\n";
    if (d.directions.empty() && !d.nonrational && !d.all_directions) os << "(none)\n";
    o.text = os.str();
    return o;
}

Outcome cmd_arc_limit(const std::string& map_text, const std::string& arc_text) {
    const PolyMap f = load_map(map_text);
    const MonomialArc arc = parse_arc(arc_text);
    const ArcLimit lim = arc_limit(f, arc);
    const ConeCheck cone = escape_cone_check(f, arc);
    Outcome o;
    o.result = Json{{"map", f.to_string()},
                    {"arc", to_json(arc)},
                    {"escapes", arc.escapes()},
                    {"limit", to_json(lim)},
                    {"cone_check", to_string(cone)}};
    o.text = "limit " + lim.to_string() + "\ncone check " + to_string(cone) + "\n";
    return o;
}

Outcome cmd_homology(const std::string& name, bool generators) {
    const auto path = resolve_complex(name);
    const SimplicialComplex x = load_complex_file(path);
    const auto b = betti(x);
    const auto pm = validate_pseudomanifold(x);
    Outcome o;
    o.result = Json{{"complex", name},
                    {"dim", x.dim()},
                    {"counts", Json::array()},
                    {"betti", to_json(b)},
                    {"euler_characteristic", x.euler_characteristic()},
                    {"orientable", is_orientable(x)},
                    {"pseudomanifold", to_json(pm)}};
    for (int d = 0; d <= x.dim(); ++d) o.result["counts"].push_back(x.count(d));
    std::ostringstream os;
    os << "betti " << join(b) << "\neuler " << x.euler_characteristic() << "\n";
    os << "pseudomanifold pure=" << pm.is_pure << " sing_codim_ok=" << pm.sing_codim_ok
       << " singular=" << pm.singular.size() << "\n";
    if (generators) {
        Json gens = Json::array();
        for (int i = 0; i <= x.dim(); ++i) {
            for (const auto& g : homology_generators(x, i)) {
                gens.push_back(to_json(g, x));
                os << "H_" << i << " generator " << g.to_string(x) << "\n";
            }
        }
        o.result["generators"] = gens;
    }
    o.text = os.str();
    return o;
}

std::vector<std::pair<std::string, Perversity>> perversity_list(const std::vector<std::string>& names, int m) {
    std::vector<std::pair<std::string, Perversity>> out;
    std::vector<std::string> use = names.empty() ? std::vector<std::string>{"0", "m", "n", "t"} : names;
    for (const auto& n : use) out.emplace_back(n, parse_perversity(n, m));
    return out;
}

Outcome cmd_ih(const std::string& name, const std::vector<std::string>& pnames, bool generators) {
    const Filtration f = load_filtration(resolve_complex(name));
    Outcome o;
    Json per = Json::array();
    std::ostringstream os;
    for (const auto& [label, p] : perversity_list(pnames, f.m())) {
        const auto ranks = ih_betti(f, p);
        Json entry{{"perversity", label}, {"values", p.to_string()}, {"ranks", to_json(ranks)}};
        os << "IH^" << p.to_string() << " " << join(ranks) << "\n";
        if (generators) {
            Json gens = Json::array();
            for (int i = 0; i <= f.m(); ++i) {
                for (const auto& g : ih_generators(f, p, i)) {
                    gens.push_back(to_json(g, f.base()));
                    os << "  IH_" << i << " generator " << g.to_string(f.base()) << "\n";
                }
            }
            entry["generators"] = gens;
        }
        per.push_back(entry);
    }
    o.result = Json{{"complex", name}, {"m", f.m()}, {"subdivided", f.subdivided()}, {"perversities", per}};
    o.text = os.str();
    return o;
}

Outcome cmd_duality(const std::string& name, const std::string& p_text, const std::string& q_text) {
    const Filtration f = load_filtration(resolve_complex(name));
    const Perversity p = parse_perversity(p_text, f.m());
    const Perversity q = parse_perversity(q_text, f.m());
    const DualityReport rep = duality_check(f, p, q);
    Outcome o;
    o.result = Json{{"complex", name}, {"p", p.to_string()}, {"q", q.to_string()}, {"duality", to_json(rep)}};
    if (!rep.applicable) {
        o.text = "not applicable: " + rep.reason + "\n";
    } else {
        o.text = "IH^p " + join(rep.p_ranks) + "\nIH^q " + join(rep.q_ranks) + "\n" +
                 (rep.passed ? "duality holds\n" : "duality FAILS\n");
        if (!rep.passed) o.code = inconsistent;
    }
    return o;
}

Outcome cmd_verify(const std::string& id, bool all, const Config& cfg) {
    const auto entries = catalog();
    std::vector<const CatalogEntry*> chosen;
    if (all) {
        for (const auto& e : entries) chosen.push_back(&e);
    } else {
        chosen.push_back(&find_entry(entries, id));
    }
    Outcome o;
    Json reports = Json::array();
    std::ostringstream os;
    bool all_expected = true;
    bool any_excluded = false;
    for (const auto* e : chosen) {
        const auto rep = verify_equivalence(*e, cfg.jelonek());
        reports.push_back(to_json(rep));
        all_expected = all_expected && rep.as_expected;
        any_excluded = any_excluded || rep.excluded;
        os << rep.id << ": " << (rep.verdict ? to_string(*rep.verdict) : std::string("-")) << " b2=" << rep.b2
           << " ih2=";
        for (const auto& p : rep.ih2) os << p.name << ":" << p.rank << " ";
        os << "consistent=" << (rep.consistent ? "true" : "false");
        if (rep.control) os << " (negative control)";
        if (!rep.as_expected) os << " UNEXPECTED";
        os << "\n";
    }
    os << (all_expected ? "all entries as expected\n" : "some entries are not as expected\n");
    o.result = Json{{"entries", reports}, {"all_as_expected", all_expected}};
    o.text = os.str();
    if (!all_expected) o.code = inconsistent;
    else if (any_excluded && cfg.strict) o.code = unknown_verdict;
    return o;
}

Outcome cmd_catalog_list() {
    const auto entries = catalog();
    Outcome o;
    Json list = Json::array();
    std::ostringstream os;
    for (const auto& e : entries) {
        Json j{{"id", e.id}, {"kind", e.kind}};
        j["map"] = e.map ? Json(e.map->to_string()) : Json(nullptr);
        j["model"] = e.model_name;
        j["expected_proper"] = e.expected_proper ? Json(*e.expected_proper) : Json(nullptr);
        j["control"] = e.control;
        j["notes"] = e.notes;
        list.push_back(j);
        os << e.id << "  " << e.kind << "  " << (e.map ? e.map->to_string() : std::string("-")) << "  " << e.model_name
           << (e.control ? "  (control)" : "") << "\n";
    }
    o.result = Json{{"entries", list}};
    o.text = os.str();
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asymptotic sets of polynomial maps and intersection homology", "asymih"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--max-exp", cfg.max_exp, "Largest |exponent| in the arc search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--samples", cfg.samples, "Sample points per component")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format (json and structured are synonyms)")
        ->check(CLI::IsMember({"text", "json", "structured"}))
        ->capture_default_str();
    app.add_flag("--strict", cfg.strict, "Exit with status 3 on unknown verdicts");

    std::string map_text, arc_text, complex_name, entry_id, p_text, q_text;
    std::vector<std::string> perversities;
    bool all = false;
    bool generators = false;

    auto* jel = app.add_subcommand("jelonek", "Jelonek set: candidates and certification");
    jel->add_option("map", map_text, "Map literal, e.g. \"F=(x, x*y)\"")->required();
    auto* prop = app.add_subcommand("proper", "Properness verdict");
    prop->add_option("map", map_text)->required();
    auto* init = app.add_subcommand("initial-forms", "Initial forms and Jacobian");
    init->add_option("map", map_text)->required();
    auto* dirs = app.add_subcommand("directions", "Common zeros of the initial forms");
    dirs->add_option("map", map_text)->required();
    auto* arcl = app.add_subcommand("arc-limit", "Limit of F along a monomial arc");
    arcl->add_option("map", map_text)->required();
    arcl->add_option("arc", arc_text, "Arc \"(c1) t^q1, (c2) t^q2\"")->required();
    auto* hom = app.add_subcommand("homology", "Betti numbers and pseudomanifold report");
    hom->add_option("complex", complex_name, "Complex file or catalog complex name")->required();
    hom->add_flag("--generators", generators, "Include generator cycles");
    auto* ihc = app.add_subcommand("ih", "Intersection homology ranks");
    ihc->add_option("complex", complex_name)->required();
    ihc->add_option("--perversity", perversities, "t, m, n, 0 or comma separated values (repeatable)");
    ihc->add_flag("--generators", generators, "Include generator cycles");
    auto* dual = app.add_subcommand("duality", "Poincare duality check");
    dual->add_option("complex", complex_name)->required();
    dual->add_option("--p", p_text)->required();
    dual->add_option("--q", q_text)->required();
    auto* ver = app.add_subcommand("verify-theorem", "Check the equivalence on catalog entries");
    auto* ver_id = ver->add_option("entry", entry_id, "Catalog entry id");
    auto* ver_all = ver->add_flag("--all", all, "Every catalog entry");
    ver_id->excludes(ver_all);
    auto* cat = app.add_subcommand("catalog", "Catalog operations");
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    cat->require_subcommand(1);

    std::vector<std::string> storage{"asymih"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    std::string command;
    Outcome o;
    try {
        if (jel->parsed()) {
            command = "jelonek";
            o = cmd_jelonek(map_text, cfg);
        } else if (prop->parsed()) {
            command = "proper";
            o = cmd_proper(map_text, cfg);
        } else if (init->parsed()) {
            command = "initial-forms";
            o = cmd_initial_forms(map_text);
        } else if (dirs->parsed()) {
            command = "directions";
            o = cmd_directions(map_text);
        } else if (arcl->parsed()) {
            command = "arc-limit";
            o = cmd_arc_limit(map_text, arc_text);
        } else if (hom->parsed()) {
            command = "homology";
            o = cmd_homology(complex_name, generators);
        } else if (ihc->parsed()) {
            command = "ih";
            o = cmd_ih(complex_name, perversities, generators);
        } else if (dual->parsed()) {
            command = "duality";
            o = cmd_duality(complex_name, p_text, q_text);
        } else if (ver->parsed()) {
            if (!all && entry_id.empty()) {
                err << "error: verify-theorem needs an entry id or --all\n";
                return input_error;
            }
            command = "verify-theorem";
            o = cmd_verify(entry_id, all, cfg);
        } else if (cat_list->parsed()) {
            command = "catalog list";
            o = cmd_catalog_list();
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ModelRejected& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    if (cfg.format != "text") {
        Json doc{{"tool", "asymih"},
                 {"version", ASYMIH_VERSION},
                 {"command", command},
                 {"config", {{"seed", cfg.seed}, {"max_exp", cfg.max_exp}, {"samples", cfg.samples}}},
                 {"result", o.result},
                 {"exit_code", o.code}};
        out << doc.dump(1) << "\n";
    } else {
        out << o.text;
    }
    return o.code;
}

}  // namespace asymih::cli
