// Acceptance suite. Prints one PASS/FAIL line per criterion and, with
// --report FILE, writes the structured results (no timings) as JSON.
#include "asymih/asymptotic.hpp"
#include "asymih/corpus.hpp"
#include "asymih/lojasiewicz.hpp"
#include "asymih/models.hpp"
#include "asymih/parse.hpp"
#include "asymih/report.hpp"

#include "../common/dense_oracle.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

using namespace asymih;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string summary;
    Json detail = Json::object();
};

void require(Outcome& o, bool ok, const std::string& what) {
    if (ok) return;
    o.pass = false;
    o.detail["failures"].push_back(what);
}

std::string ranks(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

Filtration model(const std::string& name) { return load_filtration(resolve_complex(name)); }

std::vector<Perversity> standard_list(int m) {
    const auto sp = standard_perversities(m);
    return {sp.zero, sp.lower_middle, sp.upper_middle, sp.top};
}

// Every perversity of length m - 1: p_2 = 0, steps of 0 or 1.
std::vector<Perversity> all_perversities(int m) {
    std::vector<Perversity> out;
    const int steps = m - 2;
    for (int mask = 0; mask < (1 << steps); ++mask) {
        std::vector<int> v{0};
        for (int k = 0; k < steps; ++k) v.push_back(v.back() + ((mask >> k) & 1));
        out.emplace_back(m, v);
    }
    return out;
}

// Maps with their hand-derived asymptotic sets (empty for proper maps).
struct MapCase {
    std::string name;
    PolyMap map;
    std::vector<std::string> expected;  // certified component equations in y1, y2
};

std::vector<MapCase> map_corpus() {
    std::vector<MapCase> out;
    auto add = [&](const std::string& name, const std::string& text, std::vector<std::string> j) {
        out.push_back({name, parse_map(text), std::move(j)});
    };
    add("identity", "(x, y)", {});
    add("fold", "(x^2, y)", {});
    add("shear-x", "(x, y + x^3)", {});
    add("shear-y", "(x + y^2, y)", {});
    add("linear", "(2*x + y, x + y)", {});
    // Res_x(x - y1, x*y - y2) = y*y1 - y2 has leading coefficient y1 in y.
    add("blowup", "(x, x*y)", {"y1"});
    add("blowup-squared", "(x, x^2*y)", {"y1"});
    // Fiber over (a, b): a*y^2 + y - b = 0 loses its leading coefficient at a = 0.
    add("quadratic-fiber", "(x, x*y^2 + y)", {"y1"});
    add("fold-blowup", "(x^2, x*y)", {"y1"});
    add("blowup-swapped", "(x*y, y)", {"y2"});
    const auto comps = automorphism_corpus(kSeed, 12);
    for (std::size_t k = 0; k < comps.size(); ++k) out.push_back({"composition-" + std::to_string(k), comps[k], {}});
    return out;
}

JelonekOptions options() { return {3, 4, kSeed}; }

// Criterion 1 and 2 share the computed Jelonek sets.
struct JelonekRun {
    std::vector<MapCase> cases;
    std::vector<AlgebraicSet> sets;
};

JelonekRun run_jelonek() {
    JelonekRun r{map_corpus(), {}};
    for (const auto& c : r.cases) r.sets.push_back(jelonek_set(c.map, options()));
    return r;
}

Outcome criterion_jelonek(const JelonekRun& run) {
    Outcome o;
    int compositions = 0;
    for (std::size_t k = 0; k < run.cases.size(); ++k) {
        const auto& c = run.cases[k];
        const auto& set = run.sets[k];
        compositions += c.name.rfind("composition-", 0) == 0;
        const Properness verdict = properness_of(set);
        const Properness want = c.expected.empty() ? Properness::proper : Properness::non_proper;
        require(o, verdict == want, c.name + ": verdict " + to_string(verdict));
        std::vector<std::string> certified;
        for (const auto& comp : set.components) {
            require(o, comp.status == ComponentStatus::certified,
                    c.name + ": component " + comp.equation.to_string() + " is " + to_string(comp.status));
            if (comp.status == ComponentStatus::certified) certified.push_back(comp.equation.to_string());
        }
        require(o, certified == c.expected, c.name + ": certified components differ from hand elimination");
        o.detail["maps"].push_back(Json{{"name", c.name}, {"map", c.map.to_string()}, {"verdict", to_string(verdict)},
                                        {"jelonek_set", to_json(set)}});
    }
    require(o, compositions >= 10, "fewer than 10 seeded compositions");
    o.summary = std::to_string(run.cases.size()) + " maps (" + std::to_string(compositions) + " compositions)";
    return o;
}

Outcome criterion_witnesses(const JelonekRun& run) {
    Outcome o;
    int witnesses = 0;
    for (std::size_t k = 0; k < run.cases.size(); ++k) {
        const auto& f = run.cases[k].map;
        for (const auto& comp : run.sets[k].components) {
            if (comp.status != ComponentStatus::certified) continue;
            require(o, !comp.witnesses.empty(), run.cases[k].name + ": certified component without witness");
            for (const auto& w : comp.witnesses) {
                ++witnesses;
                const auto lim = arc_limit(f, w.arc);
                bool same = lim.finite() && lim.values.size() == w.target.size();
                for (std::size_t j = 0; same && j < w.target.size(); ++j) same = *lim.values[j] == w.target[j];
                require(o, w.arc.escapes(), run.cases[k].name + ": witness arc does not escape");
                require(o, same, run.cases[k].name + ": arc limit differs from the witness target");
                require(o, comp.equation.evaluate(w.target).is_zero(), run.cases[k].name + ": target off the component");
                require(o, escape_cone_check(f, w.arc) == ConeCheck::holds,
                        run.cases[k].name + ": escape cone check fails for " + w.arc.to_string());
            }
        }
    }
    require(o, witnesses > 0, "no witnesses to check");
    o.summary = std::to_string(witnesses) + " witnesses re-verified";
    o.detail["witnesses"] = witnesses;
    return o;
}

Outcome criterion_manifolds() {
    Outcome o;
    int checks = 0;
    for (const auto* name : {"sphere2", "torus", "sphere3", "s1xs2", "ball4", "ball4_sd"}) {
        const auto f = model(name);
        const auto h = betti(f.base());
        Json entry{{"model", name}, {"betti", to_json(h)}};
        for (const auto& p : standard_list(f.m())) {
            const auto ih = ih_betti(f, p);
            ++checks;
            require(o, ih == h, std::string(name) + ": IH^" + p.to_string() + " = " + ranks(ih) + " != " + ranks(h));
            entry["ih"].push_back(Json{{"perversity", p.to_string()}, {"ranks", to_json(ih)}});
        }
        o.detail["models"].push_back(entry);
    }
    o.summary = std::to_string(checks) + " (model, perversity) pairs";
    return o;
}

Outcome criterion_pinched() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto f = model("pinched_torus");
    const auto p = standard_perversities(2).zero;
    const auto h = betti(f.base());
    const auto ih = ih_betti(f, p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(o, h == std::vector<long>{1, 1, 1}, "H = " + ranks(h));
    require(o, ih == std::vector<long>{1, 0, 1}, "IH = " + ranks(ih));
    require(o, oracle::betti(f.base()) == h, "dense oracle disagrees on H");
    require(o, oracle::ih_betti(f, p) == ih, "dense oracle disagrees on IH");
    require(o, secs < 5.0, "took longer than 5 s");
    o.summary = "H=" + ranks(h) + " IH=" + ranks(ih);
    o.detail = Json{{"betti", to_json(h)}, {"ih", to_json(ih)}};
    return o;
}

Outcome criterion_duality() {
    Outcome o;
    int pairs = 0;
    for (const auto* name : {"sphere2", "torus", "sphere3", "s1xs2", "pinched_torus", "pinched_torus_sd",
                             "suspension_torus", "suspension_torus_sd"}) {
        const auto f = model(name);
        const auto all = all_perversities(f.m());
        for (const auto& p : all) {
            for (const auto& q : all) {
                if (!complementary(p, q)) continue;
                const auto rep = duality_check(f, p, q);
                ++pairs;
                require(o, rep.applicable, std::string(name) + ": duality not applicable (" + rep.reason + ")");
                require(o, rep.passed, std::string(name) + ": duality fails for " + p.to_string() + "/" + q.to_string());
                o.detail["checks"].push_back(Json{{"model", name}, {"report", to_json(rep)}});
            }
        }
    }
    o.summary = std::to_string(pairs) + " complementary pairs";
    return o;
}

Outcome criterion_independence() {
    Outcome o;
    const std::pair<const char*, const char*> pairs[] = {{"torus", "torus_alt"},
                                                         {"pinched_torus_sd", "pinched_torus_sd_alt"},
                                                         {"suspension_torus_sd", "suspension_torus_sd_alt"}};
    int checks = 0;
    for (const auto& [a, b] : pairs) {
        const auto fa = model(a);
        const auto fb = model(b);
        require(o, fa.member(0) != fb.member(0), std::string(a) + ": the two filtrations coincide");
        for (const auto& p : all_perversities(fa.m())) {
            ++checks;
            const bool same = independence_check(fa, fb, p);
            require(o, same, std::string(a) + " vs " + b + ": ranks differ for " + p.to_string());
            o.detail["checks"].push_back(Json{{"a", a}, {"b", b}, {"perversity", p.to_string()}, {"equal", same}});
        }
    }
    o.summary = std::to_string(checks) + " checks on 3 complexes";
    return o;
}

Outcome criterion_theorem() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto entries = catalog();
    int controls = 0;
    for (const auto& e : entries) {
        const auto rep = verify_equivalence(e, options());
        controls += e.control;
        require(o, rep.as_expected, e.id + ": consistent=" + (rep.consistent ? "true" : "false"));
        require(o, !rep.excluded, e.id + ": verdict unknown, entry excluded");
        if (e.control) require(o, !rep.consistent, e.id + ": negative control came out consistent");
        o.detail["entries"].push_back(to_json(rep));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(o, controls > 0, "catalog has no negative control");
    require(o, secs < 300.0, "took longer than 5 min");
    o.summary = std::to_string(entries.size()) + " entries, " + std::to_string(controls) + " negative control(s)";
    return o;
}

Outcome criterion_strata() {
    Outcome o;
    const auto entries = catalog();
    for (const auto& e : entries) {
        const auto pm = validate_pseudomanifold(e.model.base());
        const bool even = even_strata_check(e.model);
        const bool contained = singular_locus_contained(e, pm);
        require(o, even, e.id + ": stratum of odd dimension");
        require(o, contained, e.id + ": singular locus outside the label");
        o.detail["entries"].push_back(Json{{"id", e.id}, {"even_strata", even}, {"locus_contained", contained}});
    }
    o.summary = std::to_string(entries.size()) + " models";
    return o;
}

Outcome criterion_lojasiewicz(const JelonekRun& run) {
    Outcome o;
    Rng rng(kSeed);
    int polys = 0;
    long points = 0;
    for (const auto& c : run.cases) {
        std::vector<Poly> pool = c.map.components();
        pool.push_back(jacobian_det(c.map));
        for (const auto& f : pool) {
            ++polys;
            const auto bound = lojasiewicz_bound(f);
            for (int k = 0; k < 1000; ++k) {
                ++points;
                const std::vector<Rational> x{rng.rational(100, 9), rng.rational(100, 9)};
                if (!lojasiewicz_holds(f, bound, x)) {
                    require(o, false, c.name + ": bound fails for " + f.to_string());
                    break;
                }
            }
        }
    }
    o.summary = std::to_string(polys) + " polynomials x 1000 points";
    o.detail = Json{{"polynomials", polys}, {"points", points}};
    return o;
}

struct Criterion {
    int number;
    std::string title;
    std::function<Outcome(const JelonekRun&)> run;
};

std::vector<Criterion> criteria() {
    return {
        {1, "Jelonek oracle suite", criterion_jelonek},
        {2, "witness soundness", criterion_witnesses},
        {3, "IH equals H on manifolds", [](const JelonekRun&) { return criterion_manifolds(); }},
        {4, "pinched torus", [](const JelonekRun&) { return criterion_pinched(); }},
        {5, "Poincare duality", [](const JelonekRun&) { return criterion_duality(); }},
        {6, "stratification independence", [](const JelonekRun&) { return criterion_independence(); }},
        {7, "theorem suite", [](const JelonekRun&) { return criterion_theorem(); }},
        {8, "even strata and locus containment", [](const JelonekRun&) { return criterion_strata(); }},
        {9, "Lojasiewicz bound", criterion_lojasiewicz},
    };
}

// Runs criteria 1 to 9; returns the report and prints lines when `out` is set.
Json run_suite(std::vector<Outcome>& outcomes, std::ostream* out) {
    Json report{{"seed", kSeed}, {"criteria", Json::array()}};
    const auto t0 = std::chrono::steady_clock::now();
    const JelonekRun run = run_jelonek();
    const double jelonek_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.run(run);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.number == 1) {
            secs += jelonek_secs;
            require(o, secs < 60.0, "took longer than 60 s");
        }
        if (out) {
            *out << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << "): " << o.summary
                 << " [" << std::fixed << std::setprecision(2) << secs << " s]\n";
            if (!o.pass) {
                for (const auto& f : o.detail["failures"]) *out << "    " << f.get<std::string>() << "\n";
            }
            out->flush();
        }
        report["criteria"].push_back(Json{{"number", c.number}, {"title", c.title}, {"pass", o.pass}, {"detail", o.detail}});
        outcomes.push_back(std::move(o));
    }
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    std::string report_path;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--report" && k + 1 < argc) {
            report_path = argv[++k];
        } else {
            std::cerr << "usage: asymih_acceptance [--report FILE]\n";
            return 2;
        }
    }

    std::vector<Outcome> first;
    const Json report = run_suite(first, &std::cout);
    const std::string text = report.dump(1);

    std::vector<Outcome> second;
    const std::string again = run_suite(second, nullptr).dump(1);
    const bool identical = text == again;
    std::cout << (identical ? "PASS" : "FAIL") << " criterion 10 (determinism): two runs with seed " << kSeed
              << (identical ? " produced byte-identical reports" : " produced different reports") << " ("
              << text.size() << " bytes)\n";

    if (!report_path.empty()) {
        std::ofstream(report_path) << text << "\n";
    }

    bool all = identical;
    for (const auto& o : first) all = all && o.pass;
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? 0 : 1;
}
