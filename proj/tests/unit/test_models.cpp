#include "asymih/complex_io.hpp"
#include "asymih/models.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace asymih;

namespace {

const std::vector<CatalogEntry>& entries() {
    static const auto all = catalog();
    return all;
}

// Writes a catalog directory with one entry and a copy of the named model.
std::filesystem::path scratch_catalog(const nlohmann::json& entry, const std::string& model) {
    const auto dir = std::filesystem::temp_directory_path() / ("asymih_catalog_" + entry.value("id", std::string("x")));
    std::filesystem::create_directories(dir / "complexes");
    std::filesystem::copy_file(resolve_complex(model), dir / "complexes" / (model + ".json"),
                               std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "catalog.json") << nlohmann::json{{"version", 1}, {"entries", {entry}}}.dump();
    return dir;
}

}  // namespace

TEST_CASE("catalog loads with unique ids") {
    REQUIRE(entries().size() >= 8);
    CHECK(find_entry(entries(), "identity").kind == "map");
    CHECK(find_entry(entries(), "torus").kind == "topology");
    CHECK_THROWS_AS(find_entry(entries(), "nope"), CatalogError);
    bool has_control = false;
    for (const auto& e : entries()) has_control = has_control || e.control;
    CHECK(has_control);
}

TEST_CASE("catalog errors") {
    const auto bad_label = scratch_catalog(
        {{"id", "bad-label"}, {"kind", "topology"}, {"model", "torus"}, {"label", "missing"}}, "torus");
    CHECK_THROWS_AS(catalog(bad_label), CatalogError);
    const auto bad_kind = scratch_catalog({{"id", "bad-kind"}, {"kind", "other"}, {"model", "torus"}}, "torus");
    CHECK_THROWS_AS(catalog(bad_kind), CatalogError);
    const auto no_map = scratch_catalog({{"id", "no-map"}, {"kind", "map"}, {"model", "torus"}}, "torus");
    CHECK_THROWS_AS(catalog(no_map), CatalogError);
}

TEST_CASE("model homology") {
    CHECK(betti(find_entry(entries(), "identity").model.base()) == std::vector<long>{1, 0, 0, 0, 0});
    const auto& blowup = find_entry(entries(), "blowup");
    CHECK(betti(blowup.model.base())[2] >= 1);
    const auto pm = validate_pseudomanifold(blowup.model.base());
    CHECK(pm.is_pseudomanifold());
    CHECK_FALSE(pm.singular.empty());
    CHECK(singular_locus_contained(blowup, pm));
}

TEST_CASE("equivalence on map-paired entries") {
    const auto id = verify_equivalence(find_entry(entries(), "identity"));
    CHECK(id.verdict == Properness::proper);
    CHECK(id.b2 == 0);
    for (const auto& r : id.ih2) CHECK(r.rank == 0);
    CHECK(id.consistent);

    const auto blow = verify_equivalence(find_entry(entries(), "blowup"));
    CHECK(blow.verdict == Properness::non_proper);
    CHECK(blow.b2 != 0);
    for (const auto& r : blow.ih2) CHECK(r.rank != 0);
    CHECK(blow.consistent);
    CHECK(blow.as_expected);

    const auto control = verify_equivalence(find_entry(entries(), "control-identity-pinched"));
    CHECK_FALSE(control.consistent);
    CHECK(control.as_expected);
    CHECK_FALSE(control.diagnostics.empty());
}

TEST_CASE("equivalence on topology entries") {
    for (const auto* id : {"torus", "sphere", "pinched-torus"}) {
        const auto rep = verify_equivalence(find_entry(entries(), id));
        CHECK_FALSE(rep.verdict.has_value());
        CHECK(rep.consistent);
    }
}

TEST_CASE("even strata") {
    CHECK(even_strata_check(find_entry(entries(), "blowup").model));
    CHECK(even_strata_check(load_filtration(resolve_complex("disk_x_disk"))));
    CHECK_FALSE(even_strata_check(load_filtration(resolve_complex("suspension_torus"))));
    for (const auto& e : entries()) CHECK(even_strata_check(e.model));
}

TEST_CASE("models that are not pseudomanifolds are rejected") {
    const auto dir = scratch_catalog({{"id", "pages"}, {"kind", "topology"}, {"model", "three_pages"}}, "three_pages");
    const auto c = catalog(dir);
    CHECK_THROWS_AS(verify_equivalence(c.front()), ModelRejected);
    try {
        verify_equivalence(c.front());
    } catch (const ModelRejected& e) {
        CHECK_FALSE(e.report().is_pseudomanifold());
    }
}

TEST_CASE("allowable arc cycles") {
    const auto& blowup = find_entry(entries(), "blowup");
    const auto found = allowable_arc_cycle(blowup);
    REQUIRE(found.cycle.has_value());
    const auto& x = blowup.model.base();
    CHECK(boundary(x, *found.cycle).is_zero());
    const auto sing = blowup.model.singular_vertices();
    bool touches = false;
    for (const auto& s : found.cycle->support(x)) {
        int n = 0;
        for (int v : s) n += std::count(sing.begin(), sing.end(), v);
        CHECK(n <= 1);
        touches = touches || n == 1;
    }
    CHECK(touches);

    CHECK_FALSE(allowable_arc_cycle(find_entry(entries(), "identity")).cycle.has_value());

    const auto thick = load_complex_file(resolve_complex("disk_x_pinched_thick"));
    const auto mutated = allowable_arc_cycle(thick, thick.subcomplex("singular").vertices());
    CHECK_FALSE(mutated.cycle.has_value());
    CHECK_FALSE(mutated.diagnostic.empty());
}
