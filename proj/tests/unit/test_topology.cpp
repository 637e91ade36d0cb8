#include "asymih/complex_io.hpp"
#include "asymih/homology.hpp"
#include "asymih/linalg.hpp"
#include "asymih/models.hpp"
#include "asymih/pseudomanifold.hpp"
#include "asymih/random.hpp"

#include "../common/dense_oracle.hpp"

#include <doctest.h>

using namespace asymih;

namespace {

SimplicialComplex named(const std::string& name) { return load_complex_file(resolve_complex(name)); }

std::vector<Simplex> hollow_tetrahedron() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }

// Random complex: a few random triangles and edges on a small vertex set.
SimplicialComplex random_complex(Rng& rng) {
    const int v = static_cast<int>(rng.between(4, 8));
    std::vector<Simplex> tops;
    const long n = rng.between(3, 10);
    for (long k = 0; k < n; ++k) {
        std::set<int> s;
        const long size = rng.between(2, 4);
        while (static_cast<long>(s.size()) < size) s.insert(static_cast<int>(rng.between(0, v - 1)));
        tops.emplace_back(s.begin(), s.end());
    }
    return SimplicialComplex::from_top_simplices(v, tops);
}

}  // namespace

TEST_CASE("closure of top simplices") {
    const auto tri = SimplicialComplex::from_top_simplices(3, {{0, 1, 2}});
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(1) == 3);
    CHECK(tri.count(2) == 1);
    const auto s2 = SimplicialComplex::from_top_simplices(4, hollow_tetrahedron());
    CHECK(s2.count(2) == 4);
    CHECK(s2.euler_characteristic() == 2);
    CHECK_THROWS_AS(SimplicialComplex::from_top_simplices(3, {{0, 0, 1}}), ComplexError);
    CHECK_THROWS_AS(SimplicialComplex::from_top_simplices(3, {{0, 5}}), ComplexError);
}

TEST_CASE("JSON loading and error paths") {
    nlohmann::json doc = {{"vertices", 3}, {"top_simplices", {{0, 1, 2}}}, {"notes", "ignored"}};
    CHECK(load_complex(doc).count(2) == 1);
    CHECK(load_complex(complex_to_json(load_complex(doc))) == load_complex(doc));
    CHECK_THROWS_AS(load_complex(nlohmann::json{{"vertices", 3}}), ComplexError);
    CHECK_THROWS_AS(load_complex(nlohmann::json{{"vertices", 3}, {"top_simplices", {{0, 0, 1}}}}), ComplexError);
    nlohmann::json bad_sub = doc;
    bad_sub["subcomplexes"] = {{"a", {{0, 7}}}};
    CHECK_THROWS_AS(load_complex(bad_sub), ComplexError);
    CHECK_THROWS_AS(resolve_complex("no-such-complex"), ComplexError);
}

TEST_CASE("boundary matrices") {
    const auto tri = SimplicialComplex::from_top_simplices(3, {{0, 1, 2}});
    const auto d2 = boundary_matrix(tri, 2);
    REQUIRE(d2.columns.size() == 1);
    // Edges in order [0,1], [0,2], [1,2]: d[0,1,2] = [1,2] - [0,2] + [0,1].
    const SparseVec expected{{0, Integer(1)}, {1, Integer(-1)}, {2, Integer(1)}};
    CHECK(d2.columns[0] == expected);

    const auto circle = SimplicialComplex::from_top_simplices(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(rank(boundary_matrix(circle, 1)) == 2);
    CHECK_THROWS_AS(boundary_matrix(circle, 2), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(circle, 0), std::out_of_range);
}

TEST_CASE("d d = 0 on random complexes") {
    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
        const auto x = random_complex(rng);
        for (int i = 2; i <= x.dim(); ++i) {
            const auto outer = boundary_matrix(x, i - 1);
            for (const auto& col : boundary_matrix(x, i).columns) CHECK(multiply(outer, col).empty());
        }
    }
}

TEST_CASE("sparse rank and kernel agree with the dense oracle") {
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        const auto x = random_complex(rng);
        for (int i = 1; i <= x.dim(); ++i) {
            const auto m = boundary_matrix(x, i);
            CHECK(rank(m) == oracle::dense_rank(oracle::dense_boundary(x, i)));
            const auto ker = kernel_basis(m);
            CHECK(ker.size() + rank(m) == m.cols);
            for (const auto& v : ker) CHECK(multiply(m, v).empty());
        }
        CHECK(betti(x) == oracle::betti(x));
    }
}

TEST_CASE("Reducer tracks kernel relations and spans") {
    Reducer r(true);
    CHECK(r.add({{0, Integer(2)}, {1, Integer(4)}}));
    CHECK(r.add({{1, Integer(3)}}));
    CHECK_FALSE(r.add({{0, Integer(1)}, {1, Integer(5)}}));
    CHECK(r.rank() == 2);
    CHECK(r.kernel().size() == 1);
    CHECK(r.in_span({{0, Integer(7)}}));
    CHECK_FALSE(r.in_span({{2, Integer(1)}}));
    const auto basis = rref_basis({{{0, Integer(2)}, {1, Integer(4)}}, {{0, Integer(1)}, {1, Integer(1)}}});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].begin()->second == 1);
}

TEST_CASE("Betti numbers of curated complexes") {
    CHECK(betti(named("point")) == std::vector<long>{1});
    CHECK(betti(named("circle")) == std::vector<long>{1, 1});
    CHECK(betti(named("sphere2")) == std::vector<long>{1, 0, 1});
    CHECK(betti(named("torus")) == std::vector<long>{1, 2, 1});
    CHECK(betti(named("sphere3")) == std::vector<long>{1, 0, 0, 1});
    CHECK(betti(named("s1xs2")) == std::vector<long>{1, 1, 1, 1});
    CHECK(betti(named("ball4")) == std::vector<long>{1, 0, 0, 0, 0});
    CHECK(betti(named("pinched_torus")) == std::vector<long>{1, 1, 1});
    for (const auto* name : {"torus", "s1xs2", "pinched_torus", "suspension_torus", "disk_x_pinched"}) {
        const auto x = named(name);
        CHECK(betti(x) == oracle::betti(x));
    }
}

TEST_CASE("homology generators are independent cycles") {
    const auto t = named("torus");
    const auto gens = homology_generators(t, 1);
    CHECK(gens.size() == 2);
    for (const auto& g : gens) CHECK(boundary(t, g).is_zero());
    CHECK(homology_generators(t, 2).size() == 1);
}

TEST_CASE("orientability") {
    CHECK(is_orientable(named("torus")));
    CHECK(is_orientable(named("sphere3")));
    // 6-vertex projective plane.
    const auto rp2 = SimplicialComplex::from_top_simplices(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    CHECK(betti(rp2) == std::vector<long>{1, 0, 0});
    CHECK_FALSE(is_orientable(rp2));
}

TEST_CASE("subdivision, products, cones and suspensions") {
    const auto s2 = SimplicialComplex::from_top_simplices(4, hollow_tetrahedron());
    const auto sd = barycentric_subdivision(s2);
    CHECK(sd.count(2) == 24);
    CHECK(betti(sd) == betti(s2));
    CHECK(barycentric_subdivision(s2) == sd);
    CHECK(barycenter_id(s2, {0}) == 0);

    const auto circle = named("circle");
    CHECK(betti(product(circle, circle)) == std::vector<long>{1, 2, 1});
    CHECK(betti(suspension(circle)) == std::vector<long>{1, 0, 1});
    CHECK(betti(cone(circle)) == std::vector<long>{1, 0, 0});
    CHECK(facets_of({0, 1, 2}).size() == 3);
    CHECK(all_faces({0, 1, 2}).size() == 7);
}

TEST_CASE("canonical dump is stable") {
    const auto tri = SimplicialComplex::from_top_simplices(3, {{0, 1, 2}});
    const std::string dump = tri.canonical_dump();
    CHECK(dump == tri.canonical_dump());
    CHECK(dump.find("[0,1,2]") != std::string::npos);
    CHECK(named("torus").canonical_dump() == named("torus").canonical_dump());
}

TEST_CASE("pseudomanifold validation") {
    const auto torus = validate_pseudomanifold(named("torus"));
    CHECK(torus.is_manifold());
    CHECK(torus.singular.empty());

    const auto pinched = validate_pseudomanifold(named("pinched_torus"));
    CHECK(pinched.is_pseudomanifold());
    REQUIRE(pinched.singular.size() == 1);
    CHECK(pinched.singular[0].simplex == Simplex{0});
    CHECK(pinched.singular[0].codim == 2);
    CHECK(pinched.singular_vertices() == std::vector<int>{0});

    const auto pages = validate_pseudomanifold(named("three_pages"));
    CHECK_FALSE(pages.is_pseudomanifold());
    bool facet_degree = false;
    for (const auto& s : pages.singular) facet_degree = facet_degree || (s.reason == "facet-degree" && s.codim == 1);
    CHECK(facet_degree);

    const auto impure = validate_pseudomanifold(SimplicialComplex::from_top_simplices(4, {{0, 1, 2}, {2, 3}}));
    CHECK_FALSE(impure.is_pure);

    const auto ball = validate_pseudomanifold(named("ball4"));
    CHECK(ball.is_manifold());

    const auto lk = link(named("torus"), {0});
    CHECK(betti(lk) == std::vector<long>{1, 1});
}

TEST_CASE("cone points of a suspension are detected by their links") {
    const auto rep = validate_pseudomanifold(named("suspension_torus"));
    CHECK(rep.is_pseudomanifold());
    CHECK(rep.singular_vertices() == std::vector<int>{7, 8});
    for (const auto& s : rep.singular) {
        CHECK(s.codim == 3);
        CHECK(s.reason == "link-euler");
    }
}
