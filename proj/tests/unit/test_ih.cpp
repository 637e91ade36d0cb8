#include "asymih/complex_io.hpp"
#include "asymih/ih.hpp"
#include "asymih/models.hpp"

#include "../common/dense_oracle.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace asymih;

namespace {

Filtration named(const std::string& name) { return load_filtration(resolve_complex(name)); }

std::vector<Perversity> all_standard(int m) {
    const auto sp = standard_perversities(m);
    return {sp.zero, sp.lower_middle, sp.upper_middle, sp.top};
}

}  // namespace

TEST_CASE("standard perversities") {
    const auto p4 = standard_perversities(4);
    CHECK(p4.top.values() == std::vector<int>{0, 1, 2});
    CHECK(p4.lower_middle.values() == std::vector<int>{0, 0, 1});
    CHECK(p4.upper_middle.values() == std::vector<int>{0, 1, 1});
    CHECK(p4.zero.values() == std::vector<int>{0, 0, 0});
    const auto p2 = standard_perversities(2);
    CHECK(p2.zero == p2.top);
    CHECK(p2.lower_middle == p2.upper_middle);
    CHECK(p2.zero == p2.lower_middle);
    CHECK(standard_perversities(5).lower_middle.values() == std::vector<int>{0, 0, 1, 1});
    CHECK(p4.top.to_string() == "(0,1,2)");
    CHECK(p4.top.at(3) == 1);
}

TEST_CASE("perversity validation and parsing") {
    CHECK_THROWS_AS(Perversity(3, {1, 1}), PerversityError);
    CHECK_THROWS_AS(Perversity(4, {0, 2, 2}), PerversityError);
    CHECK_THROWS_AS(Perversity(4, {0, 1}), PerversityError);
    CHECK_THROWS_AS(Perversity(1, {}), PerversityError);
    CHECK(parse_perversity("t", 4) == standard_perversities(4).top);
    CHECK(parse_perversity("m", 4) == standard_perversities(4).lower_middle);
    CHECK(parse_perversity("0,1,1", 4) == standard_perversities(4).upper_middle);
    CHECK_THROWS_AS(parse_perversity("q", 4), PerversityError);
    CHECK(complementary(standard_perversities(4).zero, standard_perversities(4).top));
    CHECK(complementary(standard_perversities(4).lower_middle, standard_perversities(4).upper_middle));
    CHECK_FALSE(complementary(standard_perversities(4).zero, standard_perversities(4).zero));
    CHECK(dominated(standard_perversities(4).zero, standard_perversities(4).top));
}

TEST_CASE("filtration validation") {
    const auto torus = load_complex_file(resolve_complex("torus"));
    CHECK_NOTHROW(Filtration::trivial(torus));
    CHECK_THROWS_AS(Filtration(torus, {{0, 1}, {0, 1}}), FiltrationError);  // the edge [0,1] makes X_0 one-dimensional
    CHECK_THROWS_AS(Filtration(torus, {{}, {0}}), FiltrationError);          // codimension-one stratum
    CHECK_THROWS_AS(Filtration(torus, {{0}, {}}), FiltrationError);          // not nested
    CHECK_THROWS_AS(Filtration(torus, {{}, {}, {}}), FiltrationError);       // wrong length
    CHECK_THROWS_AS(Filtration(torus, {{42}, {42}}), FiltrationError);       // out of range
    const Filtration f(torus, {{3}, {3}});
    CHECK(f.singular_vertices() == std::vector<int>{3});
    CHECK(f.stratum_dim(0) == 0);
    CHECK(f.in_member(3, 0));
    CHECK(f.vertices_in({1, 3, 4}, 0) == 1);
}

TEST_CASE("allowability") {
    const auto f = named("pinched_torus");
    const Perversity p = standard_perversities(2).zero;
    // i = 1: an edge at the pinch meets X_0 in a vertex, dimension 0 > 1 - 2 + 0.
    CHECK_FALSE(is_allowable(f, p, {0, 1}, 1));
    CHECK(is_allowable(f, p, {1, 2}, 1));
    // i = 2: dimension 0 <= 2 - 2 + 0.
    CHECK(is_allowable(f, p, {0, 1, 2}, 2));
    CHECK_FALSE(is_allowable(f, p, {0}, 0));
    for (int i = 0; i <= 2; ++i) {
        for (const auto& s : f.base().simplices(i)) CHECK(is_allowable(f, p, s, i) == oracle::allowable(f, p, s, i));
    }

    const auto manifold = Filtration::trivial(load_complex_file(resolve_complex("sphere3")));
    for (int i = 0; i <= 3; ++i) {
        CHECK(allowable_simplices(manifold, standard_perversities(3).top, i).size() == manifold.base().count(i));
    }
}

TEST_CASE("intersection chains") {
    const auto f = named("pinched_torus");
    const auto ic = ic_complex(f, standard_perversities(2).zero);
    REQUIRE(ic.size() == 3);
    // IC_1: chains avoiding the pinch.
    for (const auto& c : ic[1].ic_basis) {
        for (const auto& s : c.support(f.base())) CHECK(std::find(s.begin(), s.end(), 0) == s.end());
    }
    const auto cone = named("cone_square");
    const auto cone_ic = ic_complex(cone, standard_perversities(2).zero);
    for (const auto& c : cone_ic[1].ic_basis) {
        for (const auto& s : c.support(cone.base())) CHECK(std::find(s.begin(), s.end(), 4) == s.end());
    }
    const auto manifold = Filtration::trivial(load_complex_file(resolve_complex("torus")));
    const auto full = ic_complex(manifold, standard_perversities(2).zero);
    for (int i = 0; i <= 2; ++i) CHECK(full[static_cast<std::size_t>(i)].ic_basis.size() == manifold.base().count(i));
}

TEST_CASE("IH of manifolds equals ordinary homology") {
    for (const auto* name : {"sphere2", "torus", "sphere3", "s1xs2", "ball4"}) {
        const auto f = named(name);
        const auto h = betti(f.base());
        for (const auto& p : all_standard(f.m())) CHECK(ih_betti(f, p) == h);
    }
}

TEST_CASE("IH of the pinched torus") {
    const auto f = named("pinched_torus");
    const auto p = standard_perversities(2).zero;
    CHECK(betti(f.base()) == std::vector<long>{1, 1, 1});
    CHECK(ih_betti(f, p) == std::vector<long>{1, 0, 1});
    CHECK(oracle::ih_betti(f, p) == std::vector<long>{1, 0, 1});
    const auto gens = ih_generators(f, p, 2);
    REQUIRE(gens.size() == 1);
    CHECK(boundary(f.base(), gens[0]).is_zero());
}

TEST_CASE("IH of the suspended torus depends on the perversity") {
    const auto f = named("suspension_torus");
    const auto sp = standard_perversities(3);
    CHECK(ih_betti(f, sp.zero) == std::vector<long>{1, 2, 0, 1});
    CHECK(ih_betti(f, sp.top) == std::vector<long>{1, 0, 2, 1});
    CHECK(oracle::ih_betti(f, sp.zero) == ih_betti(f, sp.zero));
    CHECK(oracle::ih_betti(f, sp.top) == ih_betti(f, sp.top));
}

TEST_CASE("IH agrees with the dense oracle on singular models") {
    for (const auto* name : {"cone_square", "pinched_torus_sd", "pinched_torus_sd_alt", "disk_x_pinched", "disk_x_disk"}) {
        const auto f = named(name);
        for (const auto& p : all_standard(f.m())) CHECK(ih_betti(f, p) == oracle::ih_betti(f, p));
    }
}

TEST_CASE("Poincare duality") {
    const auto torus = named("torus");
    const auto z2 = standard_perversities(2).zero;
    const auto rep = duality_check(torus, z2, z2);
    CHECK(rep.applicable);
    CHECK(rep.passed);
    CHECK(duality_check(named("pinched_torus"), z2, z2).passed);
    const auto sp = standard_perversities(3);
    const auto st = duality_check(named("suspension_torus"), sp.zero, sp.top);
    CHECK(st.passed);
    CHECK(st.p_ranks == std::vector<long>{1, 2, 0, 1});
    CHECK_THROWS_AS(duality_check(named("sphere3"), sp.zero, sp.zero), PerversityError);

    // Suspension of the projective plane: a non-orientable input.
    const auto rp2 = SimplicialComplex::from_top_simplices(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    const Filtration srp2(suspension(rp2), {{6, 7}, {6, 7}, {6, 7}});
    const auto na = duality_check(srp2, sp.zero, sp.top);
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(na.reason.empty());

    CHECK_FALSE(duality_check(named("ball4"), standard_perversities(4).zero, standard_perversities(4).top).applicable);
}

TEST_CASE("stratification independence") {
    const auto p2 = standard_perversities(2).zero;
    CHECK(independence_check(named("torus"), named("torus_alt"), p2));
    CHECK(independence_check(named("pinched_torus_sd"), named("pinched_torus_sd_alt"), p2));
    const auto sp = standard_perversities(3);
    for (const auto& p : {sp.zero, sp.top}) {
        CHECK(independence_check(named("suspension_torus_sd"), named("suspension_torus_sd_alt"), p));
    }
    CHECK_THROWS_AS(independence_check(named("torus"), named("pinched_torus"), p2), FiltrationError);
}

TEST_CASE("subdivision leaves IH unchanged") {
    const auto p2 = standard_perversities(2).zero;
    CHECK(ih_betti(named("pinched_torus"), p2) == ih_betti(named("pinched_torus_sd"), p2));
    const auto sp = standard_perversities(3);
    CHECK(ih_betti(named("suspension_torus"), sp.zero) == ih_betti(named("suspension_torus_sd"), sp.zero));
    CHECK(ih_betti(named("suspension_torus"), sp.top) == ih_betti(named("suspension_torus_sd"), sp.top));
    const auto b = standard_perversities(4);
    CHECK(ih_betti(named("ball4"), b.top) == ih_betti(named("ball4_sd"), b.top));
}

TEST_CASE("a non-full member is handled by one subdivision") {
    auto x = load_complex_file(resolve_complex("torus"));
    x.add_subcomplex("pair", std::vector<Simplex>{{0}, {1}});
    const auto f = Filtration::from_subcomplexes(x, {{0, "pair"}});
    CHECK(f.subdivided());
    CHECK(f.singular_vertices().size() == 2);
    CHECK(ih_betti(f, standard_perversities(2).zero) == std::vector<long>{1, 2, 1});
}

TEST_CASE("golden canonical dump") {
    std::ifstream in(std::string(ASYMIH_TEST_SOURCE_DIR) + "/golden/pinched_torus.dump");
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(load_complex_file(resolve_complex("pinched_torus")).canonical_dump() == golden.str());
}
