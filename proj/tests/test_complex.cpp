#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ih/constructions.hpp"
#include "ih/errors.hpp"
#include "ih/intersection.hpp"
#include "test_spaces.hpp"

using namespace ih;

TEST_CASE("perversity built-ins") {
    CHECK(Perversity::middle()(4) == 1);
    CHECK(Perversity::logarithmic()(2) == 1);
    CHECK(Perversity::k_family(2)(6) == 3);
    CHECK(Perversity::k_family(2)(4) == 1);
    CHECK(Perversity::zero()(17) == 0);
    CHECK(Perversity::top()(5) == 3);
    CHECK_THROWS_AS(Perversity::middle()(1), precondition_error);

    // zero <= middle <= log <= top+1 and middle <= k <= log pointwise.
    for (int c = 2; c <= 20; ++c) {
        CHECK(Perversity::zero()(c) <= Perversity::middle()(c));
        CHECK(Perversity::middle()(c) <= Perversity::logarithmic()(c));
        CHECK(Perversity::logarithmic()(c) <= Perversity::top()(c) + 1);
        for (int k = 0; k <= 5; ++k) {
            CHECK(Perversity::middle()(c) <= Perversity::k_family(k)(c));
            CHECK(Perversity::k_family(k)(c) <= Perversity::logarithmic()(c));
        }
    }
    CHECK(Perversity::zero().leq(Perversity::middle()));
    CHECK_FALSE(Perversity::top().leq(Perversity::zero()));
}

TEST_CASE("validate") {
    SUBCASE("tetrahedron boundary is clean") {
        CHECK(validate(spaces::sphere_tetrahedron(), {}).clean());
    }
    SUBCASE("two hollow triangles sharing one vertex with the vertex at codim 2") {
        SimplicialComplex x({"P", "a", "b", "c", "d"},
                            {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
        Stratification s;
        s.members.push_back({2, Subcomplex(x, {{0}})});
        CHECK(validate(x, s).clean());
    }
    SUBCASE("dangling edge breaks purity") {
        SimplicialComplex x({"a", "b", "c", "d", "e"}, {{0, 1, 2}, {1, 2, 3}, {3, 4}});
        ValidationReport r = validate(x, {});
        CHECK_FALSE(r.clean());
        bool has_purity = false;
        for (const auto& item : r.items) has_purity |= item.code == "purity";
        CHECK(has_purity);
    }
    SUBCASE("boundary face fails the two-cofaces condition") {
        SimplicialComplex x({"a", "b", "c"}, {{0, 1, 2}});
        ValidationReport r = validate(x, {});
        CHECK_FALSE(r.clean());
    }
    SUBCASE("declared codimensions are taken at face value, with a hint") {
        StratifiedComplex cc = spaces::crossing_circles();
        ValidationReport r = validate(cc.complex, cc.strat);
        CHECK(r.clean());
        bool hinted = false;
        for (const auto& item : r.items) hinted |= item.code == "codim-declared";
        CHECK(hinted);
    }
}

TEST_CASE("cone") {
    SUBCASE("cone over the 2-sphere is a 3-disk with a codim-3 apex") {
        StratifiedComplex c = cone(spaces::sphere_tetrahedron(), {}, "apex");
        CHECK(c.complex.dim() == 3);
        CHECK(c.complex.simplex_count() == 2 * 14 + 1);
        REQUIRE(c.strat.members.size() == 1);
        CHECK(c.strat.members[0].codim == 3);
    }
    SUBCASE("cone over two points is rejected (apex codim 1)") {
        SimplicialComplex two({"a", "b"}, {});
        CHECK_THROWS_AS(cone(two, {}, "apex"), precondition_error);
    }
    SUBCASE("cone over the torus has the doubled simplex count") {
        StratifiedComplex c = cone(spaces::torus7(), {}, "apex");
        CHECK(c.complex.dim() == 3);
        CHECK(c.complex.simplex_count() == 2 * 42 + 1);
        CHECK(c.strat.members[0].codim == 3);
    }
    SUBCASE("apex name collisions are rejected") {
        CHECK_THROWS_AS(cone(spaces::torus7(), {}, "t3"), precondition_error);
    }
    SUBCASE("existing filtration members are coned") {
        StratifiedComplex cc = spaces::crossing_spheres();
        StratifiedComplex c = cone(cc.complex, cc.strat, "apex");
        REQUIRE(c.strat.members.size() == 2);
        CHECK(c.strat.members[0].codim == 2);
        // The coned member contains the edge from the old singular point to
        // the apex.
        Simplex edge{c.complex.require_vertex("P"), c.complex.require_vertex("apex")};
        std::sort(edge.begin(), edge.end());
        CHECK(c.strat.members[0].part.contains(edge));
        CHECK(c.strat.members[1].codim == 3);
    }
}

TEST_CASE("suspension") {
    SUBCASE("suspended hexagon is a 2-sphere with two marked points") {
        StratifiedComplex s = suspension(spaces::circle(6), {});
        CHECK(s.complex.dim() == 2);
        CHECK(validate(s.complex, s.strat).clean());
        CHECK(homology_dims(s.complex.chain_complex()) == GradedVectorSpace({1, 0, 1}));
    }
    SUBCASE("suspended torus is a clean pseudomanifold with codim-3 points") {
        StratifiedComplex s = suspension(spaces::torus7(), {});
        CHECK(s.complex.dim() == 3);
        CHECK(s.complex.pure());
        CHECK(validate(s.complex, s.strat).clean());
        REQUIRE(s.strat.members.size() == 1);
        CHECK(s.strat.members[0].codim == 3);
        CHECK(homology_dims(s.complex.chain_complex()) == GradedVectorSpace({1, 0, 2, 1}));
    }
    SUBCASE("suspension of a point is an interval with no strata") {
        SimplicialComplex pt({"p"}, {});
        StratifiedComplex s = suspension(pt, {});
        CHECK(s.complex.dim() == 1);
        CHECK(s.complex.count_in_dim(1) == 2);
        CHECK(s.strat.empty());
    }
    SUBCASE("Euler characteristic identity") {
        for (const SimplicialComplex& x :
             {spaces::torus7(), spaces::sphere_tetrahedron(), spaces::circle(4)}) {
            StratifiedComplex s = suspension(x, {});
            // chi(cone) = 1 always, so chi(suspension) = 2 - chi(x).
            CHECK(s.complex.euler_characteristic() ==
                  2 * 1 - x.euler_characteristic());
        }
    }
}

TEST_CASE("link") {
    SUBCASE("link of a cone apex returns the base") {
        SimplicialComplex t = spaces::torus7();
        StratifiedComplex c = cone(t, {}, "apex");
        StratifiedComplex l = link(c.complex, c.strat, "apex");
        CHECK(l.complex == t);
        CHECK(l.strat.empty());
    }
    SUBCASE("link of an interior surface vertex is a circle") {
        StratifiedComplex l = link(spaces::torus7(), {}, "t0");
        CHECK(l.complex.dim() == 1);
        CHECK(homology_dims(l.complex.chain_complex()) == GradedVectorSpace({1, 1}));
    }
    SUBCASE("link of the crossing point of two spheres is two disjoint circles") {
        StratifiedComplex cc = spaces::crossing_spheres();
        StratifiedComplex l = link(cc.complex, cc.strat, "P");
        CHECK(l.complex.dim() == 1);
        CHECK(homology_dims(l.complex.chain_complex()) == GradedVectorSpace({2, 2}));
    }
    SUBCASE("absent vertices are rejected") {
        CHECK_THROWS_AS(link(spaces::torus7(), {}, "nope"), parse_error);
    }
}

TEST_CASE("barycentric subdivision") {
    SUBCASE("an edge becomes two edges on three vertices") {
        SimplicialComplex e({"a", "b"}, {{0, 1}});
        StratifiedComplex sd = barycentric_subdivide(e, {});
        CHECK(sd.complex.count_in_dim(0) == 3);
        CHECK(sd.complex.count_in_dim(1) == 2);
    }
    SUBCASE("a full triangle becomes six triangles") {
        SimplicialComplex t({"a", "b", "c"}, {{0, 1, 2}});
        StratifiedComplex sd = barycentric_subdivide(t, {});
        CHECK(sd.complex.count_in_dim(2) == 6);
        CHECK(sd.complex.count_in_dim(1) == 12);
        CHECK(sd.complex.count_in_dim(0) == 7);
    }
    SUBCASE("Betti numbers are invariant under subdivision") {
        for (const SimplicialComplex& x :
             {spaces::torus7(), spaces::sphere_tetrahedron(), spaces::klein12()}) {
            StratifiedComplex sd = barycentric_subdivide(x, {});
            CHECK(homology_dims(sd.complex.chain_complex()) ==
                  homology_dims(x.chain_complex()));
        }
    }
    SUBCASE("strata subdivide to subcomplexes") {
        StratifiedComplex s = suspension(spaces::circle(4), {});
        StratifiedComplex sd = barycentric_subdivide(s.complex, s.strat);
        REQUIRE(sd.strat.members.size() == 1);
        CHECK(sd.strat.members[0].codim == 2);
        CHECK(sd.strat.members[0].part.dim() == 0);
        CHECK(validate(sd.complex, sd.strat).clean());
    }
    SUBCASE("the subdivision chain map commutes with the boundary") {
        SimplicialComplex t = spaces::torus7();
        StratifiedComplex sd = barycentric_subdivide(t, {});
        Chain c;
        c.degree = 2;
        c.add({0, 1, 3}, Rational(2));
        c.add({0, 2, 3}, Rational(-3));
        Chain lhs = boundary(subdivide_chain(t, sd.complex, c));
        Chain rhs = subdivide_chain(t, sd.complex, boundary(c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("klein bottle fixture is a clean surface with the right homology") {
    SimplicialComplex k = spaces::klein12();
    CHECK(k.count_in_dim(0) == 12);
    CHECK(k.count_in_dim(1) == 36);
    CHECK(k.count_in_dim(2) == 24);
    CHECK(validate(k, {}).clean());
    CHECK(homology_dims(k.chain_complex()) == GradedVectorSpace({1, 1, 0}));
}

TEST_CASE("fundamental class basics") {
    SUBCASE("oriented sphere") {
        SimplicialComplex s2 = spaces::sphere_tetrahedron();
        Chain fc = fundamental_class(s2, {});
        CHECK(fc.terms.size() == 4);
        CHECK(boundary(fc).is_zero());
    }
    SUBCASE("torus") {
        SimplicialComplex t = spaces::torus7();
        Chain fc = fundamental_class(t, {});
        CHECK(fc.terms.size() == 14);
        CHECK(boundary(fc).is_zero());
    }
    SUBCASE("klein bottle is not orientable") {
        CHECK_THROWS_AS(fundamental_class(spaces::klein12(), {}), precondition_error);
    }
}
