#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ih/conecalc.hpp"
#include "ih/errors.hpp"
#include "ih/intersection.hpp"
#include "test_spaces.hpp"

using namespace ih;

namespace {

RationalMatrix dense(int rows, int cols, std::initializer_list<int> vals) {
    RationalMatrix m(rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, Rational(*it++));
    return m;
}

// P^1 data: dims (1,0,1), lambda from degree 2 the identity pairing.
LefschetzData projective_line() {
    LefschetzData d;
    d.dims = GradedVectorSpace({1, 0, 1});
    d.lambda = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 1, {1})};
    return d;
}

// P^2 data: dims (1,0,1,0,1), cap with the hyperplane class.
LefschetzData projective_plane() {
    LefschetzData d;
    d.dims = GradedVectorSpace({1, 0, 1, 0, 1});
    d.lambda = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 1, {1}),
                RationalMatrix(0, 0), dense(1, 1, {1})};
    return d;
}

// Quadric surface data: dims (1,0,2,0,1), cap with the (1,1) class.
LefschetzData quadric_surface() {
    LefschetzData d;
    d.dims = GradedVectorSpace({1, 0, 2, 0, 1});
    d.lambda = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 2, {1, 1}),
                RationalMatrix(0, 0), dense(2, 1, {1, 1})};
    return d;
}

// A point (or several points) as a zero-dimensional space.
LefschetzData points(int count) {
    LefschetzData d;
    d.dims = GradedVectorSpace({count});
    d.lambda = {RationalMatrix(0, count)};
    return d;
}

// Unit upper+lower triangular product: an invertible matrix with entries
// drawn from the generator.
RationalMatrix random_invertible(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-2, 2);
    RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            l.set(i, j, Rational(val(rng)));
            u.set(j, i, Rational(val(rng)));
        }
    return l * u;
}

RationalMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> val(-2, 2);
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, Rational(val(rng)));
    return m;
}

// Random pair data satisfying the two Hard Lefschetz spots at degree k.
PairMorphismData random_hl_pair(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(0, 3);
    PairMorphismData d;
    d.x.dims.dims.assign(2 * (k - 1) + 1, 0);
    for (int i = 0; i <= 2 * (k - 1); ++i) d.x.dims.dims[i] = dim(rng);
    // Force the two Hard Lefschetz spots to be square (k = 1 has both sides
    // out of range already).
    if (k >= 2) d.x.dims.dims[k - 2] = d.x.dims.dims[k];
    d.y.dims.dims.assign(2 * k + 1, 0);
    for (int i = 0; i <= 2 * k; ++i) d.y.dims.dims[i] = dim(rng);
    d.y.dims.dims[k - 1] = d.y.dims.dims[k + 1];

    for (int i = 0; i <= 2 * (k - 1); ++i) {
        int rows = d.x.dims.at(i - 2), cols = d.x.dims.at(i);
        if (i == k && rows == cols)
            d.x.lambda.push_back(random_invertible(rows, rng));
        else
            d.x.lambda.push_back(random_matrix(rows, cols, rng));
    }
    for (int i = 0; i <= 2 * k; ++i) {
        int rows = d.y.dims.at(i - 2), cols = d.y.dims.at(i);
        if (i == k + 1)
            d.y.lambda.push_back(random_invertible(rows, rng));
        else
            d.y.lambda.push_back(random_matrix(rows, cols, rng));
    }
    for (int i = 0; i <= 2 * (k - 1); ++i)
        d.alpha.push_back(random_matrix(d.y.dims.at(i), d.x.dims.at(i), rng));
    d.check_shapes();
    return d;
}

} // namespace

TEST_CASE("cone formula evaluation") {
    CHECK(cone_formula(GradedVectorSpace({1, 2, 1}), 3) == GradedVectorSpace({0, 0, 2, 1}));
    CHECK(cone_formula(GradedVectorSpace({1, 0, 1}), 3) == GradedVectorSpace({0, 0, 0, 1}));
    CHECK(cone_formula(GradedVectorSpace({1, 1}), 2) == GradedVectorSpace({0, 0, 1}));
    SUBCASE("vanishing at or below half, total above half") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> dim(0, 4);
        for (int trial = 0; trial < 50; ++trial) {
            GradedVectorSpace l;
            int len = 1 + trial % 5;
            for (int i = 0; i < len; ++i) l.dims.push_back(dim(rng));
            GradedVectorSpace out = cone_formula(l, len);
            int above = 0;
            for (int i = 0; i <= len; ++i) {
                if (2 * i <= len) CHECK(out.at(i) == 0);
                if (2 * i > len) above += l.at(i - 1);
            }
            CHECK(out.total() == above);
        }
    }
    SUBCASE("degree-range precondition") {
        CHECK_THROWS_AS(cone_formula(GradedVectorSpace({1, 2, 1}), 2), precondition_error);
    }
}

TEST_CASE("projective cone table") {
    SUBCASE("a point inside the projective line") {
        PairMorphismData d;
        d.x = points(1);
        d.y = projective_line();
        d.alpha = {dense(1, 1, {1})};
        ConeTableResult r = projective_cone_table(d, 1);
        CHECK(r.kx == GradedVectorSpace({1, 0, 1}));
        CHECK(r.ky == GradedVectorSpace({1, 0, 1, 0, 1}));
        std::vector<int> ranks;
        for (const auto& m : r.maps) ranks.push_back(rank(m));
        CHECK(ranks == std::vector<int>({1, 0, 1, 0, 0}));
    }
    SUBCASE("two points inside the projective line, checked against the chain engine") {
        PairMorphismData d;
        d.x = points(2);
        d.y = projective_line();
        d.alpha = {dense(1, 2, {1, 1})};
        ConeTableResult r = projective_cone_table(d, 1);
        CHECK(r.kx == GradedVectorSpace({2, 0, 2}));
        StratifiedComplex cs = spaces::crossing_spheres();
        CHECK(ih_betti(cs.complex, cs.strat, Perversity::middle()).dims == r.kx);
    }
    SUBCASE("zero subspace data shifts the ambient column") {
        PairMorphismData d;
        d.x = points(0);
        d.y = projective_line();
        d.alpha = {RationalMatrix(1, 0)};
        ConeTableResult r = projective_cone_table(d, 1);
        CHECK(r.kx == GradedVectorSpace({0, 0, 0}));
        CHECK(r.ky == GradedVectorSpace({1, 0, 1, 0, 1}));
        for (const auto& m : r.maps) CHECK(rank(m) == 0);
    }
    SUBCASE("palindromic ambient data gives a palindromic cone column") {
        for (LefschetzData y : {projective_line(), projective_plane(), quadric_surface()}) {
            PairMorphismData d;
            d.x = points(1);
            d.y = y;
            int n = y.dims.top_degree() / 2;
            if (n != 1) {
                // Use a hyperplane-section-sized subspace: P^{n-1} data.
                d.x = (n == 2) ? projective_line() : points(1);
            }
            d.alpha.assign(d.x.dims.dims.size(), RationalMatrix(0, 0));
            for (std::size_t i = 0; i < d.alpha.size(); ++i)
                d.alpha[i] = RationalMatrix(y.dims.at(static_cast<int>(i)),
                                            d.x.dims.at(static_cast<int>(i)));
            ConeTableResult r = projective_cone_table(d, n);
            CHECK(r.ky.palindromic());
        }
    }
    SUBCASE("failing Hard Lefschetz input is rejected") {
        PairMorphismData d;
        d.x = points(1);
        d.y = projective_line();
        d.y.lambda[2] = RationalMatrix(1, 1); // zero map, not an isomorphism
        d.alpha = {dense(1, 1, {1})};
        CHECK_THROWS_WITH_AS(projective_cone_table(d, 1),
                             "Hard Lefschetz precondition: lambda is not an isomorphism from "
                             "degree 2 on the ambient space",
                             precondition_error);
    }
}

TEST_CASE("gysin link homology") {
    SUBCASE("the line bundle over the projective line gives the 3-sphere") {
        GysinLinkResult r = gysin_link(projective_line());
        CHECK(r.link_dims == GradedVectorSpace({1, 0, 0, 1}));
    }
    SUBCASE("the (1,1) bundle over the quadric gives the product of spheres") {
        GysinLinkResult r = gysin_link(quadric_surface());
        CHECK(r.link_dims == GradedVectorSpace({1, 0, 1, 1, 0, 1}));
    }
    SUBCASE("the trivial base gives the circle") {
        GysinLinkResult r = gysin_link(points(1));
        CHECK(r.link_dims == GradedVectorSpace({1, 1}));
    }
    SUBCASE("vanishing Euler characteristic and exactness, randomized") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> dim(0, 4);
        for (int trial = 0; trial < 100; ++trial) {
            LefschetzData base;
            int len = 1 + trial % 6;
            for (int i = 0; i < len; ++i) base.dims.dims.push_back(dim(rng));
            for (int i = 0; i < len; ++i)
                base.lambda.push_back(random_matrix(base.dims.at(i - 2), base.dims.at(i), rng));
            GysinLinkResult r = gysin_link(base);
            int chi = 0;
            for (int k = 0; k <= r.link_dims.top_degree(); ++k)
                chi += (k % 2 ? -1 : 1) * r.link_dims.at(k);
            CHECK(chi == 0);
            for (int k = 0; k <= r.link_dims.top_degree(); ++k) {
                // The two structural maps compose to zero with the
                // hyperplane operator on each side.
                CHECK((base.lambda_between(k) * r.p_push[k]).is_zero());
                CHECK((r.p_pull[k] * base.lambda_between(k + 1)).is_zero());
                CHECK(rank(r.p_pull[k]) + rank(r.p_push[k]) == r.link_dims.at(k));
            }
        }
    }
}

TEST_CASE("link map chase") {
    SUBCASE("a point inside the projective line in degree 1") {
        PairMorphismData d;
        d.x = points(1);
        d.y = projective_line();
        d.alpha = {dense(1, 1, {1})};
        ChaseResult r = link_map_chase(d, 1);
        CHECK(r.zero);
        CHECK(r.matrix.rows == 0); // three-sphere has no middle homology
        CHECK(r.matrix.cols == 1); // the circle direction over the point
        CHECK(r.certificate.size() == 4);
    }
    SUBCASE("the genus-one curve inside the quadric in degree 2") {
        PairMorphismData d;
        d.x.dims = GradedVectorSpace({1, 2, 1});
        // Cap with the degree-4 hyperplane class on the curve.
        d.x.lambda = {RationalMatrix(0, 1), RationalMatrix(0, 2), dense(1, 1, {4})};
        d.y = quadric_surface();
        d.alpha = {dense(1, 1, {1}), RationalMatrix(0, 2), dense(2, 1, {2, 2})};
        ChaseResult r = link_map_chase(d, 2);
        CHECK(r.zero);
        CHECK(r.matrix.rows == 1); // middle homology of the product of spheres
        CHECK(r.matrix.cols == 2); // two circle-bundle classes over the curve
        CHECK(r.matrix.is_zero());
        CHECK(r.certificate.size() == 4);
    }
    SUBCASE("randomized Hard-Lefschetz data always chases to zero") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            int k = 1 + trial % 3;
            PairMorphismData d = random_hl_pair(k, rng);
            ChaseResult r = link_map_chase(d, k);
            CHECK(r.zero);
            CHECK(r.matrix.is_zero());
        }
    }
    SUBCASE("missing Hard Lefschetz input is a precondition error") {
        PairMorphismData d;
        d.x = points(1);
        d.y = projective_line();
        d.y.lambda[2] = RationalMatrix(1, 1);
        d.alpha = {dense(1, 1, {1})};
        CHECK_THROWS_AS(link_map_chase(d, 1), precondition_error);
    }
}

TEST_CASE("hard Lefschetz from link vanishing") {
    SUBCASE("projective plane with a line section") {
        HardLefschetzVerdict v = hard_lefschetz_from_links(
            projective_line(), projective_plane(), {RationalMatrix(0, 1), RationalMatrix(0, 0)},
            true, 2);
        CHECK(v.weak_lefschetz_ok);
        CHECK(v.palindromic_ok);
        CHECK(v.concluded);
        CHECK(v.lambda_surjective);
        CHECK(v.lambda_iso);
        CHECK(v.lambda_rank == 0); // both spaces vanish in the certified spot
    }
    SUBCASE("quadric with a conic section") {
        HardLefschetzVerdict v = hard_lefschetz_from_links(
            projective_line(), quadric_surface(), {RationalMatrix(0, 1), RationalMatrix(0, 0)},
            true, 2);
        CHECK(v.concluded);
        CHECK(v.lambda_iso);
        bool standard_step = false;
        for (const auto& s : v.certificate)
            standard_step |= s.find("standard step") != std::string::npos;
        CHECK(standard_step);
    }
    SUBCASE("failing weak Lefschetz gives a diagnostic, no verdict") {
        LefschetzData y = quadric_surface();
        y.dims.dims[1] = 1;
        y.dims.dims[3] = 1;
        y.lambda[3] = RationalMatrix(1, 1);
        y.lambda[2] = dense(1, 2, {1, 1});
        y.lambda[4] = dense(2, 1, {1, 1});
        y.lambda[1] = RationalMatrix(0, 1);
        // i_1 maps a zero space onto a one-dimensional one: not surjective.
        HardLefschetzVerdict v = hard_lefschetz_from_links(
            projective_line(), y, {RationalMatrix(1, 1), RationalMatrix(1, 0)}, true, 2);
        CHECK_FALSE(v.weak_lefschetz_ok);
        CHECK_FALSE(v.concluded);
    }
}

TEST_CASE("chern class lift from polar data") {
    SUBCASE("the projective plane reproduces the binomial coefficients") {
        PolarData p;
        p.n = 2;
        p.dims = GradedVectorSpace({1, 0, 1, 0, 1});
        p.classes = {{Rational(1)}, {Rational(0)}, {Rational(0)}};
        p.h_action = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 1, {1}),
                      RationalMatrix(0, 0), dense(1, 1, {1})};
        auto c = chern_mather_lift(p);
        REQUIRE(c.size() == 3);
        CHECK(c[0] == std::vector<Rational>{Rational(1)});
        CHECK(c[1] == std::vector<Rational>{Rational(3)});
        CHECK(c[2] == std::vector<Rational>{Rational(3)});
    }
    SUBCASE("binomials appear whenever the higher polar classes vanish") {
        for (int n = 1; n <= 4; ++n) {
            PolarData p;
            p.n = n;
            p.dims.dims.assign(2 * n + 1, 0);
            for (int i = 0; i <= 2 * n; i += 2) p.dims.dims[i] = 1;
            for (int j = 0; j <= n; ++j)
                p.classes.push_back(std::vector<Rational>{Rational(j == 0 ? 1 : 0)});
            for (int i = 0; i <= 2 * n; ++i)
                p.h_action.push_back(i >= 2 && i % 2 == 0 ? dense(1, 1, {1})
                                                          : RationalMatrix(p.dims.at(i - 2),
                                                                           p.dims.at(i)));
            auto c = chern_mather_lift(p);
            for (int i = 0; i <= n; ++i)
                CHECK(c[i] == std::vector<Rational>{Rational(binomial(n + 1, i))});
        }
    }
    SUBCASE("plane conic degree") {
        PolarData p;
        p.n = 1;
        p.dims = GradedVectorSpace({1, 0, 1});
        p.classes = {{Rational(1)}, {Rational(2)}}; // two polar points
        p.h_action = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 1, {2})};
        auto c = chern_mather_lift(p);
        CHECK(c[1] == std::vector<Rational>{Rational(2)}); // 2*2 - 2
    }
    SUBCASE("smooth plane cubic degree") {
        PolarData p;
        p.n = 1;
        p.dims = GradedVectorSpace({1, 0, 1});
        p.classes = {{Rational(1)}, {Rational(6)}}; // d(d-1) polar points
        p.h_action = {RationalMatrix(0, 1), RationalMatrix(0, 0), dense(1, 1, {3})};
        auto c = chern_mather_lift(p);
        CHECK(c[1] == std::vector<Rational>{Rational(0)}); // 2*3 - 6
    }
    SUBCASE("shape mismatches are rejected") {
        PolarData p;
        p.n = 1;
        p.dims = GradedVectorSpace({1, 0, 1});
        p.classes = {{Rational(1)}};
        CHECK_THROWS_AS(chern_mather_lift(p), invariant_error);
    }
}
