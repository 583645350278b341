#include <random>

#include "doctest.h"
#include "dualvol/mixed.hpp"
#include "test_util.hpp"

using namespace dualvol;
using namespace dualvol::testutil;

namespace {

MinkowskiSequence two_triangles() {
    Polytope p1(2, {rv({1, 0}), rv({0, 2}), rv({-1, -1})});
    Polytope p2(2, {rv({0, 0}), rv({2, 0}), rv({0, 2})});
    return MinkowskiSequence(2, {p1, p2});
}

// the five-cell fine mixed subdivision of the two triangles, by sorted
// vertex indices: P1 = {(-1,-1), (0,2), (1,0)}, P2 = {(0,0), (0,2), (2,0)}
MixedSubdivision five_cell_subdivision() {
    MixedSubdivision sub;
    sub.cells.push_back({{{0, 1}, {0, 1}}});
    sub.cells.push_back({{{1}, {0, 1, 2}}});
    sub.cells.push_back({{{0, 1, 2}, {0}}});
    sub.cells.push_back({{{1, 2}, {0, 2}}});
    sub.cells.push_back({{{0, 2}, {0, 2}}});
    return sub;
}

MinkowskiSequence worked_fine_cell() {
    Polytope p1(3, {rv({0, 2, 1}), rv({1, -1, 1}), rv({-1, 0, 1})});
    Polytope p2(3, {rv({0, 0, -2}), rv({-1, 1, -1})});
    return MinkowskiSequence(3, {p1, p2});
}

}  // namespace

TEST_CASE("regularity") {
    // a single non-codegenerate polytope
    Polytope q(2, {rv({1, 1}), rv({2, 1}), rv({3, -1}), rv({1, -1})});
    CHECK(is_regular(MinkowskiSequence(2, {q})));
    // appending the point parts -e_i always regularizes
    CHECK(is_regular(MinkowskiSequence(
        2, {Polytope(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}), point_polytope(rv({-1, 0})),
            point_polytope(rv({0, -1}))})));
    // a facet through the origin on a single part
    CHECK_FALSE(is_regular(MinkowskiSequence(
        2, {Polytope(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})})})));
}

TEST_CASE("dual mixed volume of parallelotopes") {
    // unit directions, d = 2: kappa = 1, m = 16/(x1 x2)
    auto seg = [](RatVec p) {
        return segment(scale(p, Rational(-1, 2)), scale(p, Rational(1, 2)));
    };
    MinkowskiSequence par(2, {seg(rv({1, 0})), seg(rv({0, 1}))});
    auto m = dual_mixed_volume(par);
    auto vars = m.vars;
    RationalFunction expected(vars);
    expected.add_term(16, {}, {lf(vars, 0, {1, 0}), lf(vars, 0, {0, 1})});
    CHECK(rf_equal(m, expected));

    // a skewed pair: kappa = 1/|det(p1, p2)| = 1/2
    MinkowskiSequence skew(2, {seg(rv({1, 1})), seg(rv({0, 2}))});
    auto ms = dual_mixed_volume(skew);
    RationalFunction expected_s(vars);
    expected_s.add_term(8, {}, {lf(vars, 0, {1, 0}), lf(vars, 0, {0, 1})});
    CHECK(rf_equal(ms, expected_s));

    // d = 3 with unit directions: 64/(x1 x2 x3)
    MinkowskiSequence par3(3, {seg(rv({1, 0, 0})), seg(rv({0, 1, 0})), seg(rv({0, 0, 1}))});
    auto m3 = dual_mixed_volume(par3);
    RationalFunction expected3(m3.vars);
    expected3.add_term(64, {}, {lf(m3.vars, 0, {1, 0, 0}), lf(m3.vars, 0, {0, 1, 0}),
                                lf(m3.vars, 0, {0, 0, 1})});
    CHECK(rf_equal(m3, expected3));

    // generators not spanning: formal zero
    MinkowskiSequence flat(2, {seg(rv({1, 0}))});
    CHECK(dual_mixed_volume(flat).is_zero_representation());
}

TEST_CASE("dual mixed volume of a single segment") {
    MinkowskiSequence seq(1, {segment(rv({1}), rv({3}))});
    auto m = dual_mixed_volume(seq);
    CHECK(rf_eval(m, {Rational(1)}) == Rational(-2, 3));
    // degree -d homogeneity
    for (int k = 2; k <= 5; ++k)
        CHECK(rf_eval(m, {Rational(k)}) == Rational(-2, 3) / k);
}

TEST_CASE("m(x, z) specializes to the dual volume function") {
    Polytope q(2, {rv({1, 1}), rv({2, 1}), rv({3, -1}), rv({1, -1})});
    auto mz = dual_mixed_volume_z(MinkowskiSequence(2, {q}));
    auto dv = dual_volume_function(q);
    auto zv = dv.function.vars;
    std::map<std::string, LinearForm> images;
    images["x1"] = LinearForm::constant_form(zv->size(), 1);
    CHECK(rf_equal(rf_substitute(mz, zv, images), dv.function));
}

TEST_CASE("worked fine mixed cell") {
    auto cell = worked_fine_cell();
    auto data = fine_cell_rays(cell);
    CHECK(data.dims == std::vector<int>{2, 1});
    // P1's sorted vertices are ((-1,0,1), (0,2,1), (1,-1,1)); the ray whose
    // max sits at (0,2,1) is (1/5)(1,2,-1)
    std::set<RatVec> rays1(data.rays[0].begin(), data.rays[0].end());
    CHECK(rays1.count(rv({Rational(1, 5), Rational(2, 5), Rational(-1, 5)})));
    CHECK(rays1.count(rv({Rational(2, 5), Rational(-1, 5), Rational(3, 5)})));
    CHECK(rays1.count(rv({Rational(-3, 5), Rational(-1, 5), Rational(-2, 5)})));
    std::set<RatVec> rays2(data.rays[1].begin(), data.rays[1].end());
    CHECK(rays2.count(rv({0, 0, -1})));
    CHECK(rays2.count(rv({0, 0, 1})));
    CHECK(data.kappa == Rational(1, 5));

    auto m = fine_cell_dmv(cell);
    // 5 denominator factors, i.e. sum of (d_i + 1) over the positive parts
    REQUIRE(m.terms.size() == 1);
    CHECK(m.terms[0].den_factors.size() == 5);

    // z = 0 slice equals the displayed x-only ratio
    auto vars = m.vars;
    std::map<std::string, LinearForm> z0;
    for (int j = 1; j <= 3; ++j)
        z0["z" + std::to_string(j)] = LinearForm::constant_form(vars->size(), 0);
    // displayed: (1/5) x1 x2 / [ (1/5)(2x1-2x2) (1/5)(-x1+6x2) (1/5)(4x1-4x2)
    //                            (x1-x2) (-x1+2x2) ]
    RationalFunction displayed(vars);
    displayed.add_term(
        Rational(1, 5),
        {LinearForm::variable(vars->size(), 0), LinearForm::variable(vars->size(), 1)},
        {lf(vars, 0, {Rational(2, 5), Rational(-2, 5), 0, 0, 0}),
         lf(vars, 0, {Rational(-1, 5), Rational(6, 5), 0, 0, 0}),
         lf(vars, 0, {Rational(4, 5), Rational(-4, 5), 0, 0, 0}),
         lf(vars, 0, {1, -1, 0, 0, 0}), lf(vars, 0, {-1, 2, 0, 0, 0})});
    CHECK(rf_equal(rf_substitute(m, vars, z0), displayed));

    // independent route: the generic fan computation gives the same function
    CHECK(rf_equal(m, dual_mixed_volume_z(cell)));
}

TEST_CASE("translated parallelotope fine cell") {
    // [-p_i/2, p_i/2]: m(x,z) = kappa * prod x_i / prod (x_i^2/4 - <z,v_i>^2)
    auto seg = [](RatVec p) {
        return segment(scale(p, Rational(-1, 2)), scale(p, Rational(1, 2)));
    };
    MinkowskiSequence par(2, {seg(rv({1, 1})), seg(rv({0, 2}))});
    auto m = fine_cell_dmv(par);
    auto vars = m.vars;  // (x1, x2, z1, z2)
    // dual basis to p1=(1,1), p2=(0,2): v1 = (1,0), v2 = (-1/2,1/2)
    RationalFunction expected(vars);
    expected.add_term(
        Rational(1, 2),
        {LinearForm::variable(4, 0), LinearForm::variable(4, 1)},
        {lf(vars, 0, {Rational(1, 2), 0, 1, 0}), lf(vars, 0, {Rational(1, 2), 0, -1, 0}),
         lf(vars, 0, {0, Rational(1, 2), Rational(-1, 2), Rational(1, 2)}),
         lf(vars, 0, {0, Rational(1, 2), Rational(1, 2), Rational(-1, 2)})});
    CHECK(rf_equal(m, expected));
    // and the generic route agrees
    CHECK(rf_equal(m, dual_mixed_volume_z(par)));
}

TEST_CASE("single full-dimensional simplex as a fine cell") {
    Polytope simplex(2, {rv({0, 0}), rv({3, 0}), rv({0, 3})});
    MinkowskiSequence cell(2, {simplex});
    auto data = fine_cell_rays(cell);
    CHECK(data.dims == std::vector<int>{2});
    // facet normals scaled to unit support gap; they sum to zero
    RatVec s(2, Rational(0));
    for (const auto& v : data.rays[0]) {
        s = add(s, v);
        Rational mx = support_value(simplex, scale(v, Rational(-1)));
        Rational mn = -support_value(simplex, v);
        CHECK(mx - mn == 1);
    }
    CHECK(is_zero(s));
    CHECK(rf_equal(fine_cell_dmv(cell), dual_mixed_volume_z(cell)));
}

TEST_CASE("Cayley polytopes") {
    // two points give a segment
    MinkowskiSequence pts(1, {point_polytope(rv({2})), point_polytope(rv({5}))});
    auto c1 = cayley_polytope(pts);
    CHECK(c1.dim == 3);
    CHECK(c1.vertices.size() == 2);

    // the worked pair
    MinkowskiSequence pair(2, {Polytope(2, {rv({0, 0}), rv({1, 0})}),
                               Polytope(2, {rv({0, 0}), rv({1, 2})})});
    auto c2 = cayley_polytope(pair);
    std::set<RatVec> expect = {rv({0, 0, 1, 0}), rv({1, 0, 1, 0}), rv({0, 0, 0, 1}),
                               rv({1, 2, 0, 1})};
    CHECK(std::set<RatVec>(c2.vertices.begin(), c2.vertices.end()) == expect);

    auto c3 = cayley_polytope(two_triangles());
    CHECK(c3.dim == 4);
    CHECK(c3.vertices.size() == 6);
}

TEST_CASE("worked pair dual mixed volume and Cayley identity") {
    MinkowskiSequence pair(2, {Polytope(2, {rv({0, 0}), rv({1, 0})}),
                               Polytope(2, {rv({0, 0}), rv({1, 2})})});
    auto m = dual_mixed_volume_z(pair);
    auto vars = m.vars;  // (x1, x2, z1, z2)
    RationalFunction displayed(vars);
    displayed.add_term(
        Rational(1, 2),
        {LinearForm::variable(4, 0), LinearForm::variable(4, 1)},
        {lf(vars, 0, {1, 0, -1, Rational(1, 2)}), lf(vars, 0, {0, 0, 1, Rational(-1, 2)}),
         lf(vars, 0, {0, 1, 0, Rational(-1, 2)}), lf(vars, 0, {0, 0, 0, Rational(1, 2)})});
    CHECK(rf_equal(m, displayed));
    CHECK(rf_equal(m, fine_cell_dmv(pair)));
    CHECK(verify_cayley_identity(pair));
}

TEST_CASE("Cayley identity in simple and random cases") {
    // single segment
    CHECK(verify_cayley_identity(MinkowskiSequence(1, {segment(rv({1}), rv({3}))})));
    // two triangles
    CHECK(verify_cayley_identity(two_triangles()));
    // random 2D sequences
    std::mt19937_64 rng(404);
    int done = 0;
    for (int iter = 0; iter < 100 && done < 5; ++iter) {
        auto p = random_polytope(rng, 2, 4, 3);
        auto q = random_polytope(rng, 2, 4, 3);
        if (!p || !q) continue;
        ++done;
        CHECK(verify_cayley_identity(MinkowskiSequence(2, {*p, *q})));
    }
    CHECK(done == 5);
}

TEST_CASE("five-cell subdivision of the two triangles") {
    auto seq = two_triangles();
    auto sub = five_cell_subdivision();
    CHECK(subdivision_is_fine(seq, sub));
    CHECK(validate_mixed_subdivision(seq, sub));
    CHECK(verify_subdivision_additivity(seq, sub));
}

TEST_CASE("trivial subdivision validates") {
    auto seq = two_triangles();
    MixedSubdivision trivial;
    trivial.cells.push_back({{{0, 1, 2}, {0, 1, 2}}});
    CHECK(validate_mixed_subdivision(seq, trivial));
    CHECK(verify_subdivision_additivity(seq, trivial));
    CHECK_FALSE(subdivision_is_fine(seq, trivial));
}

TEST_CASE("overlapping cells are rejected") {
    // a single square split into two triangles that share interior points
    Polytope square(2, {rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})});
    MinkowskiSequence seq(2, {square});
    MixedSubdivision good, bad;
    // vertices sorted: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
    good.cells.push_back({{{0, 1, 2}}});
    good.cells.push_back({{{1, 2, 3}}});
    CHECK(validate_mixed_subdivision(seq, good));
    bad.cells.push_back({{{0, 1, 2}}});
    bad.cells.push_back({{{0, 1, 3}}});
    CHECK_FALSE(validate_mixed_subdivision(seq, bad));

    CHECK_THROWS_AS(validate_mixed_subdivision(seq, MixedSubdivision{{MixedCell{{{0, 9}}}}}),
                    InvalidCell);
}

TEST_CASE("generated subdivisions of two segments") {
    MinkowskiSequence seq(2, {segment(rv({0, 0}), rv({1, 0})), segment(rv({0, 0}), rv({1, 2}))});
    auto sub = generate_fine_subdivision(seq, uint64_t{0});
    CHECK(subdivision_is_fine(seq, sub));
    CHECK(validate_mixed_subdivision(seq, sub));
    CHECK(verify_subdivision_additivity(seq, sub));
    // two transversal segments tile their sum with a single parallelogram cell
    CHECK(sub.cells.size() == 1);
    // the trivial lift of two segments IS that unique fine tiling
    std::vector<Rational> zero(4, Rational(0));
    CHECK(generate_fine_subdivision(seq, zero).cells.size() == 1);
}

TEST_CASE("all-zero heights on the two triangles are rejected as non-generic") {
    auto seq = two_triangles();
    std::vector<Rational> zero(6, Rational(0));
    CHECK_THROWS_AS(generate_fine_subdivision(seq, zero), NonGenericLifting);
}

TEST_CASE("generated subdivisions of the two triangles") {
    auto seq = two_triangles();
    auto sub = generate_fine_subdivision(seq, uint64_t{1});
    CHECK(subdivision_is_fine(seq, sub));
    CHECK(validate_mixed_subdivision(seq, sub));
    CHECK(verify_subdivision_additivity(seq, sub));
}

TEST_CASE("additivity on random generated subdivisions") {
    std::mt19937_64 rng(777);
    int done = 0;
    for (int iter = 0; iter < 60 && done < 4; ++iter) {
        auto p = random_polytope(rng, 2, 4, 3);
        auto q = random_polytope(rng, 2, 4, 3);
        if (!p || !q) continue;
        MinkowskiSequence seq(2, {*p, *q});
        auto sub = generate_fine_subdivision(seq, static_cast<uint64_t>(iter));
        ++done;
        CHECK(validate_mixed_subdivision(seq, sub));
        CHECK(verify_subdivision_additivity(seq, sub));
    }
    CHECK(done == 4);
    // one 3D pair
    int done3 = 0;
    for (int iter = 0; iter < 80 && done3 < 1; ++iter) {
        auto p = random_polytope(rng, 3, 4, 2);
        auto q = random_polytope(rng, 3, 4, 2);
        if (!p || !q) continue;
        MinkowskiSequence seq(3, {*p, *q});
        MixedSubdivision sub;
        try {
            sub = generate_fine_subdivision(seq, static_cast<uint64_t>(iter));
        } catch (const NonGenericLifting&) {
            continue;
        }
        ++done3;
        CHECK(validate_mixed_subdivision(seq, sub));
        CHECK(verify_subdivision_additivity(seq, sub));
    }
    CHECK(done3 == 1);
}

TEST_CASE("polar evaluation oracle for m") {
    std::mt19937_64 rng(550);
    std::uniform_int_distribution<int> wnum(1, 5);
    int done = 0;
    for (int iter = 0; iter < 200 && done < 6; ++iter) {
        auto p = random_polytope_origin_interior(rng, 2, 5);
        auto q = random_polytope_origin_interior(rng, 2, 5);
        if (!p || !q) continue;
        ++done;
        MinkowskiSequence seq(2, {*p, *q});
        auto m = dual_mixed_volume(seq);
        for (int t = 0; t < 4; ++t) {
            std::vector<Rational> x = {Rational(wnum(rng), wnum(rng)),
                                       Rational(wnum(rng), wnum(rng))};
            Polytope sum = minkowski_sum(seq.parts, x);
            CHECK(rf_eval(m, {x[0], x[1]}) == normalized_volume(polar_dual(sum)));
        }
        // degree -d homogeneity at a random positive point
        RatVec x0 = {Rational(wnum(rng)), Rational(wnum(rng))};
        Rational lambda(3, 2);
        CHECK(rf_eval(m, {x0[0] * lambda, x0[1] * lambda}) ==
              rf_eval(m, x0) / (lambda * lambda));
    }
    CHECK(done == 6);
}

TEST_CASE("point part plus a full simplex") {
    Polytope simplex(2, {rv({0, 0}), rv({3, 0}), rv({0, 3})});
    MinkowskiSequence cell(2, {simplex, point_polytope(rv({-1, 2}))});
    auto m = fine_cell_dmv(cell);
    CHECK(rf_equal(m, dual_mixed_volume_z(cell)));
    // the point part contributes no numerator factor
    REQUIRE(m.terms.size() == 1);
    CHECK(m.terms[0].num_factors.size() == 1);
    CHECK(m.terms[0].den_factors.size() == 3);
}

TEST_CASE("polar domain membership") {
    Polytope q(2, {rv({-1, -1}), rv({2, 0}), rv({0, 2})});
    MinkowskiSequence seq(2, {q, q});
    CHECK(weights_in_polar_domain_interior(seq, {1, 1}));
    CHECK(weights_in_polar_domain_interior(seq, {Rational(1, 3), Rational(5)}));
    // shifted part breaks membership for lopsided weights
    MinkowskiSequence seq2(2, {q, translate(q, rv({10, 10}))});
    CHECK_FALSE(weights_in_polar_domain_interior(seq2, {Rational(1, 100), 1}));
}
