#include <random>

#include "doctest.h"
#include "dualvol/exact.hpp"

using namespace dualvol;

namespace {

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

RatMat random_int_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    RatMat m(n, RatVec(n));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

// brute-force hull membership: enumerate barycentric solutions over all
// (d+1)-subsets; exact
bool hull_member_bruteforce(const RatVec& p, const std::vector<RatVec>& pts) {
    const size_t n = pts.size();
    const size_t d = p.size();
    std::vector<int> subset;
    // all subsets of size <= d+1
    for (size_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<size_t>(__builtin_popcount(mask)) > d + 1) continue;
        std::vector<RatVec> sel;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sel.push_back(pts[i]);
        RatMat A(d + 1, RatVec(sel.size()));
        RatVec b(d + 1);
        for (size_t j = 0; j < sel.size(); ++j) {
            for (size_t i = 0; i < d; ++i) A[i][j] = sel[j][i];
            A[d][j] = 1;
        }
        for (size_t i = 0; i < d; ++i) b[i] = p[i];
        b[d] = 1;
        auto res = solve_linear(A, b);
        if (res.status == SolveResult::Status::Unique) {
            bool ok = true;
            for (const auto& l : res.x)
                if (l < 0) ok = false;
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("determinant basics") {
    RatMat id3 = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    CHECK(det(id3) == 1);
    RatMat perm = {rv({0, 1}), rv({1, 0})};
    CHECK(det(perm) == -1);
    RatMat m = {rv({Rational(1, 5), Rational(2, 5), Rational(-1, 5)}),
                rv({Rational(2, 5), Rational(-1, 5), Rational(3, 5)}),
                rv({0, 0, -1})};
    CHECK(det(m) == Rational(1, 5));
    CHECK_THROWS_AS(det(RatMat{rv({1, 2})}), DimensionError);
}

TEST_CASE("determinant is alternating and multilinear on rows") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 3);
        RatMat m = random_int_matrix(n, rng);
        Rational d0 = det(m);
        RatMat sw = m;
        std::swap(sw[0], sw[1]);
        CHECK(det(sw) == -d0);
        RatMat sc = m;
        sc[0] = scale(sc[0], Rational(3, 2));
        CHECK(det(sc) == Rational(3, 2) * d0);
        RatMat su = m;
        su[0] = add(su[0], su[1]);
        CHECK(det(su) == d0);
    }
}

TEST_CASE("solve_linear") {
    RatMat id2 = {rv({1, 0}), rv({0, 1})};
    auto r = solve_linear(id2, rv({3, 4}));
    REQUIRE(r.status == SolveResult::Status::Unique);
    CHECK(r.x == rv({3, 4}));

    RatMat sing = {rv({1, 1}), rv({2, 2})};
    CHECK(solve_linear(sing, rv({1, 2})).status == SolveResult::Status::Underdetermined);
    CHECK(solve_linear(sing, rv({1, 3})).status == SolveResult::Status::NoSolution);

    // ray system of the worked fine-mixed-cell example
    RatMat a = {rv({-1, 3, 0}), rv({1, 2, 0}), rv({1, -1, -1})};
    // rows: p11-p12, p11-p13, p21-p22 with rhs (1,1,0)... constructed directly:
    RatMat sys = {sub(rv({0, 2, 1}), rv({1, -1, 1})), sub(rv({0, 2, 1}), rv({-1, 0, 1})),
                  sub(rv({0, 0, -2}), rv({-1, 1, -1}))};
    auto v = solve_linear(sys, rv({1, 1, 0}));
    REQUIRE(v.status == SolveResult::Status::Unique);
    CHECK(v.x == rv({Rational(1, 5), Rational(2, 5), Rational(-1, 5)}));
}

TEST_CASE("solve_linear round trip on random nonsingular systems") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 3);
        RatMat a = random_int_matrix(n, rng);
        if (det(a) == 0) continue;
        RatVec x(n);
        std::uniform_int_distribution<int> d(-4, 4);
        for (auto& v : x) v = Rational(d(rng), 1 + (rng() % 3));
        RatVec b(n, Rational(0));
        for (int i = 0; i < n; ++i) b[i] = dot(a[i], x);
        auto r = solve_linear(a, b);
        REQUIRE(r.status == SolveResult::Status::Unique);
        CHECK(r.x == x);
    }
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(rv({Rational(1, 5), Rational(2, 5), Rational(-1, 5)})) == rv({1, 2, -1}));
    CHECK(primitive(rv({4, -6})) == rv({2, -3}));
    CHECK(primitive(rv({0, 0})) == rv({0, 0}));
}

TEST_CASE("is_extreme_point") {
    CHECK(is_extreme_point(rv({0, 0}), {rv({1, 0}), rv({0, 1})}));
    CHECK_FALSE(is_extreme_point(rv({Rational(1, 2), Rational(1, 2)}), {rv({0, 0}), rv({1, 1})}));
    CHECK(is_extreme_point(rv({5, 5}), {}));
    // quadrilateral vertex against the other three
    std::vector<RatVec> others = {rv({2, 1}), rv({3, -1}), rv({1, -1})};
    CHECK(is_extreme_point(rv({1, 1}), others) == !hull_member_bruteforce(rv({1, 1}), others));
    CHECK(is_extreme_point(rv({1, 1}), others));
}

TEST_CASE("hull membership agrees with brute force oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        size_t d = 2 + rng() % 2;
        size_t k = 3 + rng() % 4;  // up to 6 points
        std::vector<RatVec> pts;
        for (size_t i = 0; i < k; ++i) {
            RatVec p(d);
            for (auto& x : p) x = coord(rng);
            pts.push_back(p);
        }
        RatVec q(d);
        for (auto& x : q) x = Rational(coord(rng), 2);
        CHECK(in_convex_hull(q, pts) == hull_member_bruteforce(q, pts));
    }
}

TEST_CASE("lp_solve basic optimization") {
    // min -x1 - x2 s.t. x1 + x3 = 1, x2 + x4 = 2 (box [0,1]x[0,2])
    RatMat A = {rv({1, 0, 1, 0}), rv({0, 1, 0, 1})};
    auto res = lp_solve(A, rv({1, 2}), rv({-1, -1, 0, 0}));
    REQUIRE(res.status == LpResult::Status::Optimal);
    CHECK(res.value == -3);
    // infeasible: x1 = -1
    auto inf = lp_solve(RatMat{rv({1})}, rv({-1}), rv({0}));
    CHECK(inf.status == LpResult::Status::Infeasible);
    // unbounded: min -x1, x free positive with no constraint rows
    auto unb = lp_solve(RatMat{}, RatVec{}, rv({-1}));
    CHECK(unb.status == LpResult::Status::Unbounded);
}
