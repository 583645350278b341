// Shared helpers for tests: literal constructors and random instances.
#ifndef DUALVOL_TEST_UTIL_HPP
#define DUALVOL_TEST_UTIL_HPP

#include <optional>
#include <random>

#include "dualvol/geometry.hpp"

namespace dualvol::testutil {

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

inline LinearForm lf(const VarTablePtr& vars, Rational c, std::initializer_list<Rational> coeffs) {
    RatVec co(coeffs);
    if (co.size() != vars->size()) throw std::invalid_argument("lf: wrong coefficient count");
    return LinearForm(std::move(c), std::move(co));
}

// Rational function from (coeff, denominator factor list) pairs.
inline RationalFunction rf_from_terms(
    const VarTablePtr& vars,
    const std::vector<std::pair<Rational, std::vector<LinearForm>>>& terms) {
    RationalFunction f(vars);
    for (const auto& [c, dens] : terms) f.add_term(c, {}, dens);
    return f;
}

// Random full-dimensional polytope with integer coordinates in [-box, box].
inline std::optional<Polytope> random_polytope(std::mt19937_64& rng, int d, int max_verts,
                                               int box = 4) {
    std::uniform_int_distribution<int> coord(-box, box);
    std::vector<RatVec> pts;
    int k = d + 1 + static_cast<int>(rng() % std::max(1, max_verts - d));
    for (int i = 0; i < k; ++i) {
        RatVec p(d);
        for (auto& x : p) x = coord(rng);
        pts.push_back(p);
    }
    if (affine_dim(pts) != d) return std::nullopt;
    return Polytope(d, pts);
}

// Random polytope with 0 strictly interior.
inline std::optional<Polytope> random_polytope_origin_interior(std::mt19937_64& rng, int d,
                                                               int max_verts, int box = 4) {
    auto p = random_polytope(rng, d, max_verts, box);
    if (!p) return std::nullopt;
    for (const auto& f : facets(*p))
        if (f.offset <= 0) return std::nullopt;
    return p;
}

}  // namespace dualvol::testutil

#endif
