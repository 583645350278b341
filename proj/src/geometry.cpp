#include "dualvol/geometry.hpp"

#include <algorithm>
#include <set>

namespace dualvol {

namespace {

// Any nonzero kernel vector of m (rows x cols), or empty when m has full
// column rank.
RatVec nullspace_vector(const RatMat& m, size_t cols) {
    RatMat a = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < a.size(); ++col) {
        size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rational d = a[row][col];
        for (auto& x : a[row]) x /= d;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() == cols) return {};
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RatVec n(cols, Rational(0));
    n[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) n[pivots[r]] = -a[r][free_col];
    return n;
}

}  // namespace

Polytope::Polytope(int d, std::vector<RatVec> points) : dim(d) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw DimensionError("polytope point of wrong dimension");
    if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const auto& p : points) {
        std::vector<RatVec> others;
        for (const auto& q : points)
            if (q != p) others.push_back(q);
        if (others.empty() || is_extreme_point(p, others)) vertices.push_back(p);
    }
}

Polytope segment(const RatVec& a, const RatVec& b) {
    return Polytope(static_cast<int>(a.size()), {a, b});
}

Polytope point_polytope(const RatVec& p) {
    return Polytope(static_cast<int>(p.size()), {p});
}

Polytope translate(const Polytope& p, const RatVec& t) {
    Polytope q;
    q.dim = p.dim;
    for (const auto& v : p.vertices) q.vertices.push_back(add(v, t));
    std::sort(q.vertices.begin(), q.vertices.end());
    return q;
}

Polytope dilate(const Polytope& p, const Rational& c) {
    if (c == 0) throw std::invalid_argument("dilate by zero");
    Polytope q;
    q.dim = p.dim;
    for (const auto& v : p.vertices) q.vertices.push_back(scale(v, c));
    std::sort(q.vertices.begin(), q.vertices.end());
    return q;
}

Rational support_value(const Polytope& p, const RatVec& v) {
    if (static_cast<int>(v.size()) != p.dim) throw DimensionError("support_value: dim mismatch");
    Rational best = -dot(v, p.vertices[0]);
    for (size_t i = 1; i < p.vertices.size(); ++i)
        best = std::max(best, -dot(v, p.vertices[i]));
    return best;
}

int affine_dim(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    if (diffs.empty()) return 0;
    return rank(diffs);
}

std::vector<Facet> facet_structure(const std::vector<RatVec>& points, int d) {
    if (affine_dim(points) != d)
        throw NotFullDimensional("facet enumeration requires a full-dimensional hull");
    const size_t n = points.size();
    std::set<std::pair<RatVec, Rational>> seen;
    std::vector<Facet> out;

    // iterate over d-subsets of the points
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = d - 1;
        while (i >= 0 && comb[i] == static_cast<int>(n) - d + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (static_cast<int>(n) < d) return out;
    do {
        RatMat m;
        for (int i = 1; i < d; ++i) m.push_back(sub(points[comb[i]], points[comb[0]]));
        RatVec normal;
        if (d == 1) {
            normal = RatVec{Rational(1)};
        } else {
            normal = nullspace_vector(m, d);
            if (normal.empty()) continue;           // subset not affinely independent enough
            if (rank(m) != d - 1) continue;         // degenerate subset
        }
        normal = primitive(normal);
        Rational level = dot(normal, points[comb[0]]);
        bool above = false, below = false;
        for (const auto& p : points) {
            Rational v = dot(normal, p);
            if (v > level) above = true;
            if (v < level) below = true;
            if (above && below) break;
        }
        if (above && below) continue;
        if (below) {
            for (auto& x : normal) x = -x;
            level = -level;
        }
        auto key = std::make_pair(normal, level);
        if (seen.count(key)) continue;
        seen.insert(key);
        Facet f;
        f.normal = normal;
        f.offset = -level;  // h_P(normal)
        for (size_t i = 0; i < n; ++i)
            if (dot(normal, points[i]) == level) f.tight.push_back(static_cast<int>(i));
        if (affine_dim([&] {
                std::vector<RatVec> tp;
                for (int i : f.tight) tp.push_back(points[i]);
                return tp;
            }()) == d - 1)
            out.push_back(std::move(f));
    } while (next_comb());
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return std::make_pair(a.normal, a.offset) < std::make_pair(b.normal, b.offset);
    });
    return out;
}

std::vector<Facet> facets(const Polytope& p) { return facet_structure(p.vertices, p.dim); }

void validate_fan(const Fan& f) {
    if (f.pure_dim > f.dim) throw std::invalid_argument("fan pure_dim exceeds ambient dim");
    std::set<RatVec> seen;
    for (const auto& r : f.rays) {
        if (static_cast<int>(r.size()) != f.dim) throw DimensionError("fan ray of wrong dimension");
        if (is_zero(r)) throw std::invalid_argument("fan ray is zero");
        RatVec pr = primitive(r);
        if (seen.count(pr)) throw std::invalid_argument("fan has positively parallel rays");
        seen.insert(pr);
    }
    for (const auto& cone : f.cones) {
        RatMat gens;
        for (int i : cone) {
            if (i < 0 || i >= static_cast<int>(f.rays.size()))
                throw std::invalid_argument("fan cone index out of range");
            gens.push_back(f.rays[i]);
        }
        if (rank(gens) != f.pure_dim)
            throw std::invalid_argument("fan cone does not span pure_dim");
        if (in_convex_hull(RatVec(f.dim, Rational(0)), gens))
            throw NotPointed("fan cone is not pointed");
    }
}

Fan normal_fan(const Polytope& p) {
    auto fs = facets(p);
    Fan fan;
    fan.dim = p.dim;
    fan.pure_dim = p.dim;
    for (const auto& f : fs) fan.rays.push_back(f.normal);
    fan.cones.resize(p.vertices.size());
    for (size_t fi = 0; fi < fs.size(); ++fi)
        for (int vi : fs[fi].tight) fan.cones[vi].push_back(static_cast<int>(fi));
    return fan;
}

Polytope minkowski_sum(const std::vector<Polytope>& ps, const std::vector<Rational>& weights) {
    if (ps.empty()) throw std::invalid_argument("minkowski_sum of empty sequence");
    if (weights.size() != ps.size()) throw std::invalid_argument("weight count mismatch");
    int d = ps[0].dim;
    for (const auto& p : ps)
        if (p.dim != d) throw DimensionError("minkowski_sum: ambient dimensions differ");
    for (const auto& w : weights)
        if (w <= 0) throw std::invalid_argument("minkowski_sum weights must be positive");
    std::set<RatVec> sums;
    std::vector<size_t> odo(ps.size(), 0);
    for (;;) {
        RatVec s(d, Rational(0));
        for (size_t i = 0; i < ps.size(); ++i)
            s = add(s, scale(ps[i].vertices[odo[i]], weights[i]));
        sums.insert(s);
        size_t k = 0;
        while (k < ps.size() && ++odo[k] == ps[k].vertices.size()) odo[k++] = 0;
        if (k == ps.size()) break;
    }
    return Polytope(d, std::vector<RatVec>(sums.begin(), sums.end()));
}

namespace {

struct LinearChart {
    std::vector<RatVec> basis;  // independent vectors spanning the subspace
    RatVec to_chart(const RatVec& y) const {
        RatMat A(y.size(), RatVec(basis.size()));
        for (size_t r = 0; r < y.size(); ++r)
            for (size_t c = 0; c < basis.size(); ++c) A[r][c] = basis[c][r];
        auto res = solve_linear(A, y);
        if (res.status != SolveResult::Status::Unique)
            throw std::invalid_argument("point outside chart span");
        return res.x;
    }
};

LinearChart linear_span_chart(const std::vector<RatVec>& vecs) {
    LinearChart ch;
    RatMat acc;
    int r = 0;
    for (const auto& v : vecs) {
        acc.push_back(v);
        if (rank(acc) > r) {
            ++r;
            ch.basis.push_back(v);
        } else {
            acc.pop_back();
        }
    }
    return ch;
}

}  // namespace

std::vector<std::vector<int>> triangulate_cone(const std::vector<int>& cone,
                                               const std::vector<RatVec>& rays, int k) {
    if (static_cast<int>(cone.size()) == k) return {cone};
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    int v0 = sorted[0];

    std::vector<RatVec> gens;
    for (int i : sorted) gens.push_back(rays[i]);
    LinearChart ch = linear_span_chart(gens);
    if (static_cast<int>(ch.basis.size()) != k)
        throw std::invalid_argument("cone does not span the stated dimension");
    std::vector<RatVec> charted;
    for (const auto& g : gens) charted.push_back(ch.to_chart(g));

    // facets of the full-dimensional charted cone (hyperplanes through 0)
    std::set<std::vector<int>> facet_sets;
    const size_t n = charted.size();
    std::vector<int> comb(k - 1);
    for (int i = 0; i < k - 1; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = k - 2;
        while (i >= 0 && comb[i] == static_cast<int>(n) - (k - 1) + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (k >= 2) {
        do {
            RatMat m;
            for (int i : comb) m.push_back(charted[i]);
            if (rank(m) != k - 1) continue;
            RatVec normal = nullspace_vector(m, k);
            if (normal.empty()) continue;
            bool above = false, below = false;
            for (const auto& g : charted) {
                Rational v = dot(normal, g);
                if (v > 0) above = true;
                if (v < 0) below = true;
                if (above && below) break;
            }
            if (above && below) continue;
            std::vector<int> tight;
            for (size_t i = 0; i < n; ++i)
                if (dot(normal, charted[i]) == 0) tight.push_back(sorted[i]);
            RatMat tm;
            for (int i : tight) tm.push_back(rays[i]);
            if (rank(tm) != k - 1) continue;
            facet_sets.insert(tight);
        } while (next_comb());
    }

    std::vector<std::vector<int>> out;
    for (const auto& fset : facet_sets) {
        if (std::find(fset.begin(), fset.end(), v0) != fset.end()) continue;
        for (auto& sub : triangulate_cone(fset, rays, k - 1)) {
            sub.push_back(v0);
            std::sort(sub.begin(), sub.end());
            out.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Fan triangulate_fan(const Fan& f) {
    Fan out;
    out.dim = f.dim;
    out.pure_dim = f.pure_dim;
    out.rays = f.rays;
    for (const auto& cone : f.cones) {
        RatMat gens;
        for (int i : cone) gens.push_back(f.rays[i]);
        if (in_convex_hull(RatVec(f.dim, Rational(0)), gens))
            throw NotPointed("triangulate_fan: cone contains a line");
        for (auto& s : triangulate_cone(cone, f.rays, f.pure_dim)) out.cones.push_back(std::move(s));
    }
    std::sort(out.cones.begin(), out.cones.end());
    out.cones.erase(std::unique(out.cones.begin(), out.cones.end()), out.cones.end());
    return out;
}

namespace {

// Pulling triangulation of a point set spanning affine dimension k; indices
// returned are into `points`.
std::vector<std::vector<int>> triangulate_points(const std::vector<RatVec>& points, int k) {
    const size_t n = points.size();
    if (static_cast<int>(n) == k + 1) {
        std::vector<int> all(n);
        for (size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
        return {all};
    }
    AffineChart ch = affine_hull_chart(points);
    std::vector<RatVec> charted;
    for (const auto& p : points) charted.push_back(ch.to_chart(p));
    auto fs = facet_structure(charted, k);
    int v0 = 0;  // points are kept sorted by callers; pull at the first
    std::vector<std::vector<int>> out;
    for (const auto& f : fs) {
        if (std::find(f.tight.begin(), f.tight.end(), v0) != f.tight.end()) continue;
        std::vector<RatVec> sub;
        for (int i : f.tight) sub.push_back(points[i]);
        for (auto& s : triangulate_points(sub, k - 1)) {
            std::vector<int> simplex;
            for (int si : s) simplex.push_back(f.tight[si]);
            simplex.push_back(v0);
            std::sort(simplex.begin(), simplex.end());
            out.push_back(std::move(simplex));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> triangulate_polytope(const Polytope& p) {
    int k = affine_dim(p.vertices);
    return triangulate_points(p.vertices, k);
}

Rational normalized_volume(const Polytope& p) {
    if (affine_dim(p.vertices) < p.dim) return 0;
    Rational total = 0;
    for (const auto& s : triangulate_polytope(p)) {
        RatMat m;
        for (size_t i = 1; i < s.size(); ++i)
            m.push_back(sub(p.vertices[s[i]], p.vertices[s[0]]));
        total += Rational(abs(det(m)));
    }
    return total;
}

Polytope polar_dual(const Polytope& p) {
    auto fs = facets(p);
    std::vector<RatVec> verts;
    for (const auto& f : fs) {
        if (f.offset <= 0)
            throw OriginNotInterior("polar dual needs 0 strictly inside the polytope");
        verts.push_back(scale(f.normal, Rational(1) / f.offset));
    }
    return Polytope(p.dim, verts);
}

ConeGens cone_over(const Polytope& p) {
    ConeGens c;
    c.dim = p.dim + 1;
    for (const auto& v : p.vertices) {
        RatVec g;
        g.push_back(1);
        g.insert(g.end(), v.begin(), v.end());
        c.generators.push_back(std::move(g));
    }
    return c;
}

std::vector<RatVec> cone_facet_normals(const ConeGens& c) {
    RatMat gm;
    for (const auto& g : c.generators) gm.push_back(g);
    if (rank(gm) != c.dim)
        throw NotFullDimensional("cone facet enumeration requires a full-dimensional cone");
    const int d = c.dim;
    const size_t n = c.generators.size();
    std::set<RatVec> out;
    std::vector<int> comb(d - 1);
    for (int i = 0; i < d - 1; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = d - 2;
        while (i >= 0 && comb[i] == static_cast<int>(n) - (d - 1) + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (static_cast<int>(n) < d - 1) return {};
    do {
        RatMat m;
        for (int i : comb) m.push_back(c.generators[i]);
        if (rank(m) != d - 1) continue;
        RatVec normal = nullspace_vector(m, d);
        if (normal.empty()) continue;
        bool above = false, below = false;
        for (const auto& g : c.generators) {
            Rational v = dot(normal, g);
            if (v > 0) above = true;
            if (v < 0) below = true;
            if (above && below) break;
        }
        if (above && below) continue;
        if (below)
            for (auto& x : normal) x = -x;
        out.insert(primitive(normal));
    } while (next_comb());
    return std::vector<RatVec>(out.begin(), out.end());
}

ConeGens dual_cone(const ConeGens& c) {
    ConeGens d;
    d.dim = c.dim;
    d.generators = cone_facet_normals(c);
    return d;
}

bool cone_is_pointed(const ConeGens& c) {
    RatMat gens;
    for (const auto& g : c.generators) gens.push_back(g);
    return !in_convex_hull(RatVec(c.dim, Rational(0)), gens);
}

RatVec AffineChart::to_chart(const RatVec& y) const {
    RatMat A(origin.size(), RatVec(basis.size()));
    for (size_t r = 0; r < origin.size(); ++r)
        for (size_t c = 0; c < basis.size(); ++c) A[r][c] = basis[c][r];
    auto res = solve_linear(A, sub(y, origin));
    if (res.status != SolveResult::Status::Unique)
        throw std::invalid_argument("point outside affine hull chart");
    return res.x;
}

RatVec AffineChart::from_chart(const RatVec& c) const {
    RatVec y = origin;
    for (size_t j = 0; j < basis.size(); ++j) y = add(y, scale(basis[j], c[j]));
    return y;
}

AffineChart affine_hull_chart(const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("chart of empty point set");
    AffineChart ch;
    ch.origin = points[0];
    RatMat acc;
    int r = 0;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d = sub(points[i], points[0]);
        acc.push_back(d);
        if (rank(acc) > r) {
            ++r;
            ch.basis.push_back(d);
        } else {
            acc.pop_back();
        }
    }
    return ch;
}

std::vector<std::vector<int>> regular_subdivision(const std::vector<RatVec>& points,
                                                  const std::vector<Rational>& heights) {
    if (points.size() != heights.size())
        throw std::invalid_argument("regular_subdivision: one height per point");
    const int D = static_cast<int>(points[0].size());
    if (affine_dim(points) != D)
        throw NotFullDimensional("regular_subdivision requires full-dimensional points");
    std::vector<RatVec> lifted;
    for (size_t i = 0; i < points.size(); ++i) {
        RatVec p = points[i];
        p.push_back(heights[i]);
        lifted.push_back(std::move(p));
    }
    if (affine_dim(lifted) < D + 1) {
        // heights are an affine function of position: trivial subdivision
        std::vector<int> all(points.size());
        for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
        return {all};
    }
    std::vector<std::vector<int>> cells;
    for (const auto& f : facet_structure(lifted, D + 1))
        if (f.normal.back() > 0) cells.push_back(f.tight);
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace dualvol
