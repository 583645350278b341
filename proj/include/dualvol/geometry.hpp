// Exact polytope geometry on vertex representations: support functions,
// facet and normal-fan computation, Minkowski sums, cones and dual cones,
// triangulations, normalized volume, polar duals.
#ifndef DUALVOL_GEOMETRY_HPP
#define DUALVOL_GEOMETRY_HPP

#include <variant>

#include "dualvol/symfun.hpp"

namespace dualvol {

struct NotFullDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPointed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OriginNotInterior : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex-listed polytope.  Construction filters to extreme points, removes
// duplicates, and sorts lexicographically.
struct Polytope {
    int dim = 0;
    std::vector<RatVec> vertices;

    Polytope() = default;
    Polytope(int d, std::vector<RatVec> points);

    bool operator==(const Polytope& o) const {
        return dim == o.dim && vertices == o.vertices;
    }
};

Polytope segment(const RatVec& a, const RatVec& b);
Polytope point_polytope(const RatVec& p);
Polytope translate(const Polytope& p, const RatVec& t);
Polytope dilate(const Polytope& p, const Rational& c);

// h_P(v) = -min_{y in P} <v, y>
Rational support_value(const Polytope& p, const RatVec& v);

int affine_dim(const std::vector<RatVec>& points);

struct Facet {
    RatVec normal;    // primitive integers; <normal, y> >= -offset on P
    Rational offset;  // equals h_P(normal)
    std::vector<int> tight;  // indices of points on the facet
};

// Facets of the convex hull of arbitrary points (need not be extreme).
// Requires the hull to be full-dimensional in R^d.
std::vector<Facet> facet_structure(const std::vector<RatVec>& points, int d);

std::vector<Facet> facets(const Polytope& p);

struct Fan {
    int dim = 0;
    std::vector<RatVec> rays;                // primitive generators
    std::vector<std::vector<int>> cones;     // maximal cones as ray-index sets
    int pure_dim = 0;
};

// Basic ingest checks: index ranges, nonzero pairwise-distinct primitive
// rays, cone ranks equal to pure_dim, pointedness of maximal cones.
void validate_fan(const Fan& f);

Fan normal_fan(const Polytope& p);

Polytope minkowski_sum(const std::vector<Polytope>& ps, const std::vector<Rational>& weights);

// Pulling triangulation of each maximal cone using only its own rays.
Fan triangulate_fan(const Fan& f);

// Triangulates one cone (given by ray indices into `rays`, spanning a cone of
// dimension k) into simplicial subcones, pulling at the lowest ray index.
std::vector<std::vector<int>> triangulate_cone(const std::vector<int>& cone,
                                               const std::vector<RatVec>& rays, int k);

// d! times the Euclidean volume; 0 for lower-dimensional input.
Rational normalized_volume(const Polytope& p);

// Triangulation of the polytope itself into d-simplices on its vertices.
std::vector<std::vector<int>> triangulate_polytope(const Polytope& p);

Polytope polar_dual(const Polytope& p);

struct ConeGens {
    int dim = 0;
    std::vector<RatVec> generators;
};

// Cone over P: generated by (1, y) for vertices y, in dimension d+1.
ConeGens cone_over(const Polytope& p);

// Inward facet normals of a full-dimensional cone given by generators.
std::vector<RatVec> cone_facet_normals(const ConeGens& c);

// Dual cone of a full-dimensional pointed cone; generators are the facet
// normals of the input (hence extreme rays of the dual).
ConeGens dual_cone(const ConeGens& c);

bool cone_is_pointed(const ConeGens& c);

// Per-ray support values attached to a fan; numeric or symbolic.
struct SupportData {
    Fan fan;
    std::variant<std::vector<Rational>, std::vector<LinearForm>> values;
    VarTablePtr vars;  // set in the symbolic case
};

// Chart of the affine hull of a point set: y = origin + basis * c.
struct AffineChart {
    RatVec origin;
    std::vector<RatVec> basis;  // independent direction vectors
    RatVec to_chart(const RatVec& y) const;    // throws off the hull
    RatVec from_chart(const RatVec& c) const;
    int dim() const { return static_cast<int>(basis.size()); }
};

AffineChart affine_hull_chart(const std::vector<RatVec>& points);

// Regular subdivision of a point set from lifting heights: cells are the
// tight sets of lower facets of the lifted hull.  Points whose lift is not
// on the lower hull appear in no cell only if the lifting is non-generic.
std::vector<std::vector<int>> regular_subdivision(const std::vector<RatVec>& points,
                                                  const std::vector<Rational>& heights);

}  // namespace dualvol

#endif
