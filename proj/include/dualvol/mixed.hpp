// Dual mixed volumes of Minkowski sequences: regularity, m(x) and m(x,z),
// fine mixed cells, mixed subdivision validation and additivity, the Cayley
// embedding, and lifting-based generation of fine mixed subdivisions.
#ifndef DUALVOL_MIXED_HPP
#define DUALVOL_MIXED_HPP

#include "dualvol/affine.hpp"

namespace dualvol {

struct NotRegular : std::runtime_error {
    RatVec ray;
    NotRegular(const std::string& msg, RatVec r) : std::runtime_error(msg), ray(std::move(r)) {}
};
struct NonGenericLifting : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidCell : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MinkowskiSequence {
    int dim = 0;
    std::vector<Polytope> parts;

    MinkowskiSequence() = default;
    MinkowskiSequence(int d, std::vector<Polytope> ps);
    int r() const { return static_cast<int>(parts.size()); }
};

// One vertex-index subset per part, indexing into the part's sorted vertices.
struct MixedCell {
    std::vector<std::vector<int>> parts;
};

struct MixedSubdivision {
    std::vector<MixedCell> cells;
};

// Geometric realization of a cell: each part restricted to the chosen
// vertices.  Throws InvalidCell on bad references.
MinkowskiSequence cell_geometry(const MinkowskiSequence& seq, const MixedCell& cell);

// True iff every ray of the common refinement fan has a nonzero support
// value on some part.
bool is_regular(const MinkowskiSequence& seq);

// m(x): rational function in x1..xr; formal zero when the sum is
// lower-dimensional; NotRegular otherwise when denominators vanish.
RationalFunction dual_mixed_volume(const MinkowskiSequence& seq);

// True iff the weighted support values are strictly positive on every common
// fan ray, i.e. the formal sum has the origin strictly inside and m(x)
// computes the polar volume there.
bool weights_in_polar_domain_interior(const MinkowskiSequence& seq,
                                      const std::vector<Rational>& x);

// m(x,z) over (x1..xr, z1..zd); always well-defined for full-dimensional
// sums, formal zero otherwise.
RationalFunction dual_mixed_volume_z(const MinkowskiSequence& seq);

struct FineCellData {
    std::vector<int> dims;                  // d_i
    std::vector<std::vector<RatVec>> rays;  // v_{i,a} for a = 1..d_i+1; empty for point parts
    Rational kappa;
};

// Rays of a fine mixed cell: v_{i,a} is constant on every other part and has
// max - min = 1 on part i.  Throws SingularCellGeometry off the definition.
FineCellData fine_cell_rays(const MinkowskiSequence& cell);

// Single-ratio dual mixed volume function of a fine mixed cell, in (x, z).
RationalFunction fine_cell_dmv(const MinkowskiSequence& cell);

// Checks the exact-volume cover and pairwise proper intersection on the
// Cayley side.
bool validate_mixed_subdivision(const MinkowskiSequence& seq, const MixedSubdivision& sub);

// rf_equal( m(x,z), sum of the cells' m(x,z) ).
bool verify_subdivision_additivity(const MinkowskiSequence& seq, const MixedSubdivision& sub);

// Convex hull of the parts placed at standard-basis heights in R^{d+r}.
Polytope cayley_polytope(const MinkowskiSequence& seq);

// Identity between m(x,z) and the hyperplane dual volume of the
// dilated Cayley polytope, with normal (0,...,0,1,...,1).
bool verify_cayley_identity(const MinkowskiSequence& seq);

// Proper intersection of two full-dimensional polytopes given by vertex
// lists: empty, or a common face of both.
bool polytopes_intersect_properly(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                  int dim);

// Regular fine mixed subdivision from lifting heights on the Cayley vertices
// (ordered part by part, each part's vertices in sorted order).  Throws
// NonGenericLifting when the lift is not fine.
MixedSubdivision generate_fine_subdivision(const MinkowskiSequence& seq,
                                           const std::vector<Rational>& heights);

// Seeded variant: pseudorandom integer heights in [1, 10^4], re-randomized
// until the subdivision is fine (bounded retries).
MixedSubdivision generate_fine_subdivision(const MinkowskiSequence& seq, uint64_t seed);

bool subdivision_is_fine(const MinkowskiSequence& seq, const MixedSubdivision& sub);

}  // namespace dualvol

#endif
