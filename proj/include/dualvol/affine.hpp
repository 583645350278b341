// Dual volume machinery for polytopes living in an affine hyperplane
// <u, y> = k: the boundary fan of the dual cone, the hyperplane dual volume
// and dual mixed volume, and affine fine mixed cells.
#ifndef DUALVOL_AFFINE_HPP
#define DUALVOL_AFFINE_HPP

#include "dualvol/dual_volume.hpp"

namespace dualvol {

struct NotFullDimensionalInHyperplane : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularCellGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AffinePolytope {
    Polytope base;   // in R^d
    Rational level;  // all vertices satisfy <y, 1> = level, level != 0

    AffinePolytope(Polytope b, Rational k);
};

// Boundary fan of the dual cone of cone(points) for a point set spanning the
// hyperplane <u, y> = k with k != 0.  Rays are the facet normals of the cone
// over the points; one maximal boundary cone per extreme point, made of the
// dual rays vanishing on it.  pure_dim is d-1.
Fan boundary_dual_fan(const std::vector<RatVec>& points, const RatVec& u);

// Sum over a triangulation of the boundary fan of |det(rays..., u)| divided
// by the product of the per-ray value forms.
RationalFunction evol_sum(const Fan& boundary, const RatVec& u, VarTablePtr vars,
                          const std::vector<LinearForm>& values);

Fan boundary_cone_rays(const AffinePolytope& p);

// Hyperplane dual volume function: values <v, z> on the boundary rays,
// determinants normalized with the all-ones vector.  Zero when P is not
// full-dimensional in its hyperplane.
RationalFunction hyperplane_dual_volume(const AffinePolytope& p);

// Hyperplane dual mixed volume of parts in H_1 whose sum is full-dimensional
// in H_r; a rational function in (x_1..x_r, z_1..z_d).
RationalFunction hyperplane_dual_mixed_volume(const std::vector<Polytope>& parts);

struct AffineFineCellData {
    std::vector<int> dims;
    std::vector<std::vector<RatVec>> rays;  // v_{i,a}; the 1/r * ones vector for point parts
    Rational kappa;
};

AffineFineCellData affine_fine_cell_rays(const std::vector<Polytope>& cell);

// Hyperplane dual volume function of a fine mixed cell in H_1.  With
// on_slice the numerators simplify to x_i (valid when <x,1> = <z,1>).
RationalFunction affine_fine_cell_dmv(const std::vector<Polytope>& cell, bool on_slice);

// Sum of the cells' functions against the whole, compared on the slice
// <x,1> = <z,1> by eliminating the last z variable.  The subdivision must
// already be validated (mixed module).
bool verify_affine_additivity(const std::vector<Polytope>& parts,
                              const std::vector<std::vector<Polytope>>& cells);

}  // namespace dualvol

#endif
