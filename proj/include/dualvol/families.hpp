// Special families: zonotopes with deletion-contraction, sign-vector
// tilings, generalized permutohedra, associahedra, plane binary and planar
// cubic trees, and the planar phi^3 amplitude.
#ifndef DUALVOL_FAMILIES_HPP
#define DUALVOL_FAMILIES_HPP

#include "dualvol/mixed.hpp"

namespace dualvol {

struct InvalidTiling : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSpanningTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ----- zonotopes -------------------------------------------------------------

struct Zonotope {
    int dim = 0;
    std::vector<RatVec> generators;  // segments [-p_i, p_i]

    Zonotope(int d, std::vector<RatVec> gens);
    int zones() const { return static_cast<int>(generators.size()); }
};

MinkowskiSequence zonotope_sequence(const Zonotope& z);
RationalFunction zonotope_dmv(const Zonotope& z);  // m(x)

struct DeletionContraction {
    RationalFunction w_plus;   // in z; fan cones on <v, dir> >= 0
    RationalFunction w_minus;  // fan cones on <v, dir> <= 0
};

DeletionContraction deletion_contraction_split(const Polytope& p, const RatVec& dir);

// Vol_z(P + x [-dir, dir]) in the variables (x1, z1..zd).
RationalFunction dilation_volume_function(const Polytope& p, const RatVec& dir);

// Symbolic limit of t * W_side(z0 + t dir) as t grows; a rational function
// of z0 whose denominators pair only with the dir-orthogonal part.
RationalFunction contraction_limit(const Polytope& p, const RatVec& dir, bool plus_side);

struct ProjectedPolytope {
    Polytope chart_polytope;     // P/dir in coordinates of a basis of dir-perp
    std::vector<RatVec> basis;   // the chosen basis vectors in R^d
    Rational det_basis_dir;      // |det(basis..., dir)|
};

ProjectedPolytope project_along(const Polytope& p, const RatVec& dir);

// entries in {-1, 0, +1}; the zero set indexes a parallelotope cell
struct SignVector {
    std::vector<int> entries;
};

// Sum of the cells' m(x) over a zonotopal tiling given by sign vectors;
// validates the cells as a mixed subdivision.
RationalFunction tiling_dmv(const Zonotope& z, const std::vector<SignVector>& tiling);

// ----- generalized permutohedra ----------------------------------------------

// Nonempty subsets of [n] ordered by (size, lexicographic); [n] comes last.
std::vector<std::vector<int>> nonempty_subsets(int n);

// x_T variables for proper nonempty T, in subset order.
VarTablePtr genperm_vars(int n);

// The S_n closed form for the hyperplane dual mixed volume on <x,1> = 0,
// with x_[n] substituted away.
RationalFunction genperm_dmv_closed_form(int n);

// Simplices (Delta_T)_T as a Minkowski sequence in R^n.
MinkowskiSequence genperm_sequence(int n);

// A fine mixed cell of the generalized permutohedron given by J_i subseteq
// T_i with G_J a spanning tree; the product formula on the slice.
RationalFunction genperm_cell_dmv(int n, const std::vector<std::vector<int>>& J);

MixedCell genperm_cell(int n, const std::vector<std::vector<int>>& J);

struct GenpermIdentities {
    bool additivity;       // closed form equals the sum of cell products
    bool alpha_identity;   // the exact numeric specialization identity
    Rational lhs;          // n! / ((2^1-1) ... (2^{n-1}-1))
    Rational rhs;
};

GenpermIdentities verify_genperm_identities(int n,
                                            const std::vector<std::vector<std::vector<int>>>& Js);

// ----- Catalan objects and the associahedron ----------------------------------

// Nodes labeled 1..n in the unique order with left descendants smaller and
// right descendants larger; 0 marks a missing child.
struct PlaneBinaryTree {
    int n = 0;
    int root = 0;
    std::vector<int> left, right;  // 1-based, size n+1

    std::pair<int, int> descendant_interval(int node) const;
};

std::vector<PlaneBinaryTree> enumerate_plane_binary_trees(int n);

// Planar cubic tree with `leaves` boundary vertices (degree 1, labeled
// 1..leaves counterclockwise) and leaves-2 interior vertices (degree 3).
struct PlanarCubicTree {
    int leaves = 0;
    std::vector<std::vector<int>> adj;  // 0..leaves-1 boundary, then interior

    bool is_valid() const;
    // boundary labels of the component of `side` after removing edge (a, b)
    std::vector<int> leaf_split(int a, int b, int side) const;
};

PlanarCubicTree pb_to_pc(const PlaneBinaryTree& b);

VarTablePtr assoc_vars(int n);  // x_i_j for 1 <= i <= j <= n
RationalFunction associahedron_dmv(int n);

// Parts (Delta_[i,j]) of the Loday realization, in interval order matching
// assoc_vars.
MinkowskiSequence associahedron_sequence(int n);

// ----- Mandelstam variables and the phi^3 amplitude ---------------------------

// Independent coordinates: s_ij for 1 <= i < j <= n-1 except (n-2, n-1);
// s_in is eliminated by the row relations and s_{n-2,n-1} by the residual one.
struct MandelstamTable {
    int n = 0;
    VarTablePtr vars;

    explicit MandelstamTable(int n);
    LinearForm reduce(int i, int j) const;
    // X for the cyclic split whose short side is the leaf interval [a, b]
    LinearForm interval_form(int a, int b) const;
};

RationalFunction phi3_amplitude(int n);
RationalFunction phi3_amplitude(const MandelstamTable& table);

// sign relating the amplitude at n+2 to the associahedron form at n
Rational amplitude_assoc_sign(int n);

}  // namespace dualvol

#endif
