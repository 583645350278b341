// Dual volumes and dual volume functions of polytopes and ingested fans,
// adjoint polynomials, canonical forms, and a numeric integral cross-check.
#ifndef DUALVOL_DUAL_VOLUME_HPP
#define DUALVOL_DUAL_VOLUME_HPP

#include <optional>

#include "dualvol/geometry.hpp"

namespace dualvol {

struct Codegenerate : std::runtime_error {
    RatVec ray;
    Codegenerate(const std::string& msg, RatVec r) : std::runtime_error(msg), ray(std::move(r)) {}
};
struct ZeroSupportValue : std::runtime_error {
    RatVec ray;
    ZeroSupportValue(const std::string& msg, RatVec r)
        : std::runtime_error(msg), ray(std::move(r)) {}
};
struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Variable tables z1..zd, x1..xr, and the concatenation (x1..xr, z1..zd).
VarTablePtr z_vars(int d);
VarTablePtr x_vars(int r);
VarTablePtr xz_vars(int r, int d);

// Universal fan rational function: sum over a triangulation of
// |det(rays)| / prod(values).  Returns 0 when pure_dim < dim.
Rational f_fan_numeric(const Fan& fan, const std::vector<Rational>& values);
RationalFunction f_fan_symbolic(const Fan& fan, VarTablePtr vars,
                                const std::vector<LinearForm>& values);
std::variant<Rational, RationalFunction> f_fan(const SupportData& s);

struct DualVolumeResult {
    RationalFunction function;                  // in z1..zd
    std::optional<Rational> value_at_origin;    // empty marks a pole at z = 0
    SparsePolynomial numerator;                 // numerator over the literal factor product
    std::vector<LinearForm> denominator_factors;  // h_P(v_i) + <v_i, z>, one per ray
};

DualVolumeResult dual_volume_function(const Polytope& p);

Rational dual_volume(const Polytope& p);

// Adjoint polynomial of a pointed full-dimensional cone in R^{d+1}, in the
// variables z1..zd paired as (1, z) against the generators.  The generators
// must be the extreme rays of the cone and are used with the given scaling.
SparsePolynomial adjoint_polynomial(const ConeGens& c);

// Checks adj of the dual cone of the cone over p against the numerator of
// the dual volume function; the two sides are computed independently.
bool verify_adjoint_identity(const Polytope& p);

// Canonical form coefficient of the projective closure; same data as the
// dual volume function.
DualVolumeResult canonical_form(const Polytope& p);

// Numeric quadrature of the exponential integral against the exact value at
// the point z; dimensions 1 and 2 only.  z must make P - z non-codegenerate
// with positive ray values.
bool integral_check(const Polytope& p, const RatVec& z, double tolerance);

}  // namespace dualvol

#endif
