// Exact rational scalars, small dense linear algebra, and an exact
// feasibility/optimization LP used by the geometric routines.
#ifndef DUALVOL_EXACT_HPP
#define DUALVOL_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualvol {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Vectors are dense rows of rationals; matrices are lists of equal-length rows.
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialization is "p/q" with the sign on the numerator, or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

Rational dot(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& c);
bool is_zero(const RatVec& a);

// Clears denominators and divides by the content; the result is an integer
// vector with gcd 1, pointing in the same direction.  Zero maps to zero.
RatVec primitive(const RatVec& v);

// Exact determinant by fraction-free-style Gaussian elimination.
Rational det(const RatMat& m);

// Rank of an arbitrary rectangular matrix.
int rank(const RatMat& m);

struct SolveResult {
    enum class Status { Unique, NoSolution, Underdetermined } status;
    RatVec x;  // populated only when status == Unique
};

// Solve a x = b exactly; a need not be square.
SolveResult solve_linear(const RatMat& a, const RatVec& b);

// ----- exact LP (primal simplex, Bland's rule) ------------------------------
//
// minimize c.x  subject to  A x = b, x >= 0.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational value;
    RatVec x;
};

LpResult lp_solve(const RatMat& A, const RatVec& b, const RatVec& c);

// True iff p lies in the convex hull of pts (exact feasibility LP).
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts);

// True iff p is not a convex combination of the others.
bool is_extreme_point(const RatVec& p, const std::vector<RatVec>& others);

}  // namespace dualvol

#endif
