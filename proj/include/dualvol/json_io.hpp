// JSON (de)serialization for the file formats consumed and emitted by the
// command-line tool.
#ifndef DUALVOL_JSON_IO_HPP
#define DUALVOL_JSON_IO_HPP

#include <json.hpp>

#include "dualvol/families.hpp"

namespace dualvol {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vec_to_json(const RatVec& v);
RatVec vec_from_json(const json& j);

json linear_form_to_json(const LinearForm& f, const VariableTable& vars);
LinearForm linear_form_from_json(const json& j, const VariableTable& vars);

json polynomial_to_json(const SparsePolynomial& p);

// {"variables":[...],"terms":[{"coeff":..,"factors":[..],"num_factors":[..]}]}
// with an optional "normal" block carrying the single-fraction form.
json rational_function_to_json(const RationalFunction& f, bool with_normal = false);
RationalFunction rational_function_from_json(const json& j);

json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

// {"fan":Fan,"values":["p/q",...]}
SupportData support_data_from_json(const json& j);

json sequence_to_json(const MinkowskiSequence& s);
MinkowskiSequence sequence_from_json(const json& j);

json subdivision_to_json(const MixedSubdivision& s);
MixedSubdivision subdivision_from_json(const json& j);

AffinePolytope affine_polytope_from_json(const json& j);

}  // namespace dualvol

#endif
