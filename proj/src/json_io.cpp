#include "dualvol/json_io.hpp"

namespace dualvol {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(j.get<std::string>());
}

json vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

RatVec vec_from_json(const json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json linear_form_to_json(const LinearForm& f, const VariableTable& vars) {
    json coeffs = json::object();
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        if (f.coeffs[i] != 0) coeffs[vars.names[i]] = rational_to_json(f.coeffs[i]);
    return json{{"constant", rational_to_json(f.constant)}, {"coeffs", coeffs}};
}

LinearForm linear_form_from_json(const json& j, const VariableTable& vars) {
    LinearForm f = LinearForm::constant_form(vars.size(), rational_from_json(j.at("constant")));
    for (const auto& [name, val] : j.at("coeffs").items()) {
        int idx = vars.index(name);
        if (idx < 0) throw std::invalid_argument("unknown variable in linear form: " + name);
        f.coeffs[idx] = rational_from_json(val);
    }
    return f;
}

json polynomial_to_json(const SparsePolynomial& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms) {
        json mono = json::object();
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) mono[p.vars->names[i]] = m[i];
        out.push_back(json{{"coeff", rational_to_json(c)}, {"monomial", mono}});
    }
    return out;
}

json rational_function_to_json(const RationalFunction& f, bool with_normal) {
    json terms = json::array();
    for (const auto& t : f.terms) {
        json factors = json::array();
        for (const auto& d : t.den_factors) factors.push_back(linear_form_to_json(d, *f.vars));
        json term{{"coeff", rational_to_json(t.coeff)}, {"factors", factors}};
        if (!t.num_factors.empty()) {
            json nums = json::array();
            for (const auto& nf : t.num_factors) nums.push_back(linear_form_to_json(nf, *f.vars));
            term["num_factors"] = nums;
        }
        terms.push_back(std::move(term));
    }
    json out{{"variables", f.vars->names}, {"terms", terms}};
    if (with_normal) {
        NormalForm nf = rf_normalize(f);
        json den = json::array();
        for (const auto& [factor, mult] : nf.denominator)
            den.push_back(json{{"factor", linear_form_to_json(factor, *f.vars)}, {"mult", mult}});
        out["normal"] = json{{"numerator", polynomial_to_json(nf.numerator)},
                             {"denominator", den}};
    }
    return out;
}

RationalFunction rational_function_from_json(const json& j) {
    auto vars = make_vars(j.at("variables").get<std::vector<std::string>>());
    RationalFunction f(vars);
    for (const auto& t : j.at("terms")) {
        std::vector<LinearForm> nums, dens;
        for (const auto& d : t.at("factors")) dens.push_back(linear_form_from_json(d, *vars));
        if (t.contains("num_factors"))
            for (const auto& nf : t.at("num_factors"))
                nums.push_back(linear_form_from_json(nf, *vars));
        f.add_term(rational_from_json(t.at("coeff")), nums, dens);
    }
    return f;
}

json polytope_to_json(const Polytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(vec_to_json(v));
    return json{{"dim", p.dim}, {"vertices", verts}};
}

Polytope polytope_from_json(const json& j) {
    std::vector<RatVec> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
    return Polytope(j.at("dim").get<int>(), pts);
}

json fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const auto& r : f.rays) {
        json row = json::array();
        for (const auto& x : r) {
            if (denominator(x) != 1)
                throw std::invalid_argument("fan rays serialize as integers");
            row.push_back(numerator(x).str());
        }
        rays.push_back(std::move(row));
    }
    return json{{"dim", f.dim}, {"rays", rays}, {"cones", f.cones}, {"pure_dim", f.pure_dim}};
}

Fan fan_from_json(const json& j) {
    Fan f;
    f.dim = j.at("dim").get<int>();
    f.pure_dim = j.at("pure_dim").get<int>();
    for (const auto& r : j.at("rays")) {
        RatVec ray;
        for (const auto& x : r)
            ray.push_back(x.is_string() ? parse_rational(x.get<std::string>())
                                        : Rational(x.get<long long>()));
        f.rays.push_back(primitive(ray));
    }
    f.cones = j.at("cones").get<std::vector<std::vector<int>>>();
    validate_fan(f);
    return f;
}

SupportData support_data_from_json(const json& j) {
    SupportData s;
    s.fan = fan_from_json(j.at("fan"));
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(rational_from_json(v));
    s.values = std::move(values);
    return s;
}

json sequence_to_json(const MinkowskiSequence& s) {
    json parts = json::array();
    for (const auto& p : s.parts) parts.push_back(polytope_to_json(p));
    return json{{"dim", s.dim}, {"parts", parts}};
}

MinkowskiSequence sequence_from_json(const json& j) {
    std::vector<Polytope> parts;
    for (const auto& p : j.at("parts")) parts.push_back(polytope_from_json(p));
    return MinkowskiSequence(j.at("dim").get<int>(), std::move(parts));
}

json subdivision_to_json(const MixedSubdivision& s) {
    json cells = json::array();
    for (const auto& c : s.cells) cells.push_back(c.parts);
    return json{{"cells", cells}};
}

MixedSubdivision subdivision_from_json(const json& j) {
    MixedSubdivision s;
    for (const auto& c : j.at("cells")) {
        MixedCell cell;
        cell.parts = c.get<std::vector<std::vector<int>>>();
        s.cells.push_back(std::move(cell));
    }
    return s;
}

AffinePolytope affine_polytope_from_json(const json& j) {
    return AffinePolytope(polytope_from_json(j), rational_from_json(j.at("level")));
}

}  // namespace dualvol
