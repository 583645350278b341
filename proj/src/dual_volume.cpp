#include "dualvol/dual_volume.hpp"

#include <cmath>
#include <functional>

namespace dualvol {

VarTablePtr z_vars(int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("z" + std::to_string(i));
    return make_vars(std::move(names));
}

VarTablePtr x_vars(int r) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
    return make_vars(std::move(names));
}

VarTablePtr xz_vars(int r, int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= d; ++i) names.push_back("z" + std::to_string(i));
    return make_vars(std::move(names));
}

namespace {

Rational cone_det(const Fan& fan, const std::vector<int>& cone) {
    RatMat m;
    for (int i : cone) m.push_back(fan.rays[i]);
    return Rational(abs(det(m)));
}

}  // namespace

Rational f_fan_numeric(const Fan& fan, const std::vector<Rational>& values) {
    if (values.size() != fan.rays.size())
        throw std::invalid_argument("one support value per ray required");
    if (fan.pure_dim < fan.dim) return 0;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] == 0)
            throw ZeroSupportValue("support value vanishes on a ray", fan.rays[i]);
    Fan t = triangulate_fan(fan);
    Rational total = 0;
    for (const auto& cone : t.cones) {
        Rational term = cone_det(t, cone);
        for (int i : cone) term /= values[i];
        total += term;
    }
    return total;
}

RationalFunction f_fan_symbolic(const Fan& fan, VarTablePtr vars,
                                const std::vector<LinearForm>& values) {
    if (values.size() != fan.rays.size())
        throw std::invalid_argument("one support form per ray required");
    RationalFunction out(vars);
    if (fan.pure_dim < fan.dim) return out;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i].is_zero())
            throw ZeroSupportValue("support form vanishes identically on a ray", fan.rays[i]);
    Fan t = triangulate_fan(fan);
    for (const auto& cone : t.cones) {
        std::vector<LinearForm> dens;
        for (int i : cone) dens.push_back(values[i]);
        out.add_term(cone_det(t, cone), {}, dens);
    }
    return out;
}

std::variant<Rational, RationalFunction> f_fan(const SupportData& s) {
    validate_fan(s.fan);
    if (std::holds_alternative<std::vector<Rational>>(s.values))
        return f_fan_numeric(s.fan, std::get<std::vector<Rational>>(s.values));
    return f_fan_symbolic(s.fan, s.vars, std::get<std::vector<LinearForm>>(s.values));
}

DualVolumeResult dual_volume_function(const Polytope& p) {
    auto vars = z_vars(p.dim);
    DualVolumeResult out{RationalFunction::zero(vars), Rational(0),
                         SparsePolynomial(vars), {}};
    if (affine_dim(p.vertices) < p.dim) return out;  // lower-dimensional: zero

    Fan fan = normal_fan(p);
    std::vector<LinearForm> forms;
    bool pole_at_origin = false;
    for (const auto& v : fan.rays) {
        Rational h = support_value(p, v);
        if (h == 0) pole_at_origin = true;
        forms.emplace_back(h, v);
    }
    out.function = f_fan_symbolic(fan, vars, forms);
    out.denominator_factors = forms;

    // numerator over the literal product of the h-forms
    Fan t = triangulate_fan(fan);
    for (const auto& cone : t.cones) {
        SparsePolynomial part = SparsePolynomial::constant(vars, cone_det(t, cone));
        for (size_t i = 0; i < forms.size(); ++i)
            if (std::find(cone.begin(), cone.end(), static_cast<int>(i)) == cone.end())
                part = part.times_linear(forms[i]);
        out.numerator = out.numerator + part;
    }

    if (pole_at_origin)
        out.value_at_origin.reset();
    else
        out.value_at_origin = rf_eval(out.function, RatVec(p.dim, Rational(0)));
    return out;
}

Rational dual_volume(const Polytope& p) {
    if (affine_dim(p.vertices) < p.dim) return 0;
    Fan fan = normal_fan(p);
    std::vector<Rational> values;
    for (const auto& v : fan.rays) {
        Rational h = support_value(p, v);
        if (h == 0)
            throw Codegenerate("origin lies in a facet hyperplane", v);
        values.push_back(h);
    }
    return f_fan_numeric(fan, values);
}

SparsePolynomial adjoint_polynomial(const ConeGens& c) {
    RatMat gm;
    for (const auto& g : c.generators) gm.push_back(g);
    if (rank(gm) != c.dim)
        throw NotFullDimensional("adjoint needs a full-dimensional cone");
    if (!cone_is_pointed(c)) throw NotPointed("adjoint needs a pointed cone");
    const int d = c.dim - 1;
    auto vars = z_vars(d);

    std::vector<int> all(c.generators.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    auto tri = triangulate_cone(all, c.generators, c.dim);

    SparsePolynomial adj(vars);
    for (const auto& simplex : tri) {
        RatMat m;
        for (int i : simplex) m.push_back(c.generators[i]);
        SparsePolynomial part = SparsePolynomial::constant(vars, Rational(abs(det(m))));
        for (size_t i = 0; i < c.generators.size(); ++i) {
            if (std::find(simplex.begin(), simplex.end(), static_cast<int>(i)) != simplex.end())
                continue;
            const RatVec& w = c.generators[i];
            LinearForm pairing(w[0], RatVec(w.begin() + 1, w.end()));
            part = part.times_linear(pairing);
        }
        adj = adj + part;
    }
    return adj;
}

bool verify_adjoint_identity(const Polytope& p) {
    // left side: adjoint of the dual of the cone over p, with each dual ray
    // rescaled to (h_P(v), v) for the primitive normal-fan ray v
    ConeGens dual = dual_cone(cone_over(p));
    ConeGens scaled;
    scaled.dim = dual.dim;
    for (const auto& w : dual.generators) {
        RatVec v(w.begin() + 1, w.end());
        if (is_zero(v))
            throw std::runtime_error("dual cone ray orthogonal to the base: unbounded input?");
        v = primitive(v);
        RatVec g;
        g.push_back(support_value(p, v));
        g.insert(g.end(), v.begin(), v.end());
        scaled.generators.push_back(std::move(g));
    }
    SparsePolynomial adj = adjoint_polynomial(scaled);

    // right side: numerator of the dual volume function
    DualVolumeResult dv = dual_volume_function(p);
    return adj == dv.numerator;
}

DualVolumeResult canonical_form(const Polytope& p) { return dual_volume_function(p); }

namespace {

// adaptive Simpson on [a, b]
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
               double fm, double eps, int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, fm, flm, eps / 2, depth - 1) +
           simpson(f, m, b, fm, fb, frm, eps / 2, depth - 1);
}

// numeric integral of exp(-a t) over t in [0, inf), via t = u/(1-u)
double exp_ray_integral(double a, double eps) {
    auto g = [a](double u) {
        if (u >= 1.0) return 0.0;
        double t = u / (1 - u);
        double jac = 1.0 / ((1 - u) * (1 - u));
        return std::exp(-a * t) * jac;
    };
    double lo = 0, hi = 1 - 1e-12;
    return simpson(g, lo, hi, g(lo), g(hi), g((lo + hi) / 2), eps, 40);
}

}  // namespace

bool integral_check(const Polytope& p, const RatVec& z, double tolerance) {
    if (p.dim > 2) throw DimensionTooLarge("integral check supports dimensions 1 and 2");
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    Fan fan = normal_fan(p);
    Fan t = triangulate_fan(fan);
    std::vector<Rational> values;
    for (const auto& v : fan.rays) {
        Rational h = support_value(p, v) + dot(v, z);
        if (h <= 0)
            throw ZeroSupportValue("integral requires positive shifted support values", v);
        values.push_back(h);
    }
    double numeric = 0;
    for (const auto& cone : t.cones) {
        double term = cone_det(t, cone).convert_to<double>();
        for (int i : cone)
            term *= exp_ray_integral(values[i].convert_to<double>(), tolerance / 64);
        numeric += term;
    }
    Rational exact = f_fan_numeric(fan, values);
    return std::abs(numeric - exact.convert_to<double>()) <= tolerance;
}

}  // namespace dualvol
