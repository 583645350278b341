#include "dualvol/affine.hpp"

#include <algorithm>

namespace dualvol {

AffinePolytope::AffinePolytope(Polytope b, Rational k) : base(std::move(b)), level(std::move(k)) {
    if (level == 0) throw std::invalid_argument("hyperplane level must be nonzero");
    RatVec ones(base.dim, Rational(1));
    for (const auto& v : base.vertices)
        if (dot(ones, v) != level)
            throw std::invalid_argument("vertex off the stated hyperplane");
}

Fan boundary_dual_fan(const std::vector<RatVec>& points, const RatVec& u) {
    const int D = static_cast<int>(u.size());
    Rational k = dot(u, points[0]);
    if (k == 0) throw std::invalid_argument("hyperplane through the origin");
    for (const auto& p : points)
        if (dot(u, p) != k) throw std::invalid_argument("points not on a common hyperplane");

    // extreme points only: they are the extreme rays of the cone over P
    std::vector<RatVec> ext;
    for (const auto& p : points) {
        std::vector<RatVec> others;
        for (const auto& q : points)
            if (q != p) others.push_back(q);
        if (others.empty() || is_extreme_point(p, others)) ext.push_back(p);
    }

    ConeGens cone{D, ext};
    Fan fan;
    fan.dim = D;
    fan.pure_dim = D - 1;
    fan.rays = cone_facet_normals(cone);  // throws NotFullDimensional when degenerate
    for (const auto& p : ext) {
        std::vector<int> c;
        for (size_t i = 0; i < fan.rays.size(); ++i)
            if (dot(fan.rays[i], p) == 0) c.push_back(static_cast<int>(i));
        fan.cones.push_back(std::move(c));
    }
    return fan;
}

RationalFunction evol_sum(const Fan& boundary, const RatVec& u, VarTablePtr vars,
                          const std::vector<LinearForm>& values) {
    if (values.size() != boundary.rays.size())
        throw std::invalid_argument("one value form per boundary ray required");
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i].is_zero())
            throw ZeroSupportValue("value form vanishes identically on a ray", boundary.rays[i]);
    Fan t = triangulate_fan(boundary);
    RationalFunction out(vars);
    for (const auto& cone : t.cones) {
        RatMat m;
        for (int i : cone) m.push_back(t.rays[i]);
        m.push_back(u);
        std::vector<LinearForm> dens;
        for (int i : cone) dens.push_back(values[i]);
        out.add_term(Rational(abs(det(m))), {}, dens);
    }
    return out;
}

Fan boundary_cone_rays(const AffinePolytope& p) {
    if (affine_dim(p.base.vertices) < p.base.dim - 1)
        throw NotFullDimensionalInHyperplane(
            "polytope is not full-dimensional in its hyperplane");
    RatVec u(p.base.dim, Rational(1));
    return boundary_dual_fan(p.base.vertices, u);
}

RationalFunction hyperplane_dual_volume(const AffinePolytope& p) {
    const int d = p.base.dim;
    auto vars = z_vars(d);
    if (affine_dim(p.base.vertices) < d - 1) return RationalFunction::zero(vars);
    Fan fan = boundary_cone_rays(p);
    std::vector<LinearForm> values;
    for (const auto& v : fan.rays) values.emplace_back(Rational(0), v);
    RatVec u(d, Rational(1));
    return evol_sum(fan, u, vars, values);
}

namespace {

void check_parts_in_h1(const std::vector<Polytope>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty part sequence");
    const int d = parts[0].dim;
    RatVec ones(d, Rational(1));
    for (const auto& p : parts) {
        if (p.dim != d) throw DimensionError("parts in different ambient dimensions");
        for (const auto& v : p.vertices)
            if (dot(ones, v) != 1)
                throw std::invalid_argument("part vertex off the hyperplane <y,1>=1");
    }
}

LinearForm mixed_support_form(const std::vector<Polytope>& parts, const VarTablePtr& vars,
                              const RatVec& v, bool with_z) {
    const int d = parts[0].dim;
    const int r = static_cast<int>(parts.size());
    RatVec coeffs(vars->size(), Rational(0));
    for (int i = 0; i < r; ++i) coeffs[i] = support_value(parts[i], v);
    if (with_z)
        for (int j = 0; j < d; ++j) coeffs[r + j] = v[j];
    return LinearForm(Rational(0), std::move(coeffs));
}

}  // namespace

RationalFunction hyperplane_dual_mixed_volume(const std::vector<Polytope>& parts) {
    check_parts_in_h1(parts);
    const int d = parts[0].dim;
    const int r = static_cast<int>(parts.size());
    std::vector<Rational> ones_w(parts.size(), Rational(1));
    Polytope sum = minkowski_sum(parts, ones_w);
    if (affine_dim(sum.vertices) < d - 1)
        throw NotFullDimensionalInHyperplane("Minkowski sum not full-dimensional in H_r");
    RatVec u(d, Rational(1));
    Fan fan = boundary_dual_fan(sum.vertices, u);
    auto vars = xz_vars(r, d);
    std::vector<LinearForm> values;
    for (const auto& v : fan.rays) values.push_back(mixed_support_form(parts, vars, v, true));
    return evol_sum(fan, u, vars, values);
}

AffineFineCellData affine_fine_cell_rays(const std::vector<Polytope>& cell) {
    check_parts_in_h1(cell);
    const int d = cell[0].dim;
    const int r = static_cast<int>(cell.size());
    AffineFineCellData data;
    data.rays.resize(r);
    int total = 0;
    for (const auto& p : cell) {
        int di = affine_dim(p.vertices);
        if (static_cast<int>(p.vertices.size()) != di + 1)
            throw SingularCellGeometry("cell part is not a simplex");
        data.dims.push_back(di);
        total += di;
    }
    if (total != d - 1)
        throw SingularCellGeometry("cell dimensions do not sum to d-1");
    {
        std::vector<Rational> w(cell.size(), Rational(1));
        if (affine_dim(minkowski_sum(cell, w).vertices) != d - 1)
            throw SingularCellGeometry("cell sum is not full-dimensional in its hyperplane");
    }

    RatVec ones(d, Rational(1));
    for (int i = 0; i < r; ++i) {
        const int di = data.dims[i];
        if (di == 0) {
            data.rays[i] = {scale(ones, Rational(1, r))};
            continue;
        }
        const auto& V = cell[i].vertices;
        for (int a = 0; a <= di; ++a) {
            RatMat rows;
            RatVec rhs;
            for (int j = 0; j < r; ++j) {
                if (j == i) continue;
                const auto& W = cell[j].vertices;
                for (size_t b = 1; b < W.size(); ++b) {
                    rows.push_back(sub(W[b], W[0]));
                    rhs.push_back(0);
                }
            }
            int b0 = (a == 0) ? 1 : 0;
            for (int b = 0; b <= di; ++b) {
                if (b == a || b == b0) continue;
                rows.push_back(sub(V[b], V[b0]));
                rhs.push_back(0);
            }
            rows.push_back(sub(V[a], V[b0]));
            rhs.push_back(1);
            RatVec anchor = V[b0];
            for (int j = 0; j < r; ++j)
                if (j != i) anchor = add(anchor, cell[j].vertices[0]);
            rows.push_back(anchor);
            rhs.push_back(0);
            auto res = solve_linear(rows, rhs);
            if (res.status != SolveResult::Status::Unique)
                throw SingularCellGeometry("cell ray system is not uniquely solvable");
            data.rays[i].push_back(res.x);
        }
        RatVec s(d, Rational(0));
        for (const auto& v : data.rays[i]) s = add(s, v);
        if (s != scale(ones, Rational(1, r)))
            throw SingularCellGeometry("cell rays do not sum to (1/r) * ones");
    }

    RatMat m;
    for (int i = 0; i < r; ++i)
        for (int a = 0; a < data.dims[i]; ++a) m.push_back(data.rays[i][a]);
    m.push_back(ones);
    data.kappa = Rational(abs(det(m)));
    return data;
}

RationalFunction affine_fine_cell_dmv(const std::vector<Polytope>& cell, bool on_slice) {
    auto data = affine_fine_cell_rays(cell);
    const int d = cell[0].dim;
    const int r = static_cast<int>(cell.size());
    auto vars = xz_vars(r, d);
    std::vector<LinearForm> nums, dens;
    for (int i = 0; i < r; ++i) {
        if (data.dims[i] == 0) continue;
        RatVec coeffs(vars->size(), Rational(0));
        coeffs[i] = 1;
        if (!on_slice) {
            // x_i - <x,1>/r + <z,1>/r
            for (int j = 0; j < r; ++j) coeffs[j] -= Rational(1, r);
            for (int j = 0; j < d; ++j) coeffs[r + j] += Rational(1, r);
        }
        nums.emplace_back(Rational(0), std::move(coeffs));
        for (const auto& v : data.rays[i]) dens.push_back(mixed_support_form(cell, vars, v, true));
    }
    RationalFunction out(vars);
    out.add_term(data.kappa, nums, dens);
    return out;
}

bool verify_affine_additivity(const std::vector<Polytope>& parts,
                              const std::vector<std::vector<Polytope>>& cells) {
    RationalFunction whole = hyperplane_dual_mixed_volume(parts);
    RationalFunction acc = RationalFunction::zero(whole.vars);
    for (const auto& cell : cells) acc = rf_add(acc, hyperplane_dual_mixed_volume(cell));

    // compare on the slice <x,1> = <z,1> by eliminating the last z variable
    const int d = parts[0].dim;
    const int r = static_cast<int>(parts.size());
    auto vars = whole.vars;
    RatVec coeffs(vars->size(), Rational(0));
    for (int i = 0; i < r; ++i) coeffs[i] = 1;
    for (int j = 0; j + 1 < d; ++j) coeffs[r + j] = -1;
    LinearForm last_z(Rational(0), std::move(coeffs));
    std::map<std::string, LinearForm> images;
    images["z" + std::to_string(d)] = last_z;
    return rf_equal(rf_substitute(whole, vars, images), rf_substitute(acc, vars, images));
}

}  // namespace dualvol
