#include "dualvol/mixed.hpp"

#include <algorithm>
#include <random>

namespace dualvol {

MinkowskiSequence::MinkowskiSequence(int d, std::vector<Polytope> ps)
    : dim(d), parts(std::move(ps)) {
    if (parts.empty()) throw std::invalid_argument("empty Minkowski sequence");
    for (const auto& p : parts)
        if (p.dim != d) throw DimensionError("sequence part in wrong ambient dimension");
}

MinkowskiSequence cell_geometry(const MinkowskiSequence& seq, const MixedCell& cell) {
    if (cell.parts.size() != seq.parts.size())
        throw InvalidCell("cell must list one vertex subset per part");
    std::vector<Polytope> parts;
    for (size_t i = 0; i < seq.parts.size(); ++i) {
        if (cell.parts[i].empty()) throw InvalidCell("cell part with no vertices");
        std::vector<RatVec> pts;
        for (int a : cell.parts[i]) {
            if (a < 0 || a >= static_cast<int>(seq.parts[i].vertices.size()))
                throw InvalidCell("cell vertex index out of range");
            pts.push_back(seq.parts[i].vertices[a]);
        }
        parts.emplace_back(seq.dim, pts);
    }
    return MinkowskiSequence(seq.dim, std::move(parts));
}

namespace {

Polytope unit_sum(const MinkowskiSequence& seq) {
    std::vector<Rational> w(seq.parts.size(), Rational(1));
    return minkowski_sum(seq.parts, w);
}

LinearForm mixed_form(const MinkowskiSequence& seq, const VarTablePtr& vars, const RatVec& v,
                      bool with_z) {
    RatVec coeffs(vars->size(), Rational(0));
    for (int i = 0; i < seq.r(); ++i) coeffs[i] = support_value(seq.parts[i], v);
    if (with_z)
        for (int j = 0; j < seq.dim; ++j) coeffs[seq.r() + j] = v[j];
    return LinearForm(Rational(0), std::move(coeffs));
}

}  // namespace

bool is_regular(const MinkowskiSequence& seq) {
    Polytope sum = unit_sum(seq);
    if (affine_dim(sum.vertices) < seq.dim)
        throw NotFullDimensional("regularity is defined for full-dimensional sums");
    Fan fan = normal_fan(sum);
    for (const auto& v : fan.rays) {
        bool nonzero = false;
        for (const auto& p : seq.parts)
            if (support_value(p, v) != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero) return false;
    }
    return true;
}

RationalFunction dual_mixed_volume(const MinkowskiSequence& seq) {
    auto vars = x_vars(seq.r());
    Polytope sum = unit_sum(seq);
    if (affine_dim(sum.vertices) < seq.dim) return RationalFunction::zero(vars);
    Fan fan = normal_fan(sum);
    std::vector<LinearForm> values;
    for (const auto& v : fan.rays) {
        LinearForm f = mixed_form(seq, vars, v, false);
        if (f.is_zero()) throw NotRegular("support form vanishes on a common-fan ray", v);
        values.push_back(std::move(f));
    }
    return f_fan_symbolic(fan, vars, values);
}

bool weights_in_polar_domain_interior(const MinkowskiSequence& seq,
                                      const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != seq.r())
        throw std::invalid_argument("one weight per part required");
    Polytope sum = unit_sum(seq);
    if (affine_dim(sum.vertices) < seq.dim)
        throw NotFullDimensional("membership test needs a full-dimensional sum");
    for (const auto& v : normal_fan(sum).rays) {
        Rational h = 0;
        for (int i = 0; i < seq.r(); ++i) h += x[i] * support_value(seq.parts[i], v);
        if (h <= 0) return false;
    }
    return true;
}

RationalFunction dual_mixed_volume_z(const MinkowskiSequence& seq) {
    auto vars = xz_vars(seq.r(), seq.dim);
    Polytope sum = unit_sum(seq);
    if (affine_dim(sum.vertices) < seq.dim) return RationalFunction::zero(vars);
    Fan fan = normal_fan(sum);
    std::vector<LinearForm> values;
    for (const auto& v : fan.rays) values.push_back(mixed_form(seq, vars, v, true));
    return f_fan_symbolic(fan, vars, values);
}

FineCellData fine_cell_rays(const MinkowskiSequence& cell) {
    const int d = cell.dim;
    FineCellData data;
    data.rays.resize(cell.r());
    int total = 0;
    for (const auto& p : cell.parts) {
        int di = affine_dim(p.vertices);
        if (static_cast<int>(p.vertices.size()) != di + 1)
            throw SingularCellGeometry("fine cell part is not a simplex");
        data.dims.push_back(di);
        total += di;
    }
    if (total != d) throw SingularCellGeometry("fine cell dimensions do not sum to d");
    if (affine_dim(unit_sum(cell).vertices) != d)
        throw SingularCellGeometry("fine cell sum is not full-dimensional");

    for (int i = 0; i < cell.r(); ++i) {
        const int di = data.dims[i];
        if (di == 0) continue;
        const auto& V = cell.parts[i].vertices;
        for (int a = 0; a <= di; ++a) {
            RatMat rows;
            RatVec rhs;
            int b0 = (a == 0) ? 1 : 0;
            rows.push_back(sub(V[a], V[b0]));
            rhs.push_back(1);
            for (int b = 0; b <= di; ++b) {
                if (b == a || b == b0) continue;
                rows.push_back(sub(V[b], V[b0]));
                rhs.push_back(0);
            }
            for (int j = 0; j < cell.r(); ++j) {
                if (j == i) continue;
                const auto& W = cell.parts[j].vertices;
                for (size_t b = 1; b < W.size(); ++b) {
                    rows.push_back(sub(W[b], W[0]));
                    rhs.push_back(0);
                }
            }
            auto res = solve_linear(rows, rhs);
            if (res.status != SolveResult::Status::Unique)
                throw SingularCellGeometry("fine cell ray system is not uniquely solvable");
            data.rays[i].push_back(res.x);
        }
        RatVec s(d, Rational(0));
        for (const auto& v : data.rays[i]) s = add(s, v);
        if (!is_zero(s)) throw SingularCellGeometry("fine cell rays do not sum to zero");
    }

    RatMat m;
    for (int i = 0; i < cell.r(); ++i)
        for (int a = 0; a < data.dims[i]; ++a) m.push_back(data.rays[i][a]);
    data.kappa = Rational(abs(det(m)));
    return data;
}

RationalFunction fine_cell_dmv(const MinkowskiSequence& cell) {
    FineCellData data = fine_cell_rays(cell);
    auto vars = xz_vars(cell.r(), cell.dim);
    std::vector<LinearForm> nums, dens;
    for (int i = 0; i < cell.r(); ++i) {
        if (data.dims[i] == 0) continue;
        nums.push_back(LinearForm::variable(vars->size(), i));
        LinearForm telescoped = LinearForm::constant_form(vars->size(), 0);
        for (const auto& v : data.rays[i]) {
            LinearForm h = mixed_form(cell, vars, v, true);
            telescoped = telescoped + h;
            dens.push_back(std::move(h));
        }
        if (!(telescoped == LinearForm::variable(vars->size(), i)))
            throw SingularCellGeometry("cell support forms do not telescope to x_i");
    }
    RationalFunction out(vars);
    out.add_term(data.kappa, nums, dens);
    return out;
}

namespace {

// max of <obj, y> over the H-polytope {y : <n_f, y> >= -c_f}; the region is
// assumed bounded.  Returns nothing when the region is empty.
std::optional<Rational> lp_max_over(const std::vector<Facet>& constraints, const RatVec& obj,
                                    int D) {
    const size_t m = constraints.size();
    // variables: y+ (D), y- (D), slack per constraint
    const size_t n = 2 * D + m;
    RatMat A(m, RatVec(n, Rational(0)));
    RatVec b(m);
    for (size_t f = 0; f < m; ++f) {
        for (int j = 0; j < D; ++j) {
            A[f][j] = constraints[f].normal[j];
            A[f][D + j] = -constraints[f].normal[j];
        }
        A[f][2 * D + f] = -1;
        b[f] = -constraints[f].offset;
    }
    RatVec c(n, Rational(0));
    for (int j = 0; j < D; ++j) {
        c[j] = -obj[j];
        c[D + j] = obj[j];
    }
    auto res = lp_solve(A, b, c);
    if (res.status != LpResult::Status::Optimal) return std::nullopt;
    return -res.value;
}

bool point_in_h(const std::vector<Facet>& constraints, const RatVec& y) {
    for (const auto& f : constraints)
        if (dot(f.normal, y) < -f.offset) return false;
    return true;
}

// vertices of A tight on every active facet lie inside B
bool face_inside(const std::vector<RatVec>& a_pts, const std::vector<Facet>& fa,
                 const std::vector<Facet>& fb, const std::vector<Facet>& joint, int D) {
    std::vector<int> active;
    for (size_t f = 0; f < fa.size(); ++f) {
        auto mx = lp_max_over(joint, fa[f].normal, D);
        if (!mx) return true;  // empty intersection
        if (*mx == -fa[f].offset) active.push_back(static_cast<int>(f));
    }
    for (const auto& p : a_pts) {
        bool on_face = true;
        for (int f : active)
            if (dot(fa[f].normal, p) != -fa[f].offset) on_face = false;
        if (on_face && !point_in_h(fb, p)) return false;
    }
    return true;
}

}  // namespace

bool polytopes_intersect_properly(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                  int dim) {
    auto fa = facet_structure(a, dim);
    auto fb = facet_structure(b, dim);
    std::vector<Facet> joint = fa;
    joint.insert(joint.end(), fb.begin(), fb.end());
    // quick emptiness probe
    if (!lp_max_over(joint, RatVec(dim, Rational(0)), dim)) return true;
    return face_inside(a, fa, fb, joint, dim) && face_inside(b, fb, fa, joint, dim);
}

namespace {

struct CayleyPoints {
    std::vector<RatVec> points;              // (vertex, e_i) in R^{d+r}
    std::vector<std::pair<int, int>> index;  // (part, vertex position)
};

CayleyPoints cayley_points(const MinkowskiSequence& seq) {
    CayleyPoints cp;
    const int d = seq.dim;
    const int r = seq.r();
    for (int i = 0; i < r; ++i)
        for (size_t a = 0; a < seq.parts[i].vertices.size(); ++a) {
            RatVec p = seq.parts[i].vertices[a];
            p.resize(d + r, Rational(0));
            p[d + i] = 1;
            cp.points.push_back(std::move(p));
            cp.index.emplace_back(i, static_cast<int>(a));
        }
    return cp;
}

std::vector<RatVec> cell_cayley_charted(const MinkowskiSequence& seq, const MixedCell& cell,
                                        const AffineChart& chart) {
    std::vector<RatVec> out;
    const int d = seq.dim;
    const int r = seq.r();
    for (int i = 0; i < r; ++i)
        for (int a : cell.parts[i]) {
            RatVec p = seq.parts[i].vertices[a];
            p.resize(d + r, Rational(0));
            p[d + i] = 1;
            out.push_back(chart.to_chart(p));
        }
    return out;
}

}  // namespace

Polytope cayley_polytope(const MinkowskiSequence& seq) {
    auto cp = cayley_points(seq);
    return Polytope(seq.dim + seq.r(), cp.points);
}

bool validate_mixed_subdivision(const MinkowskiSequence& seq, const MixedSubdivision& sub) {
    if (sub.cells.empty()) return false;
    std::vector<MinkowskiSequence> cells;
    for (const auto& c : sub.cells) cells.push_back(cell_geometry(seq, c));  // throws InvalidCell

    // (a) exact volume cover, measured in the affine hull of the total sum
    Polytope total = unit_sum(seq);
    AffineChart hull = affine_hull_chart(total.vertices);
    const int k = hull.dim();
    auto chart_nvol = [&](const Polytope& p) {
        std::vector<RatVec> charted;
        for (const auto& v : p.vertices) charted.push_back(hull.to_chart(v));
        return normalized_volume(Polytope(k, charted));
    };
    Rational target = chart_nvol(total);
    Rational acc = 0;
    for (const auto& cg : cells) {
        Rational v = chart_nvol(unit_sum(cg));
        if (v == 0) return false;  // lower-dimensional cell
        acc += v;
    }
    if (acc != target) return false;

    // (b) pairwise proper intersection, checked once per pair on the Cayley side
    auto cp = cayley_points(seq);
    AffineChart cayley_chart = affine_hull_chart(cp.points);
    const int Dc = cayley_chart.dim();
    std::vector<std::vector<RatVec>> charted;
    for (const auto& c : sub.cells) charted.push_back(cell_cayley_charted(seq, c, cayley_chart));
    for (const auto& pts : charted)
        if (affine_dim(pts) != Dc) return false;
    for (size_t i = 0; i < charted.size(); ++i)
        for (size_t j = i + 1; j < charted.size(); ++j)
            if (!polytopes_intersect_properly(charted[i], charted[j], Dc)) return false;
    return true;
}

bool verify_subdivision_additivity(const MinkowskiSequence& seq, const MixedSubdivision& sub) {
    RationalFunction whole = dual_mixed_volume_z(seq);
    RationalFunction acc = RationalFunction::zero(whole.vars);
    for (const auto& c : sub.cells)
        acc = rf_add(acc, dual_mixed_volume_z(cell_geometry(seq, c)));
    return rf_equal(whole, acc);
}

bool verify_cayley_identity(const MinkowskiSequence& seq) {
    const int d = seq.dim;
    const int r = seq.r();
    RationalFunction m = dual_mixed_volume_z(seq);
    if (m.is_zero_representation())
        throw NotFullDimensional("Cayley identity needs a full-dimensional sum");
    Polytope C = cayley_polytope(seq);
    RatVec u(d + r, Rational(0));
    for (int i = 0; i < r; ++i) u[d + i] = 1;
    Fan fan = boundary_dual_fan(C.vertices, u);
    auto vars = m.vars;  // (x1..xr, z1..zd)
    std::vector<LinearForm> values;
    for (const auto& w : fan.rays) {
        Rational h = support_value(C, w);
        RatVec coeffs(vars->size(), Rational(0));
        for (int i = 0; i < r; ++i) coeffs[i] = h + w[d + i];  // h * <x,1> + u-part pairing
        for (int j = 0; j < d; ++j) coeffs[r + j] = w[j];
        values.emplace_back(Rational(0), std::move(coeffs));
    }
    RationalFunction evol = evol_sum(fan, u, vars, values);

    // rhs = (prod x_i / sum x_i) * evol
    RatVec ones_x(vars->size(), Rational(0));
    for (int i = 0; i < r; ++i) ones_x[i] = 1;
    LinearForm sum_x(Rational(0), ones_x);
    RationalFunction rhs(vars);
    for (const auto& t : evol.terms) {
        std::vector<LinearForm> nums = t.num_factors;
        for (int i = 0; i < r; ++i) nums.push_back(LinearForm::variable(vars->size(), i));
        std::vector<LinearForm> dens = t.den_factors;
        dens.push_back(sum_x);
        rhs.add_term(t.coeff, nums, dens);
    }
    return rf_equal(m, rhs);
}

namespace {

MixedSubdivision lift_subdivision(const MinkowskiSequence& seq,
                                  const std::vector<Rational>& heights, bool& fine) {
    auto cp = cayley_points(seq);
    if (heights.size() != cp.points.size())
        throw std::invalid_argument("one lifting height per Cayley vertex required");
    AffineChart chart = affine_hull_chart(cp.points);
    std::vector<RatVec> charted;
    for (const auto& p : cp.points) charted.push_back(chart.to_chart(p));
    auto cells_raw = regular_subdivision(charted, heights);
    fine = true;
    const size_t simplex_size = static_cast<size_t>(chart.dim()) + 1;
    MixedSubdivision sub;
    for (const auto& raw : cells_raw) {
        if (raw.size() != simplex_size) fine = false;
        MixedCell cell;
        cell.parts.assign(seq.parts.size(), {});
        for (int idx : raw) {
            auto [part, pos] = cp.index[idx];
            cell.parts[part].push_back(pos);
        }
        for (auto& ps : cell.parts)
            if (ps.empty()) throw NonGenericLifting("lifted cell misses a summand");
        sub.cells.push_back(std::move(cell));
    }
    return sub;
}

}  // namespace

MixedSubdivision generate_fine_subdivision(const MinkowskiSequence& seq,
                                           const std::vector<Rational>& heights) {
    bool fine = false;
    MixedSubdivision sub = lift_subdivision(seq, heights, fine);
    if (!fine) throw NonGenericLifting("pinned lifting heights are not generic");
    return sub;
}

MixedSubdivision generate_fine_subdivision(const MinkowskiSequence& seq, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> hdist(1, 10000);
    size_t npoints = 0;
    for (const auto& p : seq.parts) npoints += p.vertices.size();
    for (int round = 0; round < 32; ++round) {
        std::vector<Rational> heights(npoints);
        for (auto& h : heights) h = hdist(rng);
        bool fine = false;
        MixedSubdivision sub = lift_subdivision(seq, heights, fine);
        if (fine) return sub;
    }
    throw NonGenericLifting("no generic lifting found within the retry budget");
}

bool subdivision_is_fine(const MinkowskiSequence& seq, const MixedSubdivision& sub) {
    for (const auto& c : sub.cells) {
        MinkowskiSequence geom = cell_geometry(seq, c);
        int total = 0;
        for (const auto& p : geom.parts) {
            int di = affine_dim(p.vertices);
            if (static_cast<int>(p.vertices.size()) != di + 1) return false;
            total += di;
        }
        if (total != affine_dim(unit_sum(seq).vertices)) return false;
    }
    return true;
}

}  // namespace dualvol
