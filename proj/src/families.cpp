#include "dualvol/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dualvol {

Zonotope::Zonotope(int d, std::vector<RatVec> gens) : dim(d), generators(std::move(gens)) {
    RatMat m;
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != d) throw DimensionError("generator of wrong dimension");
        if (is_zero(p)) throw std::invalid_argument("zero zonotope generator");
        m.push_back(p);
    }
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j) {
            RatVec a = primitive(generators[i]);
            RatVec b = primitive(generators[j]);
            RatVec nb = scale(b, Rational(-1));
            if (a == b || a == nb)
                throw std::invalid_argument("parallel zonotope generators");
        }
}

MinkowskiSequence zonotope_sequence(const Zonotope& z) {
    std::vector<Polytope> parts;
    for (const auto& p : z.generators) parts.push_back(segment(scale(p, Rational(-1)), p));
    return MinkowskiSequence(z.dim, std::move(parts));
}

RationalFunction zonotope_dmv(const Zonotope& z) {
    return dual_mixed_volume(zonotope_sequence(z));
}

namespace {

struct SplitFan {
    Fan fan;                         // normal fan of P + [-dir, dir]
    std::vector<LinearForm> values;  // h_P(v) + <v, z>
    std::vector<std::vector<int>> plus_cones, minus_cones;
};

SplitFan split_fan(const Polytope& p, const RatVec& dir, const VarTablePtr& vars) {
    if (affine_dim(p.vertices) < p.dim)
        throw NotFullDimensional("deletion-contraction needs a full-dimensional polytope");
    Polytope pb = minkowski_sum({p, segment(scale(dir, Rational(-1)), dir)}, {1, 1});
    SplitFan s;
    s.fan = normal_fan(pb);
    for (const auto& v : s.fan.rays)
        s.values.emplace_back(support_value(p, v), v);
    for (const auto& cone : s.fan.cones) {
        bool nonneg = true, nonpos = true;
        for (int i : cone) {
            Rational sp = dot(s.fan.rays[i], dir);
            if (sp < 0) nonneg = false;
            if (sp > 0) nonpos = false;
        }
        if (nonneg)
            s.plus_cones.push_back(cone);
        else if (nonpos)
            s.minus_cones.push_back(cone);
        else
            throw std::logic_error("refined fan cone crosses the direction hyperplane");
    }
    return s;
}

}  // namespace

DeletionContraction deletion_contraction_split(const Polytope& p, const RatVec& dir) {
    auto vars = z_vars(p.dim);
    SplitFan s = split_fan(p, dir, vars);
    Fan plus = s.fan, minus = s.fan;
    plus.cones = s.plus_cones;
    minus.cones = s.minus_cones;
    return {f_fan_symbolic(plus, vars, s.values), f_fan_symbolic(minus, vars, s.values)};
}

RationalFunction dilation_volume_function(const Polytope& p, const RatVec& dir) {
    MinkowskiSequence seq(p.dim, {p, segment(scale(dir, Rational(-1)), dir)});
    RationalFunction m = dual_mixed_volume_z(seq);  // (x1, x2, z...)
    // pin the polytope weight x1 to 1 and rename the segment weight to x1
    std::vector<std::string> names = {"x1"};
    for (int j = 1; j <= p.dim; ++j) names.push_back("z" + std::to_string(j));
    auto target = make_vars(std::move(names));
    std::map<std::string, LinearForm> images;
    images["x1"] = LinearForm::constant_form(target->size(), 1);
    images["x2"] = LinearForm::variable(target->size(), 0);
    return rf_substitute(m, target, images);
}

RationalFunction contraction_limit(const Polytope& p, const RatVec& dir, bool plus_side) {
    auto vars = z_vars(p.dim);
    SplitFan s = split_fan(p, dir, vars);
    Fan side = s.fan;
    side.cones = plus_side ? s.plus_cones : s.minus_cones;
    Fan t = triangulate_fan(side);
    RationalFunction out(vars);
    for (const auto& cone : t.cones) {
        int off = -1;
        int off_count = 0;
        for (int i : cone)
            if (dot(t.rays[i], dir) != 0) {
                off = i;
                ++off_count;
            }
        if (off_count != 1) continue;  // higher-order decay in t
        RatMat m;
        for (int i : cone) m.push_back(t.rays[i]);
        Rational coeff = Rational(abs(det(m))) / dot(t.rays[off], dir);
        std::vector<LinearForm> dens;
        for (int i : cone)
            if (i != off) dens.push_back(s.values[i]);
        out.add_term(coeff, {}, dens);
    }
    return out;
}

ProjectedPolytope project_along(const Polytope& p, const RatVec& dir) {
    const int d = p.dim;
    if (is_zero(dir)) throw std::invalid_argument("projection direction is zero");
    ProjectedPolytope out;
    // basis of dir-perp, orthogonalized against dir
    RatMat acc = {dir};
    for (int j = 0; j < d; ++j) {
        RatVec cand(d, Rational(0));
        cand[j] = 1;
        // orthogonalize against dir exactly
        RatVec per = sub(cand, scale(dir, dot(cand, dir) / dot(dir, dir)));
        if (is_zero(per)) continue;
        acc.push_back(per);
        if (rank(acc) == static_cast<int>(acc.size()))
            out.basis.push_back(per);
        else
            acc.pop_back();
    }
    if (static_cast<int>(out.basis.size()) != d - 1)
        throw std::logic_error("kernel basis has wrong size");
    RatMat bm;
    for (const auto& b : out.basis) bm.push_back(b);
    bm.push_back(dir);
    out.det_basis_dir = Rational(abs(det(bm)));

    AffineChart chart;
    chart.origin = RatVec(d, Rational(0));
    chart.basis = out.basis;
    std::vector<RatVec> charted;
    for (const auto& v : p.vertices) {
        RatVec img = sub(v, scale(dir, dot(v, dir) / dot(dir, dir)));
        charted.push_back(chart.to_chart(img));
    }
    out.chart_polytope = Polytope(d - 1, charted);
    return out;
}

RationalFunction tiling_dmv(const Zonotope& z, const std::vector<SignVector>& tiling) {
    const int d = z.dim;
    const int r = z.zones();
    MinkowskiSequence seq = zonotope_sequence(z);
    MixedSubdivision sub;
    for (const auto& eps : tiling) {
        if (static_cast<int>(eps.entries.size()) != r)
            throw InvalidTiling("sign vector of wrong length");
        RatMat basis;
        MixedCell cell;
        cell.parts.resize(r);
        for (int i = 0; i < r; ++i) {
            const auto& seg = seq.parts[i];
            if (eps.entries[i] == 0) {
                basis.push_back(z.generators[i]);
                cell.parts[i] = {0, 1};
            } else {
                RatVec target = scale(z.generators[i], Rational(eps.entries[i]));
                int idx = (seg.vertices[0] == target) ? 0 : 1;
                if (seg.vertices[idx] != target)
                    throw InvalidTiling("sign does not pick a segment endpoint");
                cell.parts[i] = {idx};
            }
        }
        if (static_cast<int>(basis.size()) != d || det(basis) == 0)
            throw InvalidTiling("zero set of a sign vector is not a basis");
        sub.cells.push_back(std::move(cell));
    }
    if (!validate_mixed_subdivision(seq, sub))
        throw InvalidTiling("sign vectors do not tile the zonotope");
    RationalFunction acc = RationalFunction::zero(x_vars(r));
    for (const auto& c : sub.cells)
        acc = rf_add(acc, dual_mixed_volume(cell_geometry(seq, c)));
    return acc;
}

// ----- generalized permutohedra ----------------------------------------------

std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) t.push_back(i + 1);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

std::string subset_name(const std::vector<int>& t) {
    std::string s = "x_";
    for (int i : t) s += std::to_string(i);
    return s;
}

}  // namespace

VarTablePtr genperm_vars(int n) {
    std::vector<std::string> names;
    for (const auto& t : nonempty_subsets(n))
        if (static_cast<int>(t.size()) < n) names.push_back(subset_name(t));
    return make_vars(std::move(names));
}

RationalFunction genperm_dmv_closed_form(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("closed form supported for 2 <= n <= 7");
    auto vars = genperm_vars(n);
    auto subsets = nonempty_subsets(n);
    std::map<std::vector<int>, int> var_of;
    for (const auto& t : subsets) {
        if (static_cast<int>(t.size()) == n) continue;
        var_of[t] = vars->index(subset_name(t));
    }
    RationalFunction out(vars);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Rational sign = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
    do {
        std::vector<LinearForm> dens;
        for (int a = 1; a <= n - 1; ++a) {
            std::vector<int> prefix(perm.begin(), perm.begin() + a);
            std::sort(prefix.begin(), prefix.end());
            RatVec coeffs(vars->size(), Rational(0));
            for (unsigned mask = 1; mask < (1u << a); ++mask) {
                std::vector<int> t;
                for (int i = 0; i < a; ++i)
                    if (mask & (1u << i)) t.push_back(prefix[i]);
                std::sort(t.begin(), t.end());
                coeffs[var_of.at(t)] += 1;
            }
            dens.emplace_back(Rational(0), std::move(coeffs));
        }
        out.add_term(sign, {}, dens);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MinkowskiSequence genperm_sequence(int n) {
    std::vector<Polytope> parts;
    for (const auto& t : nonempty_subsets(n)) {
        std::vector<RatVec> pts;
        for (int i : t) {
            RatVec e(n, Rational(0));
            e[i - 1] = 1;
            pts.push_back(std::move(e));
        }
        parts.emplace_back(n, pts);
    }
    return MinkowskiSequence(n, std::move(parts));
}

MixedCell genperm_cell(int n, const std::vector<std::vector<int>>& J) {
    auto subsets = nonempty_subsets(n);
    if (J.size() != subsets.size())
        throw NotSpanningTree("one subset J_i per part T_i required");
    MinkowskiSequence seq = genperm_sequence(n);
    MixedCell cell;
    cell.parts.resize(J.size());
    for (size_t i = 0; i < J.size(); ++i) {
        if (J[i].empty()) throw NotSpanningTree("empty J_i");
        for (int j : J[i]) {
            if (std::find(subsets[i].begin(), subsets[i].end(), j) == subsets[i].end())
                throw NotSpanningTree("J_i not contained in T_i");
            // vertex e_j inside the sorted vertex list of Delta_{T_i}
            RatVec e(n, Rational(0));
            e[j - 1] = 1;
            const auto& verts = seq.parts[i].vertices;
            auto it = std::find(verts.begin(), verts.end(), e);
            cell.parts[i].push_back(static_cast<int>(it - verts.begin()));
        }
        std::sort(cell.parts[i].begin(), cell.parts[i].end());
    }
    return cell;
}

namespace {

// connected components of the bipartite graph G_J with the subset vertex
// `removed` deleted; returns the component id of each ground vertex 1..n and
// each subset index, or -1 for the removed vertex
struct TreeComponents {
    std::vector<int> ground;  // size n+1, 1-based
    std::vector<int> subset;  // size N
    int count = 0;
};

TreeComponents components_without(const std::vector<std::vector<int>>& J, int n, int removed) {
    const int N = static_cast<int>(J.size());
    TreeComponents tc;
    tc.ground.assign(n + 1, -1);
    tc.subset.assign(N, -1);
    for (int start = 0; start < N; ++start) {
        if (start == removed || tc.subset[start] >= 0) continue;
        int id = tc.count++;
        std::vector<std::pair<bool, int>> stack{{false, start}};  // (is_ground, idx)
        tc.subset[start] = id;
        while (!stack.empty()) {
            auto [is_ground, v] = stack.back();
            stack.pop_back();
            if (is_ground) {
                for (int i = 0; i < N; ++i) {
                    if (i == removed || tc.subset[i] >= 0) continue;
                    if (std::find(J[i].begin(), J[i].end(), v) != J[i].end()) {
                        tc.subset[i] = id;
                        stack.emplace_back(false, i);
                    }
                }
            } else {
                for (int j : J[v])
                    if (tc.ground[j] < 0) {
                        tc.ground[j] = id;
                        stack.emplace_back(true, j);
                    }
            }
        }
    }
    // ground vertices may be isolated after the removal
    for (int j = 1; j <= n; ++j)
        if (tc.ground[j] < 0) tc.ground[j] = tc.count++;
    return tc;
}

void check_spanning_tree(const std::vector<std::vector<int>>& J, int n) {
    size_t edges = 0;
    for (const auto& j : J) edges += j.size();
    if (edges != static_cast<size_t>((1 << n) + n - 2))
        throw NotSpanningTree("edge count differs from 2^n + n - 2");
    TreeComponents tc = components_without(J, n, /*removed=*/-1);
    if (tc.count != 1) throw NotSpanningTree("graph G_J is not connected");
    // connected with N + n - 1 edges on N + n vertices: a spanning tree
}

// x_{T_k} with x_[n] substituted by minus the sum of the proper variables
LinearForm subset_form(const VarTablePtr& vars, const std::vector<int>& t, int n) {
    RatVec coeffs(vars->size(), Rational(0));
    if (static_cast<int>(t.size()) == n) {
        for (auto& c : coeffs) c = -1;
    } else {
        coeffs[vars->index(subset_name(t))] = 1;
    }
    return LinearForm(Rational(0), std::move(coeffs));
}

}  // namespace

RationalFunction genperm_cell_dmv(int n, const std::vector<std::vector<int>>& J) {
    check_spanning_tree(J, n);
    auto vars = genperm_vars(n);
    auto subsets = nonempty_subsets(n);
    const int N = static_cast<int>(J.size());
    Rational coeff = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
    std::vector<LinearForm> nums, dens;
    for (int i = 0; i < N; ++i) {
        if (J[i].size() <= 1) continue;
        coeff = -coeff;  // the numerators enter as -x_{T_i}
        nums.push_back(subset_form(vars, subsets[i], n));
        TreeComponents tc = components_without(J, n, i);
        for (int j : J[i]) {
            int id = tc.ground[j];
            LinearForm h = LinearForm::constant_form(vars->size(), 0);
            for (int k = 0; k < N; ++k)
                if (tc.subset[k] == id) h = h + subset_form(vars, subsets[k], n);
            if (h.is_zero()) throw NotSpanningTree("empty component form");
            dens.push_back(std::move(h));
        }
    }
    RationalFunction out(vars);
    out.add_term(coeff, nums, dens);
    return out;
}

GenpermIdentities verify_genperm_identities(
    int n, const std::vector<std::vector<std::vector<int>>>& Js) {
    GenpermIdentities res{false, false, 0, 0};
    RationalFunction closed = genperm_dmv_closed_form(n);
    RationalFunction acc = RationalFunction::zero(closed.vars);
    for (const auto& J : Js) acc = rf_add(acc, genperm_cell_dmv(n, J));
    res.additivity = rf_equal(closed, acc);

    // numeric specialization: x_T = 1 for proper T
    Rational lhs = 1;
    for (int a = 1; a <= n; ++a) lhs *= a;
    for (int a = 1; a <= n - 1; ++a) lhs /= (Integer(1) << a) - 1;
    res.lhs = lhs;

    const int N = (1 << n) - 1;
    Rational sum_big = 0, sum_small = 0;
    for (const auto& J : Js) {
        check_spanning_tree(J, n);
        Rational prod = 1;
        for (int i = 0; i < N; ++i) {
            if (J[i].size() <= 1) continue;
            TreeComponents tc = components_without(J, n, i);
            for (int j : J[i]) {
                int id = tc.ground[j];
                long cnt = 0;
                bool has_last = false;
                for (int k = 0; k < N; ++k)
                    if (tc.subset[k] == id) {
                        ++cnt;
                        if (k == N - 1) has_last = true;
                    }
                Rational alpha = has_last ? Rational(N - cnt) : Rational(cnt);
                prod /= alpha;
            }
        }
        if (J[N - 1].size() > 1)
            sum_big += prod;
        else
            sum_small += prod;
    }
    res.rhs = Rational((1 << n) - 2) * sum_big + sum_small;
    res.alpha_identity = (res.lhs == res.rhs);
    return res;
}

// ----- Catalan objects ---------------------------------------------------------

std::pair<int, int> PlaneBinaryTree::descendant_interval(int node) const {
    int lo = node, hi = node;
    std::function<void(int)> rec = [&](int v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (left[v]) rec(left[v]);
        if (right[v]) rec(right[v]);
    };
    rec(node);
    return {lo, hi};
}

std::vector<PlaneBinaryTree> enumerate_plane_binary_trees(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("tree enumeration supported for 1 <= n <= 14");
    // enumerate roots over [lo, hi]; a tree is stored in shared arrays
    std::vector<PlaneBinaryTree> out;
    PlaneBinaryTree work;
    work.n = n;
    work.left.assign(n + 1, 0);
    work.right.assign(n + 1, 0);
    std::function<void(int, int, std::function<void(int)>)> rec =
        [&](int lo, int hi, std::function<void(int)> k) {
            if (lo > hi) {
                k(0);
                return;
            }
            for (int root = lo; root <= hi; ++root) {
                rec(lo, root - 1, [&, root](int lchild) {
                    work.left[root] = lchild;
                    rec(root + 1, hi, [&, root](int rchild) {
                        work.right[root] = rchild;
                        k(root);
                    });
                });
            }
        };
    rec(1, n, [&](int root) {
        PlaneBinaryTree t = work;
        t.root = root;
        out.push_back(std::move(t));
    });
    return out;
}

bool PlanarCubicTree::is_valid() const {
    const int total = static_cast<int>(adj.size());
    if (leaves < 3 || total != 2 * leaves - 2) return false;
    size_t edges = 0;
    for (int v = 0; v < total; ++v) {
        size_t want = v < leaves ? 1 : 3;
        if (adj[v].size() != want) return false;
        edges += adj[v].size();
    }
    if (edges != 2 * (adj.size() - 1)) return false;  // tree edge count
    // connectivity
    std::vector<bool> seen(total, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == total;
}

std::vector<int> PlanarCubicTree::leaf_split(int a, int b, int side) const {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{side};
    seen[side] = true;
    std::vector<int> out;
    if (side < leaves) out.push_back(side + 1);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if ((v == a && w == b) || (v == b && w == a)) continue;
            if (seen[w]) continue;
            seen[w] = true;
            if (w < leaves) out.push_back(w + 1);
            stack.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlanarCubicTree pb_to_pc(const PlaneBinaryTree& b) {
    const int n = b.n;
    PlanarCubicTree t;
    t.leaves = n + 2;
    t.adj.assign(2 * t.leaves - 2, {});
    auto interior = [&](int node) { return t.leaves + node - 1; };
    auto link = [&](int u, int v) {
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    };
    // missing children attach boundary leaves lo and hi+1; the root attaches
    // the anchor leaf n+2; child edges become the interior edges
    for (int v = 1; v <= n; ++v) {
        auto [lo, hi] = b.descendant_interval(v);
        if (!b.left[v]) link(interior(v), lo - 1);
        if (!b.right[v]) link(interior(v), hi + 1 - 1);
        if (v == b.root) link(interior(v), n + 2 - 1);
    }
    for (int v = 1; v <= n; ++v)
        if (b.left[v]) link(interior(v), interior(b.left[v]));
    for (int v = 1; v <= n; ++v)
        if (b.right[v]) link(interior(v), interior(b.right[v]));
    return t;
}

// ----- associahedra ------------------------------------------------------------

namespace {

std::string interval_name(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

VarTablePtr assoc_vars(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) names.push_back(interval_name(i, j));
    return make_vars(std::move(names));
}

RationalFunction associahedron_dmv(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("associahedron form supported for n <= 12");
    auto vars = assoc_vars(n);
    RationalFunction out(vars);
    Rational sign = (n % 2 == 1) ? 1 : -1;
    for (const auto& b : enumerate_plane_binary_trees(n)) {
        std::vector<LinearForm> dens;
        for (int v = 1; v <= n; ++v) {
            if (v == b.root) continue;  // edges pair non-root nodes with parents
            auto [lo, hi] = b.descendant_interval(v);
            RatVec coeffs(vars->size(), Rational(0));
            for (int i = lo; i <= hi; ++i)
                for (int j = i; j <= hi; ++j) coeffs[vars->index(interval_name(i, j))] = 1;
            dens.emplace_back(Rational(0), std::move(coeffs));
        }
        out.add_term(sign, {}, dens);
    }
    return out;
}

MinkowskiSequence associahedron_sequence(int n) {
    std::vector<Polytope> parts;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::vector<RatVec> pts;
            for (int k = i; k <= j; ++k) {
                RatVec e(n, Rational(0));
                e[k - 1] = 1;
                pts.push_back(std::move(e));
            }
            parts.emplace_back(n, pts);
        }
    return MinkowskiSequence(n, std::move(parts));
}

// ----- Mandelstam variables ----------------------------------------------------

namespace {

std::string mandelstam_name(int i, int j) {
    return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

MandelstamTable::MandelstamTable(int n_) : n(n_) {
    if (n < 4) throw std::invalid_argument("Mandelstam table needs n >= 4");
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == n - 2 && j == n - 1) continue;
            names.push_back(mandelstam_name(i, j));
        }
    vars = make_vars(std::move(names));
}

LinearForm MandelstamTable::reduce(int i, int j) const {
    if (i == j) return LinearForm::constant_form(vars->size(), 0);
    if (i > j) std::swap(i, j);
    if (j == n) {
        // row relation: s_in = - sum_{k != i, k < n} s_ik
        LinearForm out = LinearForm::constant_form(vars->size(), 0);
        for (int k = 1; k < n; ++k) {
            if (k == i) continue;
            out = out - reduce(std::min(i, k), std::max(i, k));
        }
        return out;
    }
    if (i == n - 2 && j == n - 1) {
        // residual relation: the proper-index variables sum to zero
        RatVec coeffs(vars->size(), Rational(-1));
        return LinearForm(Rational(0), std::move(coeffs));
    }
    return LinearForm::variable(vars->size(), vars->index(mandelstam_name(i, j)));
}

LinearForm MandelstamTable::interval_form(int a, int b) const {
    LinearForm out = LinearForm::constant_form(vars->size(), 0);
    for (int i = a; i < b; ++i)
        for (int j = i + 1; j <= b; ++j) out = out + reduce(i, j);
    return out;
}

RationalFunction phi3_amplitude(int n) { return phi3_amplitude(MandelstamTable(n)); }

RationalFunction phi3_amplitude(const MandelstamTable& table) {
    const int n = table.n;
    if (n > 12) throw std::invalid_argument("amplitude supported for n <= 12");
    RationalFunction out(table.vars);
    for (const auto& b : enumerate_plane_binary_trees(n - 2)) {
        PlanarCubicTree t = pb_to_pc(b);
        if (!t.is_valid()) throw std::logic_error("bijection produced an invalid cubic tree");
        std::vector<LinearForm> dens;
        for (int u = t.leaves; u < static_cast<int>(t.adj.size()); ++u)
            for (int v : t.adj[u]) {
                if (v <= u || v < t.leaves) continue;  // interior edges once
                std::vector<int> split = t.leaf_split(u, v, u);
                if (std::find(split.begin(), split.end(), n) != split.end())
                    split = t.leaf_split(u, v, v);
                if (split.empty() || split.back() - split.front() + 1 != static_cast<int>(split.size()))
                    throw std::logic_error("leaf split is not an interval");
                dens.push_back(table.interval_form(split.front(), split.back()));
            }
        out.add_term(1, {}, dens);
    }
    return out;
}

Rational amplitude_assoc_sign(int n) { return (n % 2 == 1) ? 1 : -1; }

}  // namespace dualvol
