#include "dualvol/exact.hpp"

#include <algorithm>

namespace dualvol {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);  // boost canonicalizes sign and gcd
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("add: length mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rational& c) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

bool is_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RatVec primitive(const RatVec& v) {
    Integer lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
    Integer g = 0;
    RatVec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Integer n = numerator(v[i]) * (lcm_den / denominator(v[i]));
        scaled[i] = n;
        g = gcd(g, n);
    }
    if (g == 0) return scaled;  // zero vector
    for (auto& x : scaled) x /= Rational(g);
    return scaled;
}

Rational det(const RatMat& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionError("det: matrix not square");
    RatMat a = m;
    Rational d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

namespace {

// Row-reduce [a | b] in place; returns pivot column per pivot row.
std::vector<size_t> row_reduce(RatMat& a, size_t cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < a.size(); ++col) {
        size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rational d = a[row][col];
        for (auto& x : a[row]) x /= d;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const RatMat& m) {
    if (m.empty()) return 0;
    RatMat a = m;
    return static_cast<int>(row_reduce(a, a[0].size()).size());
}

SolveResult solve_linear(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("solve_linear: row count mismatch");
    if (a.empty()) return {SolveResult::Status::Underdetermined, {}};
    const size_t n = a[0].size();
    RatMat aug(a.size());
    for (size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != n) throw DimensionError("solve_linear: ragged matrix");
        aug[r] = a[r];
        aug[r].push_back(b[r]);
    }
    auto pivots = row_reduce(aug, n);
    for (size_t r = pivots.size(); r < aug.size(); ++r)
        if (aug[r][n] != 0) return {SolveResult::Status::NoSolution, {}};
    if (pivots.size() < n) return {SolveResult::Status::Underdetermined, {}};
    RatVec x(n);
    for (size_t r = 0; r < n; ++r) x[pivots[r]] = aug[r][n];
    return {SolveResult::Status::Unique, x};
}

namespace {

// One simplex phase on the tableau rows; basis[i] is the basic column of row i.
// Returns false if unbounded.  Bland's rule guarantees termination.
bool simplex_iterate(RatMat& t, std::vector<size_t>& basis, size_t ncols) {
    const size_t m = t.size() - 1;  // last row is the objective
    for (;;) {
        size_t enter = ncols;
        for (size_t j = 0; j < ncols; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == ncols) return true;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][ncols] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) return false;  // unbounded
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
}

}  // namespace

LpResult lp_solve(const RatMat& A, const RatVec& b, const RatVec& c) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : c.size();
    if (b.size() != m || c.size() != n) throw DimensionError("lp_solve: shape mismatch");

    // Phase 1 with artificial variables; rows flipped so b >= 0.
    const size_t ncols = n + m;
    RatMat t(m + 1, RatVec(ncols + 1, Rational(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        Rational sign = (b[i] < 0) ? Rational(-1) : Rational(1);
        for (size_t j = 0; j < n; ++j) t[i][j] = sign * A[i][j];
        t[i][n + i] = 1;
        t[i][ncols] = sign * b[i];
        basis[i] = n + i;
    }
    for (size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    {
        Rational s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][ncols];
        t[m][ncols] = -s;
    }
    simplex_iterate(t, basis, ncols);
    if (t[m][ncols] != 0) return {LpResult::Status::Infeasible, 0, {}};

    // Drive artificial variables out of the basis where possible.
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        size_t enter = n;
        for (size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) {
                enter = j;
                break;
            }
        if (enter == n) continue;  // redundant row
        Rational piv = t[i][enter];
        for (auto& x : t[i]) x /= piv;
        for (size_t r = 0; r <= m; ++r) {
            if (r == i || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (size_t j = 0; j <= ncols; ++j) t[r][j] -= f * t[i][j];
        }
        basis[i] = enter;
    }

    // Phase 2 on real columns only: drop rows still pinned to an artificial
    // basic variable (they are redundant and sit at zero).
    RatMat t2;
    std::vector<size_t> basis2;
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) continue;
        RatVec row(t[i].begin(), t[i].begin() + n);
        row.push_back(t[i][ncols]);
        t2.push_back(std::move(row));
        basis2.push_back(basis[i]);
    }
    RatVec obj(c);
    obj.push_back(0);
    for (size_t i = 0; i < t2.size(); ++i) {
        Rational f = obj[basis2[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= n; ++j) obj[j] -= f * t2[i][j];
    }
    t2.push_back(std::move(obj));

    if (!simplex_iterate(t2, basis2, n)) return {LpResult::Status::Unbounded, 0, {}};

    RatVec x(n, Rational(0));
    for (size_t i = 0; i < basis2.size(); ++i) x[basis2[i]] = t2[i][n];
    return {LpResult::Status::Optimal, -t2.back()[n], x};
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts) {
    if (pts.empty()) return false;
    const size_t d = p.size();
    const size_t k = pts.size();
    RatMat A(d + 1, RatVec(k, Rational(0)));
    RatVec b(d + 1);
    for (size_t j = 0; j < k; ++j) {
        if (pts[j].size() != d) throw DimensionError("in_convex_hull: dim mismatch");
        for (size_t i = 0; i < d; ++i) A[i][j] = pts[j][i];
        A[d][j] = 1;
    }
    for (size_t i = 0; i < d; ++i) b[i] = p[i];
    b[d] = 1;
    RatVec c(k, Rational(0));
    auto res = lp_solve(A, b, c);
    return res.status == LpResult::Status::Optimal;
}

bool is_extreme_point(const RatVec& p, const std::vector<RatVec>& others) {
    return !in_convex_hull(p, others);
}

}  // namespace dualvol
