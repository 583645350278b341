#include "dualvol/symfun.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dualvol {

VariableTable::VariableTable(std::vector<std::string> n) : names(std::move(n)) {
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate variable name: " + names[i]);
}

int VariableTable::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VariableTable>(std::move(names));
}

LinearForm LinearForm::constant_form(size_t nvars, Rational c) {
    return LinearForm(std::move(c), RatVec(nvars, Rational(0)));
}

LinearForm LinearForm::variable(size_t nvars, size_t idx) {
    RatVec co(nvars, Rational(0));
    co[idx] = 1;
    return LinearForm(Rational(0), std::move(co));
}

bool LinearForm::is_zero() const {
    return constant == 0 && dualvol::is_zero(coeffs);
}

bool LinearForm::is_constant() const { return dualvol::is_zero(coeffs); }

Rational LinearForm::eval(const RatVec& point) const {
    return constant + dot(coeffs, point);
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    return LinearForm(constant + o.constant, add(coeffs, o.coeffs));
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
    return LinearForm(constant - o.constant, sub(coeffs, o.coeffs));
}

LinearForm LinearForm::scaled(const Rational& c) const {
    return LinearForm(constant * c, scale(coeffs, c));
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return constant < o.constant;
}

std::pair<Rational, LinearForm> canonicalize(const LinearForm& f) {
    RatVec all = f.coeffs;
    all.push_back(f.constant);
    RatVec prim = primitive(all);
    // locate leading entry (variables first, constant last)
    size_t lead = all.size();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] != 0) {
            lead = i;
            break;
        }
    if (lead == all.size()) return {Rational(0), f};  // zero form
    if (prim[lead] < 0)
        for (auto& x : prim) x = -x;
    Rational scalar = all[lead] / prim[lead];
    LinearForm canon(prim.back(), RatVec(prim.begin(), prim.end() - 1));
    return {scalar, canon};
}

std::string to_string(const LinearForm& f, const VariableTable& vars) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        const Rational& c = f.coeffs[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = Rational(abs(c));
        if (a != 1) os << a.str() << "*";
        os << vars.names[i];
        first = false;
    }
    if (f.constant != 0 || first) {
        if (!first) os << (f.constant >= 0 ? " + " : " - ");
        os << (first ? f.constant.str() : Rational(abs(f.constant)).str());
    }
    return os.str();
}

SparsePolynomial SparsePolynomial::constant(VarTablePtr v, const Rational& c) {
    SparsePolynomial p(std::move(v));
    if (c != 0) p.terms[Monomial(p.vars->size(), 0)] = c;
    return p;
}

SparsePolynomial SparsePolynomial::from_linear(VarTablePtr v, const LinearForm& f) {
    SparsePolynomial p(std::move(v));
    if (f.constant != 0) p.terms[Monomial(p.vars->size(), 0)] = f.constant;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        Monomial m(p.vars->size(), 0);
        m[i] = 1;
        p.terms[m] = f.coeffs[i];
    }
    return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r(vars);
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            Monomial m(m1.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
    SparsePolynomial r(vars);
    if (c == 0) return r;
    for (const auto& [m, co] : terms) r.terms[m] = co * c;
    return r;
}

SparsePolynomial SparsePolynomial::times_linear(const LinearForm& f) const {
    SparsePolynomial r(vars);
    for (const auto& [m, c] : terms) {
        if (f.constant != 0) r.add_term(m, c * f.constant);
        for (size_t i = 0; i < f.coeffs.size(); ++i) {
            if (f.coeffs[i] == 0) continue;
            Monomial m2 = m;
            ++m2[i];
            r.add_term(m2, c * f.coeffs[i]);
        }
    }
    return r;
}

Rational SparsePolynomial::eval(const RatVec& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms) {
        Rational v = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

std::string to_string(const SparsePolynomial& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = Rational(abs(c));
        bool printed = false;
        bool unit = (a == 1);
        if (!unit) {
            os << a.str();
            printed = true;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << p.vars->names[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
        if (!printed) os << "1";
        first = false;
    }
    return os.str();
}

RationalFunction RationalFunction::constant(VarTablePtr v, const Rational& c) {
    RationalFunction f(std::move(v));
    if (c != 0) f.terms.push_back({c, {}, {}});
    return f;
}

void RationalFunction::add_term(Rational coeff, const std::vector<LinearForm>& nums,
                                const std::vector<LinearForm>& dens) {
    if (coeff == 0) return;
    RFTerm t;
    t.coeff = std::move(coeff);
    for (const auto& f : nums) {
        auto [s, canon] = canonicalize(f);
        if (s == 0) return;  // zero numerator factor: term vanishes
        t.coeff *= s;
        if (canon.is_constant() && canon.constant == 1) continue;  // fold constants
        t.num_factors.push_back(canon);
    }
    for (const auto& f : dens) {
        auto [s, canon] = canonicalize(f);
        if (s == 0) throw DegenerateSubstitution("zero denominator factor");
        t.coeff /= s;
        if (canon.is_constant() && canon.constant == 1) continue;
        t.den_factors.push_back(canon);
    }
    std::sort(t.num_factors.begin(), t.num_factors.end());
    std::sort(t.den_factors.begin(), t.den_factors.end());
    terms.push_back(std::move(t));
}

static void check_same_vars(const RationalFunction& a, const RationalFunction& b) {
    if (!(*a.vars == *b.vars))
        throw std::invalid_argument("rational functions over different variable tables");
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    check_same_vars(a, b);
    RationalFunction r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

RationalFunction rf_scale(const RationalFunction& a, const Rational& c) {
    RationalFunction r(a.vars);
    if (c == 0) return r;
    r.terms = a.terms;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
}

RationalFunction rf_neg(const RationalFunction& a) { return rf_scale(a, Rational(-1)); }

RationalFunction rf_mul_form_power(const RationalFunction& a, const LinearForm& form, int power) {
    auto [s, canon] = canonicalize(form);
    if (s == 0) throw DegenerateSubstitution("zero form in rf_mul_form_power");
    RationalFunction r(a.vars);
    r.terms = a.terms;
    for (auto& t : r.terms) {
        for (int k = 0; k < power; ++k) {
            t.coeff *= s;
            t.num_factors.push_back(canon);
        }
        for (int k = 0; k < -power; ++k) {
            t.coeff /= s;
            t.den_factors.push_back(canon);
        }
        std::sort(t.num_factors.begin(), t.num_factors.end());
        std::sort(t.den_factors.begin(), t.den_factors.end());
    }
    return r;
}

NormalForm rf_normalize(const RationalFunction& a) {
    // union denominator at max multiplicity across terms
    std::map<LinearForm, int> denom;
    for (const auto& t : a.terms) {
        std::map<LinearForm, int> local;
        for (const auto& f : t.den_factors) local[f]++;
        for (const auto& [f, m] : local) denom[f] = std::max(denom[f], m);
    }
    SparsePolynomial num(a.vars);
    for (const auto& t : a.terms) {
        SparsePolynomial part = SparsePolynomial::constant(a.vars, t.coeff);
        for (const auto& f : t.num_factors) part = part.times_linear(f);
        std::map<LinearForm, int> local;
        for (const auto& f : t.den_factors) local[f]++;
        for (const auto& [f, m] : denom) {
            int residual = m - (local.count(f) ? local.at(f) : 0);
            for (int k = 0; k < residual; ++k) part = part.times_linear(f);
        }
        num = num + part;
    }
    std::vector<std::pair<LinearForm, int>> den(denom.begin(), denom.end());
    return NormalForm(std::move(num), std::move(den));
}

Rational rf_eval(const RationalFunction& a, const RatVec& point) {
    if (point.size() != a.vars->size())
        throw std::invalid_argument("rf_eval: point dimension mismatch");
    Rational total = 0;
    for (const auto& t : a.terms) {
        Rational v = t.coeff;
        for (const auto& f : t.num_factors) v *= f.eval(point);
        for (const auto& f : t.den_factors) {
            Rational d = f.eval(point);
            if (d == 0)
                throw PoleError("pole at evaluation point: factor " + to_string(f, *a.vars));
            v /= d;
        }
        total += v;
    }
    return total;
}

namespace {

RatVec random_point(size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 7);
    RatVec p(n);
    for (auto& x : p) x = Rational(num(rng), den(rng));
    return p;
}

bool pole_free(const RationalFunction& f, const RatVec& p) {
    for (const auto& t : f.terms)
        for (const auto& d : t.den_factors)
            if (d.eval(p) == 0) return false;
    return true;
}

}  // namespace

bool rf_equal(const RationalFunction& a, const RationalFunction& b, uint64_t seed) {
    check_same_vars(a, b);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int done = 0;
    for (int tries = 0; tries < 64 && done < 4; ++tries) {
        RatVec p = random_point(a.vars->size(), rng);
        if (!pole_free(a, p) || !pole_free(b, p)) continue;
        ++done;
        if (rf_eval(a, p) != rf_eval(b, p)) return false;
    }
    NormalForm nf = rf_normalize(rf_add(a, rf_neg(b)));
    return nf.numerator.is_zero();
}

bool rf_is_zero(const RationalFunction& a, uint64_t seed) {
    return rf_equal(a, RationalFunction::zero(a.vars), seed);
}

namespace {

LinearForm substitute_form(const LinearForm& f, const std::vector<LinearForm>& images,
                           size_t target_nvars) {
    LinearForm out = LinearForm::constant_form(target_nvars, f.constant);
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        out = out + images[i].scaled(f.coeffs[i]);
    }
    return out;
}

std::vector<LinearForm> image_table(const RationalFunction& a, const VarTablePtr& target,
                                    const std::map<std::string, LinearForm>& images) {
    std::vector<LinearForm> imgs(a.vars->size());
    for (size_t i = 0; i < a.vars->size(); ++i) {
        auto it = images.find(a.vars->names[i]);
        if (it != images.end()) {
            if (it->second.coeffs.size() != target->size())
                throw std::invalid_argument("substitution image over wrong table");
            imgs[i] = it->second;
        } else {
            int j = target->index(a.vars->names[i]);
            if (j < 0)
                throw std::invalid_argument("no image for variable " + a.vars->names[i]);
            imgs[i] = LinearForm::variable(target->size(), j);
        }
    }
    return imgs;
}

}  // namespace

RationalFunction rf_substitute(const RationalFunction& a, VarTablePtr target,
                               const std::map<std::string, LinearForm>& images) {
    auto imgs = image_table(a, target, images);
    RationalFunction r(target);
    for (const auto& t : a.terms) {
        std::vector<LinearForm> nums, dens;
        for (const auto& f : t.num_factors)
            nums.push_back(substitute_form(f, imgs, target->size()));
        for (const auto& f : t.den_factors)
            dens.push_back(substitute_form(f, imgs, target->size()));
        r.add_term(t.coeff, nums, dens);
    }
    return r;
}

RationalFunction rf_substitute_rational(const RationalFunction& a, VarTablePtr target,
                                        const std::vector<LinearForm>& nums,
                                        const LinearForm& w) {
    if (nums.size() != a.vars->size())
        throw std::invalid_argument("rf_substitute_rational: image count mismatch");
    // var_i -> nums[i]/w: a factor c0 + sum a_i var_i becomes
    // (c0*w + sum a_i nums[i]) / w; the w powers are tracked per term.
    RationalFunction r(target);
    for (const auto& t : a.terms) {
        std::vector<LinearForm> num_out, den_out;
        int wpow = 0;
        auto homog = [&](const LinearForm& f) {
            LinearForm out = w.scaled(f.constant);
            for (size_t i = 0; i < f.coeffs.size(); ++i)
                if (f.coeffs[i] != 0) out = out + nums[i].scaled(f.coeffs[i]);
            return out;
        };
        for (const auto& f : t.num_factors) {
            num_out.push_back(homog(f));
            --wpow;
        }
        for (const auto& f : t.den_factors) {
            den_out.push_back(homog(f));
            ++wpow;
        }
        for (int k = 0; k < wpow; ++k) num_out.push_back(w);
        for (int k = 0; k < -wpow; ++k) den_out.push_back(w);
        r.add_term(t.coeff, num_out, den_out);
    }
    return r;
}

std::string to_string(const RationalFunction& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        if (i) os << " + ";
        os << t.coeff.str();
        for (const auto& n : t.num_factors) os << " * (" << to_string(n, *f.vars) << ")";
        for (const auto& d : t.den_factors) os << " / (" << to_string(d, *f.vars) << ")";
    }
    return os.str();
}

}  // namespace dualvol
