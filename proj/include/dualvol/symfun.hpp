// Affine-linear forms, sparse multivariate polynomials, and rational
// functions kept as sums of fractions whose numerators and denominators are
// products of linear forms.  Everything is immutable after construction.
#ifndef DUALVOL_SYMFUN_HPP
#define DUALVOL_SYMFUN_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dualvol/exact.hpp"

namespace dualvol {

struct VariableTable {
    std::vector<std::string> names;

    explicit VariableTable(std::vector<std::string> n);
    size_t size() const { return names.size(); }
    int index(const std::string& name) const;  // -1 when absent
    bool operator==(const VariableTable& o) const { return names == o.names; }
};

using VarTablePtr = std::shared_ptr<const VariableTable>;
VarTablePtr make_vars(std::vector<std::string> names);

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// constant + sum coeffs[i] * var_i, with coeffs dense over the table.
struct LinearForm {
    Rational constant;
    RatVec coeffs;

    LinearForm() : constant(0) {}
    LinearForm(Rational c, RatVec co) : constant(std::move(c)), coeffs(std::move(co)) {}
    static LinearForm constant_form(size_t nvars, Rational c);
    static LinearForm variable(size_t nvars, size_t idx);

    bool is_zero() const;
    bool is_constant() const;
    Rational eval(const RatVec& point) const;
    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm scaled(const Rational& c) const;
    bool operator==(const LinearForm& o) const {
        return constant == o.constant && coeffs == o.coeffs;
    }
    bool operator<(const LinearForm& o) const;
};

// Splits f as scalar * canon where canon has primitive integer entries and
// positive leading coefficient (variables first, constant last).
std::pair<Rational, LinearForm> canonicalize(const LinearForm& f);

std::string to_string(const LinearForm& f, const VariableTable& vars);

// ----- sparse polynomials ----------------------------------------------------

using Monomial = std::vector<int>;  // dense exponent vector

struct SparsePolynomial {
    VarTablePtr vars;
    std::map<Monomial, Rational> terms;  // no zero coefficients stored

    explicit SparsePolynomial(VarTablePtr v) : vars(std::move(v)) {}
    static SparsePolynomial constant(VarTablePtr v, const Rational& c);
    static SparsePolynomial from_linear(VarTablePtr v, const LinearForm& f);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Rational& c);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial scaled(const Rational& c) const;
    SparsePolynomial times_linear(const LinearForm& f) const;
    Rational eval(const RatVec& point) const;
    bool operator==(const SparsePolynomial& o) const { return terms == o.terms; }
};

std::string to_string(const SparsePolynomial& p);

// ----- rational functions ----------------------------------------------------

// coeff * prod(num_factors) / prod(den_factors); factors stored canonical.
struct RFTerm {
    Rational coeff;
    std::vector<LinearForm> num_factors;
    std::vector<LinearForm> den_factors;
};

struct RationalFunction {
    VarTablePtr vars;
    std::vector<RFTerm> terms;

    explicit RationalFunction(VarTablePtr v) : vars(std::move(v)) {}
    static RationalFunction zero(VarTablePtr v) { return RationalFunction(std::move(v)); }
    static RationalFunction constant(VarTablePtr v, const Rational& c);

    bool is_zero_representation() const { return terms.empty(); }
    // Appends coeff * prod(nums) / prod(dens), canonicalizing factors.  A zero
    // numerator factor drops the term; a zero denominator factor throws.
    void add_term(Rational coeff, const std::vector<LinearForm>& nums,
                  const std::vector<LinearForm>& dens);
};

struct NormalForm {
    SparsePolynomial numerator;
    std::vector<std::pair<LinearForm, int>> denominator;  // canonical factor, multiplicity
    NormalForm(SparsePolynomial n, std::vector<std::pair<LinearForm, int>> d)
        : numerator(std::move(n)), denominator(std::move(d)) {}
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_scale(const RationalFunction& a, const Rational& c);
RationalFunction rf_neg(const RationalFunction& a);
// Multiplies every term by form^power (power may be negative).
RationalFunction rf_mul_form_power(const RationalFunction& a, const LinearForm& form, int power);

NormalForm rf_normalize(const RationalFunction& a);

Rational rf_eval(const RationalFunction& a, const RatVec& point);

// Exact equality as rational functions.  A seeded random-evaluation pre-check
// may short-circuit a negative answer; equality itself is decided by
// normalizing the difference.
bool rf_equal(const RationalFunction& a, const RationalFunction& b, uint64_t seed = 0);

bool rf_is_zero(const RationalFunction& a, uint64_t seed = 0);

// Substitute each variable by a linear form over the target table.  Variables
// missing from `images` map to their namesakes in the target table.
RationalFunction rf_substitute(const RationalFunction& a, VarTablePtr target,
                               const std::map<std::string, LinearForm>& images);

// Substitute var_i -> num_i / w (shared denominator form w over the target
// table).  Used for projective changes of variables.
RationalFunction rf_substitute_rational(const RationalFunction& a, VarTablePtr target,
                                        const std::vector<LinearForm>& nums,
                                        const LinearForm& w);

std::string to_string(const RationalFunction& f);

}  // namespace dualvol

#endif
