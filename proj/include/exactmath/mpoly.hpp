#pragma once

#include "exactmath/unipoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exactmath {

using Var = int;

// Process-wide variable names. The first ids are fixed.
Var var_id(std::string_view name);
const std::string& var_name(Var v);

namespace vars {
inline constexpr Var x = 0, y = 1, z = 2, X = 3, Y = 4, W = 5, t = 6, s = 7;
inline constexpr Var u = 8, v = 9, w = 10, mu = 11, lam = 12;
} // namespace vars

// sorted by variable, positive exponents only
using Monomial = std::vector<std::pair<Var, int>>;

// lex order, smaller variable id more significant
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int exponent(const Monomial& m, Var v);
int total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);

// Sparse multivariate polynomial over Scalar.
class MPoly {
public:
    using Terms = std::map<Monomial, Scalar, MonomialLess>;

    MPoly() = default;
    MPoly(const Scalar& c);
    MPoly(int c) : MPoly(Scalar(c)) {}
    static MPoly variable(Var v, int e = 1);
    static MPoly term(const Scalar& c, Monomial m);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    size_t size() const { return t_.size(); }
    int total_degree() const;
    int degree(Var v) const;
    int low_degree(Var v) const;
    std::vector<Var> variables() const;
    bool involves(Var v) const { return degree(v) > 0; }
    FieldPtr field() const;
    Scalar coeff(const Monomial& m) const;
    // leading term in lex order
    const Monomial& lead_monomial() const;
    const Scalar& lead_coeff() const;

    // coefficients with respect to v, index = power of v
    std::vector<MPoly> coefficients(Var v) const;
    static MPoly from_coefficients(Var v, const std::vector<MPoly>& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    MPoly scaled(const Scalar& c) const;
    MPoly pow(int e) const;

    MPoly derivative(Var v) const;
    MPoly subs(Var v, const MPoly& e) const;
    MPoly subs(const std::map<Var, MPoly>& m) const;  // simultaneous
    MPoly eval(Var v, const Scalar& a) const;
    Scalar eval_all(const std::map<Var, Scalar>& point) const;  // every variable must be bound
    MPoly homogeneous_part(int d) const;
    // homogeneous part of degree d with respect to the listed variables only
    MPoly homogeneous_part(int d, const std::vector<Var>& vs) const;
    int total_degree(const std::vector<Var>& vs) const;
    // W^d * p(X/W, ...), the listed variables homogenized with hvar
    MPoly homogenize(const std::vector<Var>& vs, Var hvar, int d = -1) const;
    // divide out the largest monomial dividing every term
    MPoly strip_monomial(Monomial* removed = nullptr) const;
    MPoly monic_lex() const;  // scaled so the lex-leading coefficient is 1

    UniPoly to_uni(Var v) const;  // requires no other variable
    static MPoly from_uni(const UniPoly& p, Var v);

    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    Terms t_;
};

// Exact division; throws std::domain_error when b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
bool mdivides(const MPoly& b, const MPoly& a, MPoly* quotient = nullptr);

// Res_v(p, q) by the subresultant PRS, Sylvester convention.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

// For polynomials in v and one more variable `other`: gcd over Q[other] of the
// v-coefficients, removed. Returns the primitive part; content goes to *content.
MPoly primitive_part(const MPoly& p, Var v, Var other, UniPoly* content = nullptr);

// scalar multiple test: a = c * b for a nonzero scalar c
bool proportional(const MPoly& a, const MPoly& b, Scalar* ratio = nullptr);

} // namespace exactmath
