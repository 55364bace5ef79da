#pragma once

#include "exactmath/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace exactmath {

// Dense univariate polynomial, coefficients lowest first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> c);
    UniPoly(const Scalar& c0);
    UniPoly(int c0) : UniPoly(Scalar(c0)) {}
    static UniPoly monomial(const Scalar& c, int k);
    static UniPoly variable() { return monomial(Scalar(1), 1); }
    // from roots: prod (x - r)
    static UniPoly from_roots(const std::vector<Scalar>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    Scalar lead() const;
    // smallest field holding every coefficient
    FieldPtr field() const;
    bool is_rational() const;
    int low_degree() const;  // order at 0, -1 for zero

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Scalar& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Scalar eval(const Scalar& x) const;
    UniPoly compose(const UniPoly& inner) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(int e) const;
    UniPoly shift(int k) const;  // multiply by x^k
    UniPoly taylor_shift(const Scalar& a) const;  // p(x + a)
    // p(x) with x -> s*x
    UniPoly scale_var(const Scalar& s) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient, throws if remainder
UniPoly operator%(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& p);

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, 0 if both zero
struct XGcd {
    UniPoly g, s, t;  // s*a + t*b = g, g monic
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);

// Yun's algorithm: p = lc * prod f_i^i, returned as (f_i, i) with f_i monic, nontrivial.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

// Resultant over a field, Sylvester convention.
Scalar resultant(const UniPoly& a, const UniPoly& b);
Scalar discriminant(const UniPoly& p);

// Rational coefficients only: content removal to a primitive integer polynomial.
UniPoly primitive_integer(const UniPoly& p);

} // namespace exactmath
