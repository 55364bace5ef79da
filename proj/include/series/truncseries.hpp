#pragma once

#include "exactmath/mpoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace series {

using exactmath::FieldPtr;
using exactmath::Integer;
using exactmath::Rational;
using exactmath::Scalar;
using exactmath::UniPoly;

// Sum of c_k x^{k/r}. Coefficients are known for every exponent <= precision;
// an empty precision means the series is exact (a Laurent polynomial).
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(const Scalar& c, std::optional<Rational> prec = std::nullopt);
    static TruncSeries monomial(const Scalar& c, const Rational& e, std::optional<Rational> prec = std::nullopt);
    static TruncSeries from_uni(const UniPoly& p, std::optional<Rational> prec = std::nullopt);
    // c_k x^{k/r} for the given map
    static TruncSeries from_terms(int r, std::map<long, Scalar> terms, std::optional<Rational> prec = std::nullopt);
    // exact big-O term: zero known up to prec
    static TruncSeries zero(const Rational& prec);

    int ramification() const { return r_; }
    const std::optional<Rational>& precision() const { return prec_; }
    bool is_exact() const { return !prec_; }
    const std::map<long, Scalar>& terms() const { return c_; }
    // true when every known coefficient is zero
    bool is_zero() const { return c_.empty(); }

    Scalar coeff(const Rational& e) const;  // throws beyond the precision
    // least exponent with a nonzero coefficient, empty when none is known
    std::optional<Rational> ord() const;
    Scalar lead() const;
    FieldPtr field() const;

    TruncSeries regrid(int r) const;
    TruncSeries truncated(const Rational& prec) const;
    TruncSeries exact() const;  // forget the precision (treat known part as exact)
    // x -> x^q
    TruncSeries compose_power(int q) const;
    TruncSeries shifted(const Rational& e) const;  // multiply by x^e

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    TruncSeries scaled(const Scalar& s) const;
    TruncSeries pow(int e) const;

    // 1/b. An exact series with more than one term needs a precision cap.
    TruncSeries inverse(std::optional<Rational> cap = std::nullopt) const;

    // coefficientwise map
    template <class Fn>
    TruncSeries map(Fn&& fn) const
    {
        TruncSeries out = *this;
        out.c_.clear();
        for (const auto& [k, v] : c_) {
            Scalar w = fn(v);
            if (!w.is_zero())
                out.c_.emplace(k, w);
        }
        return out;
    }

    // same known coefficients and the same precision
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    // agreement up to (and including) exponent e
    bool agrees_with(const TruncSeries& o, const Rational& e) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    int r_ = 1;
    std::optional<Rational> prec_;
    std::map<long, Scalar> c_;
};

// Precision arithmetic where an empty optional is +infinity.
std::optional<Rational> min_prec(const std::optional<Rational>& a, const std::optional<Rational>& b);

// Evaluate p(x, s(x)) where p is given by its coefficients in y (polynomials in x).
TruncSeries eval_at(const std::vector<UniPoly>& ycoeffs, const TruncSeries& s);
std::vector<UniPoly> y_coefficients(const exactmath::MPoly& G, exactmath::Var vx, exactmath::Var vy);

} // namespace series
