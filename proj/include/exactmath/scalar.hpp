#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactmath {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" form, always with a denominator.
std::string to_string(const Rational& q);
// "num" when integral, "num/den" otherwise.
std::string to_short_string(const Rational& q);
Rational parse_rational(const std::string& s);

class ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

// A rational number, or an element of base[u]/(m(u)) for a squarefree monic m.
// Elements are kept reduced; an element whose representative is constant is
// demoted to the base field, so rationals always take the fast path.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : q_(v) {}
    Scalar(long v) : q_(v) {}
    Scalar(const Integer& z) : q_(z) {}
    Scalar(const Rational& q) : q_(q) { q_.canonicalize(); }

    static Scalar generator(const FieldPtr& K);
    // rep holds coefficients in K->base(), lowest first; reduced mod the modulus
    static Scalar from_rep(const FieldPtr& K, std::vector<Scalar> rep);

    const FieldPtr& field() const { return field_; }
    bool is_rational() const { return !field_; }
    const Rational& rational() const;
    const std::vector<Scalar>& rep() const { return rep_; }

    // Representation is zero. In a ring that is not a field a nonzero
    // representative may still be a zero divisor; see decide_zero.
    bool is_zero() const { return !field_ && sgn(q_) == 0; }
    bool is_one() const { return !field_ && q_ == 1; }

    // Coefficients of this element written over field K (K must contain it).
    std::vector<Scalar> coords_in(const FieldPtr& K) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Throws ZeroDivisorSplit when the element is a zero divisor of its ring,
    // DivisionByZero when it is zero.
    Scalar inverse() const;
    Scalar pow(long e) const;

    std::string str() const;

private:
    FieldPtr field_;
    Rational q_;
    std::vector<Scalar> rep_;
};

class ExtField {
public:
    // modulus: coefficients (lowest first) over base, degree >= 2; made monic.
    static FieldPtr make(FieldPtr base, std::vector<Scalar> modulus, std::string name = "");

    const FieldPtr& base() const { return base_; }
    const std::vector<Scalar>& modulus() const { return modulus_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    int depth() const { return depth_; }
    const std::string& name() const { return name_; }
    // Degree over the rationals.
    int absolute_degree() const;
    std::string modulus_str() const;

private:
    ExtField() = default;
    FieldPtr base_;
    std::vector<Scalar> modulus_;
    int depth_ = 1;
    std::string name_;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised by inverse() on a zero divisor: field's modulus = factor1 * factor2,
// both monic with coefficients in field->base().
struct ZeroDivisorSplit : std::runtime_error {
    FieldPtr field;
    std::vector<Scalar> factor1, factor2;
    ZeroDivisorSplit(FieldPtr f, std::vector<Scalar> a, std::vector<Scalar> b);
};

struct ExtensionBudgetExceeded : std::runtime_error {
    std::string blocking_factor;
    explicit ExtensionBudgetExceeded(const std::string& factor);
};

// Maximum tower depth for new extensions (default 2).
int tower_depth_limit();
void set_tower_depth_limit(int d);

// Smallest field containing both (one must contain the other).
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
bool field_contains(const FieldPtr& big, const FieldPtr& small);

// Exact zero decision under dynamic evaluation: may throw ZeroDivisorSplit.
bool decide_zero(const Scalar& a);

Scalar lift(const Scalar& a, const FieldPtr& K);
// Absolute trace of a (an element of K) down to the rationals.
Scalar trace(const Scalar& a, const FieldPtr& K);

} // namespace exactmath
