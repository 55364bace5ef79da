#pragma once

#include "exactmath/unipoly.hpp"

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace exactmath {

// Distinct rational roots of a rational polynomial, increasing.
std::vector<Rational> rational_roots(const UniPoly& p);

// Number of distinct real roots of a squarefree rational polynomial in (a, b].
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

struct SquarefreeRoots {
    std::vector<std::pair<UniPoly, int>> factors;   // monic squarefree factors with multiplicity
    std::vector<std::pair<Scalar, int>> roots;      // roots lying in the coefficient field
    std::vector<std::pair<UniPoly, int>> residual;  // what is left once those roots are peeled
};

SquarefreeRoots squarefree_roots(const UniPoly& p);

// A class of conjugate roots of a polynomial: either a root in the coefficient
// field (own_field null) or the generator of a new extension own_field whose
// modulus is `minpoly`.
struct RootClass {
    Scalar value;
    FieldPtr own_field;
    UniPoly minpoly;
    int multiplicity = 1;
    int degree() const { return minpoly.degree(); }
    // number of distinct roots over the rationals this class stands for
    int conjugates() const;
};

// Root classes of p over the field of its coefficients, or over base when
// given (base must contain the coefficients). New extensions count against
// the tower budget.
std::vector<RootClass> root_classes(const UniPoly& p, const FieldPtr& base = nullptr);

// Class for one monic squarefree factor over its coefficient field or base.
RootClass make_class(const UniPoly& factor, int multiplicity = 1, const FieldPtr& base = nullptr);

// Run fn on a root class. When fn hits a zero divisor of the class's own field
// the modulus is split and fn re-run on each factor. Returns one entry per
// final class.
template <class Fn>
auto split_eval(const RootClass& rc, Fn&& fn)
    -> std::vector<std::pair<RootClass, std::invoke_result_t<Fn&, const RootClass&>>>
{
    using R = std::invoke_result_t<Fn&, const RootClass&>;
    std::vector<std::pair<RootClass, R>> out;
    try {
        out.emplace_back(rc, fn(rc));
        return out;
    } catch (const ZeroDivisorSplit& e) {
        if (!rc.own_field || e.field != rc.own_field)
            throw;
        for (const auto* f : {&e.factor1, &e.factor2}) {
            RootClass sub = make_class(UniPoly(*f), rc.multiplicity, rc.own_field->base());
            auto part = split_eval(sub, fn);
            for (auto& p : part)
                out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace exactmath
