#pragma once

#include "exactmath/mpoly.hpp"

#include <vector>

namespace exactmath {

// Binary form of fixed degree in two labeled variables.
struct HomogForm {
    int degree = 0;
    MPoly form;
    Var v1 = vars::x, v2 = vars::y;

    // a(1, lam) as a polynomial in lam
    UniPoly dehomogenize_first() const;
    std::string str() const { return form.str(); }
};

// Nonzero homogeneous parts, highest degree first.
std::vector<HomogForm> homog_parts(const MPoly& p, Var v1 = vars::x, Var v2 = vars::y);
// Part of exact degree d (possibly zero).
HomogForm homog_part(const MPoly& p, int d, Var v1 = vars::x, Var v2 = vars::y);
MPoly sum_forms(const std::vector<HomogForm>& forms);

// Binary form f(v1, v2) squarefree as a form (distinct projective roots).
bool form_is_squarefree(const HomogForm& f);

} // namespace exactmath
