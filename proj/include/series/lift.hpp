#pragma once

#include "exactmath/roots.hpp"
#include "series/truncseries.hpp"

#include <vector>

namespace series {

using exactmath::MPoly;
using exactmath::Var;

constexpr int default_truncation = 16;

enum class LiftScheme { successive, raphson };

// Power series root s of G(x, s(x)) = 0 with s(0) = y0, correct mod x^{N+1}.
// successive adds one term per step; raphson doubles the known order.
TruncSeries newton_lift(const MPoly& G, const Scalar& y0, int N, LiftScheme scheme = LiftScheme::successive,
                        Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

// Number of correction steps the last newton_lift call on this thread took.
int last_lift_steps();

struct Sheet {
    Scalar a;            // eta(0)
    TruncSeries eta;     // coefficients in field (null for the rationals)
    FieldPtr field;      // field generated by a, if a is not rational
    int conjugates = 1;  // sheets this entry stands for
};

struct FibreFactorization {
    MPoly F;
    Var vx = exactmath::vars::x, vy = exactmath::vars::y;
    int m = 0;
    int N = 0;
    std::vector<Sheet> sheets;
    // e_k of the sheets as rational series, k = 0..m
    std::vector<TruncSeries> elementary;
    bool vieta_ok = false;
    bool product_ok = false;    // direct product check; only run when every sheet is rational
    bool product_checked = false;
};

// F monic in y of degree m = total degree, F(0, y) squarefree.
FibreFactorization factor_fibrewise(const MPoly& F, int N = default_truncation,
                                    LiftScheme scheme = LiftScheme::successive, Var vx = exactmath::vars::x,
                                    Var vy = exactmath::vars::y);

// Absolute trace of each coefficient, for a series over field K.
TruncSeries trace_series(const TruncSeries& s, const FieldPtr& K);

} // namespace series
