#pragma once

#include "series/lift.hpp"

#include <utility>
#include <vector>

namespace series {

// Support coordinates: i = exponent of the base variable, j = of the fibre variable.
struct PolygonSegment {
    int i_left = 0, j_left = 0;    // endpoint with the smaller j
    int i_right = 0, j_right = 0;  // endpoint with the larger j
    Rational slope;                // (i_left - i_right) / (j_right - j_left)
    int length = 0;                // j_right - j_left
    int lattice_length = 0;        // gcd of the two differences
    UniPoly edge;                  // sum over the segment of a_ij c^(j - j_left)
    UniPoly phi;                   // edge(c) = phi(c^q), q the slope denominator
    bool infinite = false;         // the factor y^j_left, here j_right = j_left + length
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> support;  // (i, j)
    std::vector<PolygonSegment> segments;      // increasing slope, infinite last
    int y_multiplicity = 0;                    // order of G(0, y) at 0
    int vertical_component = 0;                // power of the base variable dividing G
};

// Polygon of a polynomial already centred at the origin, in local variables (x, y).
NewtonPolygon newton_polygon_local(const MPoly& G);

// A local chart around a projective point [X:Y:W] of the curve F(x, y) = 0.
// G is in local variables (x, y) with the point at the origin and x the base.
enum class ChartKind { affine, direction, q1 };
struct Chart {
    ChartKind kind = ChartKind::affine;
    Scalar a, b;  // affine: the point; direction: b = lambda for [1:lambda:0]
    MPoly G;
};
Chart make_chart(const MPoly& F, const Scalar& X, const Scalar& Y, const Scalar& W,
                 Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

// Polygon of F at a point. Throws when the point is not on the curve.
NewtonPolygon newton_polygon(const MPoly& F, const Scalar& a, const Scalar& b, Var vx = exactmath::vars::x,
                             Var vy = exactmath::vars::y);
NewtonPolygon newton_polygon_at_infinity(const MPoly& F, const Scalar& X, const Scalar& Y,
                                         Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

// A place given as (x(tau), y(tau)); Laurent series allowed for centres at infinity.
struct Parametrization {
    TruncSeries x, y;
};

struct PuiseuxBranch {
    Parametrization param;  // global coordinates
    int ram = 1;            // the base local coordinate is tau^ram
    int places = 1;         // conjugate places this entry stands for
    int multiplicity = 1;   // > 1 for a repeated component
    bool vertical = false;  // the base coordinate is constant (component x = a)
    bool unresolved = false;
    FieldPtr field;
};

constexpr int default_polygon_depth = 8;

// Places of G at the origin (local variables x, y). The fibre series is known to tau^N.
std::vector<PuiseuxBranch> puiseux_local(const MPoly& G, int N = default_truncation,
                                         int max_depth = default_polygon_depth);
// Places of F through a chart, returned in global coordinates.
std::vector<PuiseuxBranch> puiseux_branches(const Chart& chart, int N = default_truncation,
                                            int max_depth = default_polygon_depth);
std::vector<PuiseuxBranch> puiseux_at(const MPoly& F, const Scalar& a, const Scalar& b, int N = default_truncation,
                                      Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

struct AxisLine {
    bool at_infinity = false;
    Scalar a;
    static AxisLine vertical(const Scalar& a) { return AxisLine{false, a}; }
    static AxisLine infinity() { return AxisLine{true, Scalar(0)}; }
};

// F evaluated along the parametrization.
TruncSeries eval_along(const MPoly& F, const Parametrization& p, Var vx = exactmath::vars::x,
                       Var vy = exactmath::vars::y);

// Order of the line's equation along the place.
int branch_mult(const MPoly& F, const Parametrization& p, const AxisLine& line, Var vx = exactmath::vars::x,
                Var vy = exactmath::vars::y);

} // namespace series
