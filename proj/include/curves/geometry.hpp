#pragma once

#include "series/polygon.hpp"

#include <array>
#include <string>
#include <vector>

namespace curves {

using exactmath::FieldPtr;
using exactmath::MPoly;
using exactmath::Rational;
using exactmath::Scalar;
using exactmath::UniPoly;
using exactmath::Var;
using series::TruncSeries;

// The second coordinate of a plane curve: z when the polynomial uses z and not y, else y.
Var fibre_var(const MPoly& F);

// Point [X:Z:W] of the (x, z) plane; stored with its first nonzero coordinate equal to 1.
struct ProjPoint {
    std::array<Scalar, 3> c{Scalar(0), Scalar(0), Scalar(1)};

    ProjPoint() = default;
    ProjPoint(const Scalar& X, const Scalar& Z, const Scalar& W);
    static ProjPoint affine(const Scalar& x, const Scalar& z) { return ProjPoint(x, z, Scalar(1)); }
    static ProjPoint Q1() { return ProjPoint(Scalar(0), Scalar(1), Scalar(0)); }
    static ProjPoint X_inf() { return ProjPoint(Scalar(1), Scalar(0), Scalar(0)); }

    bool finite() const { return !c[2].is_zero(); }
    bool is_Q1() const { return c[0].is_zero() && c[2].is_zero(); }
    Scalar x() const { return c[0]; }  // finite points only (W = 1)
    Scalar z() const { return c[1]; }
    std::string str() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

// Line aX + bZ + cW = 0, scaled like ProjPoint.
struct Line {
    std::array<Scalar, 3> c{Scalar(0), Scalar(0), Scalar(1)};
    Line() = default;
    Line(const Scalar& a, const Scalar& b, const Scalar& cc);
    static Line infinity() { return Line(Scalar(0), Scalar(0), Scalar(1)); }
    bool is_infinity() const { return c[0].is_zero() && c[1].is_zero(); }
    bool is_vertical() const { return c[1].is_zero() && !c[0].is_zero(); }
    Scalar vertical_abscissa() const { return -c[2]; }  // x = alpha for a vertical line
    std::string str() const;
    friend bool operator==(const Line& a, const Line& b) { return a.c == b.c; }
};

enum class BranchKind { finite, hyperbolic_q1, parabolic_q1, other_infinite };
std::string to_string(BranchKind k);

struct BranchParam {
    ProjPoint center;
    series::Parametrization param;  // (x(eps), z(eps))
    Line tangent;
    BranchKind kind = BranchKind::finite;
    int ram = 1;
    int places = 1;
    int multiplicity = 1;
    bool vertical = false;
};

// Centre, tangent and kind from a parametrization. Throws "increase N" when
// the known terms do not determine them.
BranchParam make_branch(const series::Parametrization& p);
// Same from a homogeneous triple (X(eps), Z(eps), W(eps)); param is left empty.
BranchParam make_branch_projective(const std::array<TruncSeries, 3>& v);

// Branches of C at a projective point.
std::vector<BranchParam> branches_at(const MPoly& C, const ProjPoint& P, int N = series::default_truncation,
                                     Var vx = exactmath::vars::x, Var vz = exactmath::vars::z);

// Scalar multiple of a projective vector; zero decisions by dynamic evaluation.
bool proportional(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b);
std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b);

// Points of C on the line at infinity, one entry per conjugacy class.
struct InfinitePoint {
    ProjPoint point;
    int conjugates = 1;
    int multiplicity = 1;  // as a root of the top form
};
std::vector<InfinitePoint> points_at_infinity(const MPoly& C, Var vx = exactmath::vars::x,
                                              Var vz = exactmath::vars::z);

// Homogeneous top-degree part in (vx, vz).
MPoly top_form(const MPoly& C, Var vx, Var vz);

// Integer primitive form with positive lex-leading coefficient (rational input),
// or monic for algebraic coefficients.
MPoly normalize(const MPoly& p);

// Projective non-singularity of the point on C.
bool nonsingular_at(const MPoly& C, const ProjPoint& P, Var vx = exactmath::vars::x, Var vz = exactmath::vars::z);

} // namespace curves
