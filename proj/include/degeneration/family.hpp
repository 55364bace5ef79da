#pragma once

#include "exactmath/mpoly.hpp"
#include "exactmath/solve.hpp"

#include <array>
#include <string>
#include <vector>

namespace degeneration {

using exactmath::MPoly;
using exactmath::Rational;
using exactmath::Scalar;
using exactmath::UniPoly;
using exactmath::Var;

using Vec3 = std::array<Scalar, 3>;
std::string to_string(const Vec3& v);

// The plane {origin + X*u + Y*v}; (X, Y) are its internal coordinates.
struct Plane {
    Vec3 origin{Scalar(0), Scalar(0), Scalar(0)};
    Vec3 u{Scalar(1), Scalar(0), Scalar(0)};
    Vec3 v{Scalar(0), Scalar(1), Scalar(0)};

    static Plane z_equals_0() { return Plane{}; }
    Vec3 normal() const;
    // n . (p - origin) as a polynomial in x, y, z
    MPoly equation() const;
    bool contains(const Vec3& p) const;
    // internal coordinates of a point of the plane
    std::array<Scalar, 2> coordinates(const Vec3& p) const;
    // internal coordinates as affine functions of x, y, z, exact on the plane
    std::array<MPoly, 2> coordinate_functions() const;
    // origin + X*u + Y*v with X, Y the given variables
    std::array<MPoly, 3> point(Var X, Var Y) const;
};

// Common zeros of two polynomials in x, y, z.
struct SpaceCurve {
    MPoly F1, F2;
};

// Plane sections x = c are finite and some is nonempty (sampled).
bool dimension_one_check(const SpaceCurve& C, std::string* detail = nullptr);

// Centres origin + t*direction.
struct CenterLine {
    Vec3 origin, direction;
    std::array<MPoly, 3> at(Var t) const;
};

struct CurveFamily {
    MPoly H;                   // homogeneous in X, Y, W with coefficients in Q[param]
    Var param = exactmath::vars::t;
    Scalar t_star;             // parameter of the degenerate fibre
    int degree = 0;
    int expected_degree = 0;   // points of the source curve on the target plane
    Plane target;
    CenterLine centers;
    std::vector<exactmath::PointClass> transversal;  // source curve on the target plane, internal coordinates
    std::vector<std::string> notes;                  // stripped factors and warnings
    std::string str() const;
};

// Projection of C from the moving centre into the plane omega.
CurveFamily cone_family(const SpaceCurve& C, const CenterLine& centers, const Plane& omega,
                        Var param = exactmath::vars::t);

// Wrap a homogeneous H(X, Y, W, param) as a family.
CurveFamily family_from_form(const MPoly& H, Var param, const Scalar& t_star);

struct MirrorConfig {
    Plane omega1;  // holds the source curve
    Plane omega2;  // target
    MPoly G;       // source curve in omega1's internal coordinates, written in x, y
    Vec3 P;        // centre off both planes
    Vec3 Q;        // pivot on omega2
    // empty when the configuration is valid
    std::string violation() const;
};

// Centres Q + s (P - Q); the degenerate fibre is s = 0.
CurveFamily mirror_family(const MirrorConfig& cfg);

// H at param = t0, with W = 1, written in x, y.
MPoly fiber_at(const CurveFamily& fam, const Scalar& t0);

} // namespace degeneration
