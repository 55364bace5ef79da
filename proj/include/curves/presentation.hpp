#pragma once

#include "curves/geometry.hpp"

#include <string>
#include <vector>

namespace curves {

struct CheckVerdict {
    bool pass = true;
    std::string witness;
};

enum class CriticalKind { vertical_tangency, node, violation };
std::string to_string(CriticalKind k);

// A class of conjugate critical points (x, y) of the projection to x.
struct CriticalPoint {
    Scalar x, y;
    UniPoly x_minpoly;  // over the rationals
    int conjugates = 1;
    int gcd_degree = 1;
    int multiplicity = 2;  // of y as a root of F(x, y)
    CriticalKind kind = CriticalKind::violation;
    std::string str() const;
};

struct PresentationReport {
    int m = 0;
    // c1 line at infinity transverse, c2 fibre over 0, c3 top form, c4 special fibres, c5 singularity types
    std::array<CheckVerdict, 5> checks;
    std::vector<CriticalPoint> critical;
    bool pass() const;
};

PresentationReport presentation_check(const MPoly& F, Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

struct CriticalFiber {
    Scalar x;
    UniPoly x_minpoly;
    int conjugates = 1;
    int collision_pairs = 0;     // roots of multiplicity exactly 2 in the fibre
    int higher_collisions = 0;   // roots of multiplicity 3 or more
    bool ok() const { return collision_pairs == 1 && higher_collisions == 0; }
};

// Fibre-level collision structure over each critical abscissa. Throws when F
// is not presented.
std::vector<CriticalFiber> critical_fiber_analysis(const MPoly& F, Var vx = exactmath::vars::x,
                                                   Var vy = exactmath::vars::y);

} // namespace curves
