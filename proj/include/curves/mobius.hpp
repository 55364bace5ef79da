#pragma once

#include "curves/geometry.hpp"

#include <string>
#include <vector>

namespace curves {

// (x, z) -> (x, (a z + b) / (c z + d)), coefficients polynomials in x.
struct MobiusMap {
    UniPoly a{Scalar(1)}, b, c, d{Scalar(1)};

    static MobiusMap identity() { return {}; }
    // (x, z) -> (x, (x - alpha) z)
    static MobiusMap shear(const Scalar& alpha);
    // empty when valid, else the violated invariant
    std::string violation() const;
    void validate() const;
    bool is_identity() const;  // as a rational map
    std::string str(const std::string& var = "z") const;
};

// Image of C under g, content in x removed, integer-normalized.
MPoly apply_mobius(const MPoly& C, const MobiusMap& g, Var vx = exactmath::vars::x, Var vz = exactmath::vars::z);
MobiusMap mobius_inverse(const MobiusMap& g);
// outer after inner
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

// Centre of the image branch from the case rules. B bounds the pole order of
// parabolic branches (the degree of the curve).
ProjPoint predict_center(const BranchParam& br, const MobiusMap& g, int B);
// Image branch computed from the parametrization.
BranchParam transport_branch(const BranchParam& br, const MobiusMap& g);

struct TransformLog {
    MPoly curve;
    std::vector<MobiusMap> maps;
    std::vector<Scalar> alphas;  // shear parameters, when shearing
    int rounds() const { return static_cast<int>(maps.size()); }
};

// Top form is a scalar times a pure power of x.
bool meets_infinity_only_at_q1(const MPoly& C, Var vx = exactmath::vars::x, Var vz = exactmath::vars::z);

TransformLog shear_to_Q1(const MPoly& C, const Scalar& alpha, int max_iter, Var vx = exactmath::vars::x,
                         Var vz = exactmath::vars::z);

enum class MoverKind {
    to_q1,    // send every finite branch on the listed axes to Q1
    gather,   // the same, keeping hyperbolic and parabolic branches at Q1 in place
    release,  // keep finite points fixed, move hyperbolic branches at Q1 to finite position
};

struct MoverSpec {
    MoverKind kind = MoverKind::to_q1;
    std::vector<Scalar> axes;                       // axes carrying the points to move (to_q1, gather)
    std::vector<Scalar> tangent_axes;               // tangents of hyperbolic branches at Q1 (gather, release)
    std::vector<std::pair<Scalar, Scalar>> points;  // finite points (alpha, beta)
    int bound = 0;                                  // pole-order bound for the order condition
    bool nonvanishing_c = true;                     // release: c nonzero on every listed axis
    bool order_condition = true;                    // release: deg a, deg b far below deg c, deg d
};

// Build and verify a map meeting the spec; throws listing the clash.
MobiusMap build_mover(const MoverSpec& spec);

struct IsolationResult {
    TransformLog log;
    BranchParam branch;
    std::vector<ProjPoint> centers;  // after each round, starting with the input centre
};

// Repeat (x, z) -> (x, (z - beta)/(x - alpha) - beta/alpha), recentring each
// round, until the branch is the only one at its centre.
IsolationResult isolate_branch(const MPoly& C, const BranchParam& br, int max_iter, Var vx = exactmath::vars::x,
                               Var vz = exactmath::vars::z);

} // namespace curves
