#pragma once

#include "degeneration/family.hpp"
#include "exactmath/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degeneration {

using exactmath::Complex;
using exactmath::Real;

// a x + b y + c = 0, scaled so the first nonzero of (a, b) is 1.
struct PlaneLine {
    Scalar a, b, c;
    int conjugates = 1;
    std::string str() const;
};

struct LineFactorization {
    bool complete = false;         // f is a product of deg f distinct lines
    std::vector<PlaneLine> lines;  // the classes found
    int found = 0;                 // lines found, conjugates counted
    std::string detail;
};
LineFactorization line_factors(const MPoly& f);

struct DegenerateVerdict {
    bool pass = false;
    MPoly fiber;
    std::array<Scalar, 2> O;  // centre at the degenerate parameter, plane coordinates
    std::vector<PlaneLine> lines;
    std::string detail;
};
// The degenerate fibre is the union of the lines from O through the points
// of the source curve on the target plane.
DegenerateVerdict degenerate_fiber_check(const CurveFamily& fam);

// num/den in the parameter, reduced; den primitive with positive leading coefficient.
struct RationalFunction {
    UniPoly num, den;
    static RationalFunction make(const UniPoly& n, const UniPoly& d);
    bool is_constant() const { return num.degree() <= 0 && den.degree() <= 0; }
    std::string str(const std::string& var) const;
};

// -F_x/F_y at (0, a) as a function of the parameter. The point must lie on
// every fibre.
RationalFunction tangent_gradient(const CurveFamily& fam, const Scalar& a);

struct AsymptoticOptions {
    bool weak = false;             // weak form: F_y(0, a_j) != 0 at sampled parameters
    bool at_infinity = false;      // also require fixed points and a fixed tangent on W = 0
    std::vector<Scalar> samples{Scalar(1), Scalar(2), Scalar(3), Scalar(-1), Scalar(Rational(1, 2)), Scalar(-2), Scalar(5)};
};

struct AxisPoint {
    Scalar a;
    int conjugates = 1;
    std::optional<RationalFunction> gradient;  // when F_y is not identically zero
    bool fixed_tangent = false;
};

struct AsymptoticVerdict {
    bool pass = false;
    bool fixed_points = false;  // H(0, Y, W) is a fixed form with m distinct finite roots, none at 0
    bool tangents = false;      // strict or weak condition, per the options
    bool infinity = true;       // only evaluated with at_infinity
    std::string irreducible;    // certificate at one sampled fibre, informational
    std::vector<AxisPoint> points;
    std::vector<std::string> failures;
    std::string mode;
};
AsymptoticVerdict asymptotic_check(const CurveFamily& fam, const AsymptoticOptions& opts = {});

// Singular points of a plane curve f(x, y), affine and at infinity.
struct SingularPoint {
    std::string where;   // "(x, y)" or "[X:Y:0]"
    int conjugates = 1;
    bool node = false;
    int order = 0;        // degree of the lowest local form
};
std::optional<std::vector<SingularPoint>> singular_points(const MPoly& f);

// "irreducible" when every singular point is a node and there are fewer than
// deg - 1 of them, else "inconclusive: ...".
std::string irreducibility_certificate(const MPoly& f);

struct NumericNode {
    Complex x, y;
    std::array<Complex, 2> d1, d2;  // tangent directions
};

struct NodeRecord {
    Scalar t;
    Scalar x, y;
    int conjugates = 1;
    Scalar A, B, C;     // f_xx, f_xy, f_yy; tangents A dx^2 + 2B dx dy + C dy^2 = 0
    bool nodal = true;  // distinct tangents
    std::vector<NumericNode> numeric;  // one per embedding
    std::string slopes() const;        // the tangent cone as a binary form in dx, dy
};

// Affine singular points of every sampled fibre. Throws when a singular point
// has a vanishing quadratic part.
std::vector<NodeRecord> node_track(const CurveFamily& fam, const std::vector<Scalar>& samples);

struct NodePath {
    std::vector<Complex> x, y;
    std::vector<std::array<std::array<Complex, 2>, 2>> tangents;  // node tangent directions, per sample
    std::vector<Real> gaps;           // tangent gap to the incident line pair, per sample
    std::vector<Real> position_gaps;  // distance to the pair's intersection
    int line_i = -1, line_j = -1;     // indices into the numeric lines
    bool monotone = false;
    bool pass = false;
};

enum class SpecVerdict { pass, fail, inconclusive };
std::string to_string(SpecVerdict v);

struct GoodSpecReport {
    SpecVerdict verdict = SpecVerdict::inconclusive;
    std::vector<std::array<Complex, 3>> lines;  // numeric degenerate lines
    std::vector<std::string> line_names;        // the exact line of each numeric one
    std::vector<Scalar> samples;
    std::vector<NodePath> paths;
    std::string detail;
};

// Parameters t_star + 2^-k, k = 1..n.
std::vector<Scalar> approach_sequence(const CurveFamily& fam, int n = 10);

GoodSpecReport good_specialization_check(const CurveFamily& fam, const std::vector<Scalar>& samples,
                                         const Real& tolerance = Real("1e-3"));

// |sin| of the angle between two complex directions.
Real direction_gap(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b);

} // namespace degeneration
