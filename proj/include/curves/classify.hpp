#pragma once

#include "curves/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curves {

enum class Refinement { none, violet, green };

struct BranchColor {
    bool silver = true;
    Refinement refinement = Refinement::none;
    int axis_mult = 1;      // order of contact with the vertical axis or the line at infinity
    bool nonsingular = true;
    std::string str() const;
    friend bool operator==(const BranchColor& a, const BranchColor& b)
    {
        return a.silver == b.silver && a.refinement == b.refinement;
    }
};

BranchColor classify_branch(const MPoly& F, const BranchParam& br, Var vx = exactmath::vars::x,
                            Var vz = exactmath::vars::z);

enum class Uniformity { uniform_silver, uniform_blue, mixed, empty };
std::string to_string(Uniformity u);

struct UniformityReport {
    Uniformity verdict = Uniformity::empty;
    std::vector<std::pair<BranchParam, BranchColor>> branches;
    // The verdict is only expected to be uniform for curves with a transitive
    // monodromy on the sheets, which is not checked.
    std::string assumption = "Galois-closure property of the covering not verified";
};

struct Axis {
    bool at_infinity = false;
    Scalar a;
    static Axis vertical(const Scalar& a) { return Axis{false, a}; }
    static Axis infinity() { return Axis{true, Scalar(0)}; }
};

UniformityReport uniformity_check(const MPoly& F, const Axis& axis, int N = series::default_truncation,
                                  Var vx = exactmath::vars::x, Var vz = exactmath::vars::z);

// Least exponent k/R of the fibre series with R not dividing k: the order at
// which the conjugate sheets through the branch first differ.
std::optional<Rational> symmetric_witness(const BranchParam& br);

} // namespace curves
