#pragma once

#include "curves/geometry.hpp"

#include <string>
#include <vector>

namespace curves {

// The line a*x + b*y = t0, with (a, b) = (1, 0) or (-lambda, 1).
struct Asymptote {
    Scalar a, b, t0;
    int r = 1;           // multiplicity of the direction in the top form
    int s = 1;           // order used for the line polynomial
    int conjugates = 1;  // lines this entry stands for
    bool simple() const { return r == 1; }
    std::string provenance() const { return simple() ? "simple-factor" : "multiple-factor"; }
    std::string str() const;
};

// Every asymptote of F(x, y) = 0, one entry per conjugacy class.
std::vector<Asymptote> asymptotes(const MPoly& F, Var vx = exactmath::vars::x, Var vy = exactmath::vars::y);

// Number of asymptotes counted with conjugates.
int asymptote_count(const std::vector<Asymptote>& as);

} // namespace curves
