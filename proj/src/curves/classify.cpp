#include "curves/classify.hpp"

#include "exactmath/roots.hpp"

#include <stdexcept>

namespace curves {

using exactmath::decide_zero;
using exactmath::RootClass;

std::string BranchColor::str() const
{
    std::string s = silver ? "silver" : "blue";
    if (refinement == Refinement::violet)
        s += "/violet";
    else if (refinement == Refinement::green)
        s += "/green";
    return s;
}

std::string to_string(Uniformity u)
{
    switch (u) {
    case Uniformity::uniform_silver:
        return "uniform-silver";
    case Uniformity::uniform_blue:
        return "uniform-blue";
    case Uniformity::mixed:
        return "MIXED";
    case Uniformity::empty:
        return "empty";
    }
    return "?";
}

BranchColor classify_branch(const MPoly& F, const BranchParam& br, Var vx, Var vz)
{
    if (br.center.is_Q1())
        throw std::invalid_argument("branch is centred at Q1: move it to finite position first");
    BranchColor col;
    col.nonsingular = nonsingular_at(F, br.center, vx, vz);
    auto axis = br.center.finite() ? series::AxisLine::vertical(br.center.x()) : series::AxisLine::infinity();
    col.axis_mult = series::branch_mult(F, br.param, axis, vx, vz);
    col.silver = col.nonsingular && col.axis_mult == 1;
    if (!col.silver)
        col.refinement = col.nonsingular ? Refinement::violet : Refinement::green;
    else if (br.center.finite() && decide_zero(br.center.x()))
        col.refinement = Refinement::green;
    return col;
}

UniformityReport uniformity_check(const MPoly& F, const Axis& axis, int N, Var vx, Var vz)
{
    UniformityReport rep;
    auto add_at = [&](const ProjPoint& P) {
        for (const auto& br : branches_at(F, P, N, vx, vz))
            rep.branches.emplace_back(br, classify_branch(F, br, vx, vz));
    };
    if (axis.at_infinity) {
        for (const auto& ip : points_at_infinity(F, vx, vz))
            if (!ip.point.is_Q1())
                add_at(ip.point);
    } else {
        UniPoly f = F.eval(vx, axis.a).to_uni(vz);
        if (f.is_zero())
            throw std::invalid_argument("the axis is a component of the curve");
        if (f.degree() > 0)
            for (const auto& rc : exactmath::root_classes(f)) {
                auto per = exactmath::split_eval(rc, [&](const RootClass& c) {
                    std::vector<std::pair<BranchParam, BranchColor>> got;
                    for (const auto& br : branches_at(F, ProjPoint::affine(axis.a, c.value), N, vx, vz))
                        got.emplace_back(br, classify_branch(F, br, vx, vz));
                    return got;
                });
                for (auto& [cls, got] : per)
                    rep.branches.insert(rep.branches.end(), got.begin(), got.end());
            }
    }
    int silver = 0, blue = 0;
    for (const auto& [br, col] : rep.branches)
        (col.silver ? silver : blue) += 1;
    if (silver + blue == 0)
        rep.verdict = Uniformity::empty;
    else if (blue == 0)
        rep.verdict = Uniformity::uniform_silver;
    else if (silver == 0)
        rep.verdict = Uniformity::uniform_blue;
    else
        rep.verdict = Uniformity::mixed;
    return rep;
}

std::optional<Rational> symmetric_witness(const BranchParam& br)
{
    const TruncSeries& z = br.param.y;
    // exponents of z are k / r in the local parameter, x - alpha = tau^ram
    for (const auto& [k, c] : z.terms()) {
        Rational e(k, z.ramification());
        e.canonicalize();
        Rational in_x = e / br.ram;
        if (in_x.get_den() != 1) {
            in_x.canonicalize();
            return in_x;
        }
    }
    return std::nullopt;
}

} // namespace curves
