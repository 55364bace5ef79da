#include "curves/presentation.hpp"

#include "exactmath/homog.hpp"
#include "exactmath/roots.hpp"
#include "exactmath/solve.hpp"

#include <stdexcept>

namespace curves {

using exactmath::decide_zero;
using exactmath::RootClass;

std::string to_string(CriticalKind k)
{
    switch (k) {
    case CriticalKind::vertical_tangency:
        return "vertical-tangency";
    case CriticalKind::node:
        return "node";
    case CriticalKind::violation:
        return "violation";
    }
    return "?";
}

std::string CriticalPoint::str() const
{
    std::string s = "x = " + x.str();
    if (!x.is_rational())
        s += " (root of " + x_minpoly.str("x") + ")";
    if (gcd_degree == 1)
        s += ", y = " + y.str();
    return s;
}

bool PresentationReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

// Multiplicity of r as a root of p.
int root_multiplicity(UniPoly p, const Scalar& r)
{
    int k = 0;
    while (!p.is_zero() && decide_zero(p.eval(r))) {
        p = divmod(p, UniPoly({-r, Scalar(1)})).first;
        ++k;
    }
    return k;
}

UniPoly discriminant_in_x(const MPoly& F, Var vx, Var vy)
{
    MPoly R = exactmath::resultant(F, F.derivative(vy), vy);
    return R.to_uni(vx);
}

} // namespace

PresentationReport presentation_check(const MPoly& F, Var vx, Var vy)
{
    if (F.is_zero() || F.total_degree({vx, vy}) < 1)
        throw std::invalid_argument("presentation check needs a nonconstant polynomial");
    PresentationReport rep;
    const int m = F.total_degree({vx, vy});
    rep.m = m;

    int dy = F.degree(vy);
    if (dy != m)
        rep.checks[0] = {false, "deg_y F = " + std::to_string(dy) + " < " + std::to_string(m) +
                                    ": [0:1:0] lies on the curve"};
    else
        rep.checks[0] = {true, "deg_y F = " + std::to_string(m)};

    UniPoly f0 = F.eval(vx, Scalar(0)).to_uni(vy);
    if (f0.degree() != m)
        rep.checks[1] = {false, "F(0,y) = " + f0.str("y") + " has degree " + std::to_string(f0.degree())};
    else if (!exactmath::is_squarefree(f0))
        rep.checks[1] = {false, "F(0,y) = " + f0.str("y") + " has a repeated root"};
    else
        rep.checks[1] = {true, "F(0,y) = " + f0.str("y")};

    auto top = exactmath::homog_part(F, m, vx, vy);
    if (exactmath::form_is_squarefree(top))
        rep.checks[2] = {true, "P_" + std::to_string(m) + " = " + top.str()};
    else
        rep.checks[2] = {false, "P_" + std::to_string(m) + " = " + top.str() + " has a repeated factor"};

    UniPoly R = discriminant_in_x(F, vx, vy);
    if (R.is_zero()) {
        rep.checks[3] = {false, "Res_y(F, F_y) vanishes identically: F has a repeated factor"};
        rep.checks[4] = {false, "no critical abscissae can be isolated"};
        return rep;
    }
    std::string bad4, bad5;
    if (R.degree() > 0) {
        for (const auto& xc : exactmath::root_classes(exactmath::squarefree_part(R))) {
            auto per = exactmath::split_eval(xc, [&](const RootClass& c) {
                CriticalPoint cp;
                cp.x = c.value;
                cp.x_minpoly = c.minpoly;
                cp.conjugates = c.conjugates();
                UniPoly fx = F.eval(vx, c.value).to_uni(vy);
                UniPoly g = exactmath::gcd(fx, F.derivative(vy).eval(vx, c.value).to_uni(vy));
                cp.gcd_degree = g.degree();
                if (g.degree() != 1) {
                    cp.kind = CriticalKind::violation;
                    return cp;
                }
                cp.y = -g.coeff(0) / g.coeff(1);
                cp.multiplicity = root_multiplicity(fx, cp.y);
                if (cp.multiplicity != 2) {
                    cp.kind = CriticalKind::violation;
                    return cp;
                }
                std::map<Var, Scalar> at{{vx, cp.x}, {vy, cp.y}};
                if (!decide_zero(F.derivative(vx).eval_all(at))) {
                    cp.kind = CriticalKind::vertical_tangency;
                } else {
                    Scalar fxx = F.derivative(vx).derivative(vx).eval_all(at);
                    Scalar fxy = F.derivative(vx).derivative(vy).eval_all(at);
                    Scalar fyy = F.derivative(vy).derivative(vy).eval_all(at);
                    cp.kind = decide_zero(fxy * fxy - fxx * fyy) ? CriticalKind::violation : CriticalKind::node;
                }
                return cp;
            });
            for (auto& [cls, cp] : per) {
                if (cp.gcd_degree != 1 || cp.multiplicity != 2) {
                    if (!bad4.empty())
                        bad4 += "; ";
                    if (cp.gcd_degree != 1)
                        bad4 += cp.str() + ": gcd(F, F_y) has degree " + std::to_string(cp.gcd_degree) +
                                " (more than one special point on the vertical line)";
                    else
                        bad4 += cp.str() + ": root multiplicity " + std::to_string(cp.multiplicity) +
                                " (contact of order other than 2)";
                } else if (cp.kind == CriticalKind::violation) {
                    if (!bad5.empty())
                        bad5 += "; ";
                    bad5 += cp.str() + ": singular point that is not an ordinary double point";
                }
                rep.critical.push_back(cp);
            }
        }
    }
    rep.checks[3] = bad4.empty() ? CheckVerdict{true, std::to_string(rep.critical.size()) + " critical classes"}
                                 : CheckVerdict{false, bad4};
    rep.checks[4] = bad5.empty() ? CheckVerdict{true, "every special point is a vertical tangency or a node"}
                                 : CheckVerdict{false, bad5};
    return rep;
}

std::vector<CriticalFiber> critical_fiber_analysis(const MPoly& F, Var vx, Var vy)
{
    auto rep = presentation_check(F, vx, vy);
    if (!rep.pass()) {
        std::string why;
        for (size_t i = 0; i < rep.checks.size(); ++i)
            if (!rep.checks[i].pass)
                why += (why.empty() ? "c" : "; c") + std::to_string(i + 1) + ": " + rep.checks[i].witness;
        throw std::invalid_argument("curve is not presented: " + why);
    }
    std::vector<CriticalFiber> out;
    UniPoly R = discriminant_in_x(F, vx, vy);
    if (R.degree() <= 0)
        return out;
    for (const auto& xc : exactmath::root_classes(exactmath::squarefree_part(R))) {
        auto per = exactmath::split_eval(xc, [&](const RootClass& c) {
            CriticalFiber cf;
            cf.x = c.value;
            cf.x_minpoly = c.minpoly;
            cf.conjugates = c.conjugates();
            for (const auto& [f, mult] : exactmath::squarefree_decomposition(F.eval(vx, c.value).to_uni(vy))) {
                if (mult == 2)
                    cf.collision_pairs += f.degree();
                else if (mult > 2)
                    cf.higher_collisions += f.degree();
            }
            return cf;
        });
        for (auto& [cls, cf] : per)
            out.push_back(cf);
    }
    return out;
}

} // namespace curves
