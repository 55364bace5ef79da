#include "curves/asymptotes.hpp"

#include "exactmath/homog.hpp"
#include "exactmath/roots.hpp"

#include <stdexcept>

namespace curves {

using exactmath::RootClass;

std::string Asymptote::str() const
{
    if (b.is_zero())
        return "x = " + t0.str();
    Scalar lam = -a;
    std::string s = "y";
    if (!lam.is_zero()) {
        if (!lam.is_rational())
            s += " - (" + lam.str() + ")*x";
        else if (lam.rational() == 1)
            s += " - x";
        else if (lam.rational() == -1)
            s += " + x";
        else if (sgn(lam.rational()) > 0)
            s += " - " + lam.str() + "*x";
        else
            s += " + " + (-lam).str() + "*x";
    }
    return s + " = " + t0.str();
}

int asymptote_count(const std::vector<Asymptote>& as)
{
    int n = 0;
    for (const auto& a : as)
        n += a.conjugates;
    return n;
}

namespace {

// Asymptotes in the direction of the linear factor l = a*x + b*y of the top
// form, of multiplicity r. v = (b, -a) is a zero of l.
std::vector<Asymptote> along(const std::vector<MPoly>& P, int m, const Scalar& a, const Scalar& b, int r,
                             int dir_conj, Var vx, Var vy)
{
    MPoly l = MPoly::variable(vx).scaled(a) + MPoly::variable(vy).scaled(b);
    std::map<Var, Scalar> v{{vx, b}, {vy, -a}};
    auto part = [&](int d) { return d >= 0 && d <= m ? P[static_cast<size_t>(d)] : MPoly(); };
    int s = r;
    for (; s > 1; --s) {
        bool ok = true;
        for (int k = 0; k < s && ok; ++k)
            ok = exactmath::mdivides(l.pow(s - k), part(m - k));
        if (ok)
            break;
    }
    std::vector<Scalar> T(static_cast<size_t>(s) + 1);
    for (int k = 0; k < s; ++k)
        T[static_cast<size_t>(s - k)] = exactmath::exact_div(part(m - k), l.pow(s - k)).eval_all(v);
    T[0] = part(m - s).eval_all(v);
    UniPoly Tp(T);
    if (Tp.is_zero())
        throw std::logic_error("line polynomial vanishes identically");
    std::vector<Asymptote> out;
    if (Tp.degree() < 1)
        return out;
    for (const auto& tc : exactmath::root_classes(Tp, exactmath::common_field(a.field(), b.field()))) {
        auto per = exactmath::split_eval(tc, [&](const RootClass& c) {
            Asymptote as;
            as.a = a;
            as.b = b;
            as.t0 = c.value;
            as.r = r;
            as.s = s;
            as.conjugates = dir_conj * c.degree();
            return as;
        });
        for (auto& [cls, as] : per)
            out.push_back(as);
    }
    return out;
}

} // namespace

std::vector<Asymptote> asymptotes(const MPoly& F, Var vx, Var vy)
{
    if (F.is_zero())
        throw std::invalid_argument("asymptotes of the zero polynomial");
    const int m = F.total_degree({vx, vy});
    std::vector<MPoly> P(static_cast<size_t>(m) + 1);
    for (int d = 0; d <= m; ++d)
        P[static_cast<size_t>(d)] = exactmath::homog_part(F, d, vx, vy).form;
    std::vector<Asymptote> out;
    if (m < 1)
        return out;
    UniPoly p = P[static_cast<size_t>(m)].eval(vx, Scalar(1)).to_uni(vy);
    int e = m - p.degree();
    if (e > 0) {
        auto got = along(P, m, Scalar(1), Scalar(0), e, 1, vx, vy);
        out.insert(out.end(), got.begin(), got.end());
    }
    if (p.degree() < 1)
        return out;
    for (const auto& lc : exactmath::root_classes(p)) {
        auto per = exactmath::split_eval(lc, [&](const RootClass& c) {
            return along(P, m, -c.value, Scalar(1), c.multiplicity, c.conjugates(), vx, vy);
        });
        for (auto& [cls, got] : per)
            out.insert(out.end(), got.begin(), got.end());
    }
    return out;
}

} // namespace curves
