#include "curves/geometry.hpp"

#include "exactmath/roots.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace curves {

using exactmath::decide_zero;
namespace vars = exactmath::vars;

Var fibre_var(const MPoly& F)
{
    return F.involves(vars::z) && !F.involves(vars::y) ? vars::z : vars::y;
}

namespace {

std::array<Scalar, 3> scaled_first_one(std::array<Scalar, 3> v)
{
    for (int i = 0; i < 3; ++i)
        if (!decide_zero(v[i])) {
            Scalar inv = v[i].inverse();
            for (int j = 0; j < 3; ++j)
                v[j] = j < i ? Scalar(0) : v[j] * inv;
            return v;
        }
    throw std::invalid_argument("projective point with all coordinates zero");
}

std::string coord(const Scalar& s)
{
    std::string t = s.str();
    return s.is_rational() ? t : "(" + t + ")";
}

} // namespace

ProjPoint::ProjPoint(const Scalar& X, const Scalar& Z, const Scalar& W) : c(scaled_first_one({X, Z, W}))
{
    // prefer W = 1 for finite points
    if (!c[2].is_zero() && !c[2].is_one()) {
        Scalar inv = c[2].inverse();
        c = {c[0] * inv, c[1] * inv, Scalar(1)};
    }
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return proportional(a.c, b.c); }

std::string ProjPoint::str() const
{
    if (finite())
        return "(" + coord(c[0]) + ", " + coord(c[1]) + ")";
    return "[" + coord(c[0]) + ":" + coord(c[1]) + ":" + coord(c[2]) + "]";
}

Line::Line(const Scalar& a, const Scalar& b, const Scalar& cc) : c(scaled_first_one({a, b, cc})) {}

std::string Line::str() const
{
    if (is_infinity())
        return "line at infinity";
    if (is_vertical())
        return "x = " + vertical_abscissa().str();
    // c0 X + Z + c2 W = 0 with c1 = 1 after scaling (c0 = 0) or general
    if (c[0].is_zero())
        return "z = " + (-c[2]).str();
    MPoly l = MPoly(c[0]) * MPoly::variable(exactmath::vars::x) + MPoly(c[1]) * MPoly::variable(exactmath::vars::z) +
              MPoly(c[2]);
    return l.str() + " = 0";
}

std::string to_string(BranchKind k)
{
    switch (k) {
    case BranchKind::finite:
        return "finite";
    case BranchKind::hyperbolic_q1:
        return "hyperbolic-at-Q1";
    case BranchKind::parabolic_q1:
        return "parabolic-at-Q1";
    case BranchKind::other_infinite:
        return "other-infinite";
    }
    return "?";
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b)
{
    for (const auto& v : cross(a, b))
        if (!decide_zero(v))
            return false;
    return true;
}

BranchParam make_branch_projective(const std::array<TruncSeries, 3>& v)
{
    int R = 1;
    std::optional<Rational> val;
    for (const auto& s : v) {
        R = std::lcm(R, s.ramification());
        if (auto o = s.ord(); o && (!val || *o < *val))
            val = *o;
    }
    if (!val)
        throw std::domain_error("truncation too short to locate the centre: increase N");
    auto coeffs_at = [&](const Rational& e) {
        return std::array<Scalar, 3>{v[0].coeff(e), v[1].coeff(e), v[2].coeff(e)};
    };
    // last exponent carrying known information
    auto last_known = [](const TruncSeries& s) -> Rational {
        if (s.precision())
            return *s.precision();
        return s.terms().empty() ? Rational(0) : Rational(s.terms().rbegin()->first, s.ramification());
    };
    BranchParam bp;
    std::array<Scalar, 3> c0 = coeffs_at(*val);
    bp.center = ProjPoint(c0[0], c0[1], c0[2]);
    Rational stop = std::max({last_known(v[0]), last_known(v[1]), last_known(v[2])});
    bool found = false;
    for (long k = 1; !found; ++k) {
        Rational e = *val + Rational(k, R);
        e.canonicalize();
        if (e > stop)
            break;
        auto l = cross(c0, coeffs_at(e));
        for (const auto& s : l)
            if (!decide_zero(s)) {
                bp.tangent = Line(l[0], l[1], l[2]);
                found = true;
                break;
            }
    }
    if (!found)
        throw std::domain_error("truncation too short to resolve the tangent: increase N");
    if (bp.center.finite())
        bp.kind = BranchKind::finite;
    else if (bp.center.is_Q1())
        bp.kind = bp.tangent.is_infinity() ? BranchKind::parabolic_q1 : BranchKind::hyperbolic_q1;
    else
        bp.kind = BranchKind::other_infinite;
    return bp;
}

BranchParam make_branch(const series::Parametrization& p)
{
    BranchParam bp = make_branch_projective({p.x, p.y, TruncSeries(Scalar(1))});
    bp.param = p;
    return bp;
}

std::vector<BranchParam> branches_at(const MPoly& C, const ProjPoint& P, int N, Var vx, Var vz)
{
    auto ch = series::make_chart(C, P.c[0], P.c[1], P.c[2], vx, vz);
    std::vector<BranchParam> out;
    for (const auto& b : series::puiseux_branches(ch, N)) {
        if (b.unresolved)
            throw std::domain_error("singularity not resolved within the Newton recursion depth");
        BranchParam bp = make_branch(b.param);
        bp.ram = b.ram;
        bp.places = b.places;
        bp.multiplicity = b.multiplicity;
        bp.vertical = b.vertical;
        out.push_back(bp);
    }
    return out;
}

MPoly top_form(const MPoly& C, Var vx, Var vz)
{
    return C.homogeneous_part(C.total_degree({vx, vz}), {vx, vz});
}

std::vector<InfinitePoint> points_at_infinity(const MPoly& C, Var vx, Var vz)
{
    MPoly P = top_form(C, vx, vz);
    int n = C.total_degree({vx, vz});
    UniPoly p = P.eval(vx, Scalar(1)).to_uni(vz);
    std::vector<InfinitePoint> out;
    if (p.degree() < n)
        out.push_back({ProjPoint::Q1(), 1, n - p.degree()});
    if (p.degree() > 0)
        for (const auto& rc : exactmath::root_classes(p))
            out.push_back({ProjPoint(Scalar(1), rc.value, Scalar(0)), rc.conjugates(), rc.multiplicity});
    return out;
}

MPoly normalize(const MPoly& p)
{
    if (p.is_zero())
        return p;
    bool rational = true;
    for (const auto& [m, c] : p.terms())
        rational = rational && c.is_rational();
    if (!rational)
        return p.monic_lex();
    exactmath::Integer den = 1, num = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational().get_num_mpz_t());
    }
    Rational k(den, num);
    k.canonicalize();
    if (sgn(p.lead_coeff().rational()) < 0)
        k = -k;
    return p.scaled(Scalar(k));
}

bool nonsingular_at(const MPoly& C, const ProjPoint& P, Var vx, Var vz)
{
    int n = C.total_degree({vx, vz});
    MPoly H = C.homogenize({vx, vz}, vars::w, n);
    std::map<Var, Scalar> at{{vx, P.c[0]}, {vz, P.c[1]}, {vars::w, P.c[2]}};
    for (Var v : {vx, vz, vars::w})
        if (!decide_zero(H.derivative(v).eval_all(at)))
            return true;
    return false;
}

} // namespace curves
