#include "degeneration/family.hpp"

#include "degeneration/checks.hpp"

#include <sstream>
#include <stdexcept>

namespace degeneration {

using namespace exactmath::vars;

std::string to_string(const Vec3& v)
{
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

namespace {

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_null(const Vec3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

// rows (i, j) of [u v] with nonzero minor
std::pair<int, int> pivot_rows(const Plane& pl, Scalar& det)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            det = pl.u[i] * pl.v[j] - pl.u[j] * pl.v[i];
            if (!det.is_zero())
                return {i, j};
        }
    throw std::invalid_argument("plane directions are dependent");
}

// Remove the gcd over Q[param] of the coefficients of p seen as a polynomial in the other variables.
MPoly strip_param_content(const MPoly& p, Var param, UniPoly* content)
{
    std::map<exactmath::Monomial, UniPoly, exactmath::MonomialLess> coeffs;
    for (const auto& [m, c] : p.terms()) {
        exactmath::Monomial rest;
        int e = 0;
        for (const auto& [v, k] : m) {
            if (v == param)
                e = k;
            else
                rest.emplace_back(v, k);
        }
        coeffs[rest] += UniPoly::monomial(c, e);
    }
    UniPoly g;
    for (const auto& [m, c] : coeffs)
        g = gcd(g, c);
    if (content)
        *content = g;
    if (g.degree() <= 0)
        return p;
    MPoly out;
    for (const auto& [m, c] : coeffs)
        out += MPoly::from_uni(c / g, param) * MPoly::term(Scalar(1), m);
    return out;
}


// content over Q[vx] of p as a polynomial in vy
UniPoly content_in(const MPoly& p, Var vx, Var vy)
{
    UniPoly g;
    for (const auto& c : p.coefficients(vy))
        g = gcd(g, c.to_uni(vx));
    return g;
}

MPoly primitive_in(const MPoly& p, Var vx, Var vy)
{
    UniPoly c = content_in(p, vx, vy);
    return c.degree() > 0 ? exact_div(p, MPoly::from_uni(c, vx)) : p;
}

// gcd in Q[vx, vy] by the primitive remainder sequence
MPoly bivariate_gcd(const MPoly& a, const MPoly& b, Var vx, Var vy)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    MPoly c = MPoly::from_uni(gcd(content_in(a, vx, vy), content_in(b, vx, vy)), vx);
    MPoly p = primitive_in(a, vx, vy), q = primitive_in(b, vx, vy);
    if (p.degree(vy) < q.degree(vy))
        std::swap(p, q);
    while (q.degree(vy) > 0) {
        MPoly r = p;
        MPoly lq = q.coefficients(vy).back();
        while (!r.is_zero() && r.degree(vy) >= q.degree(vy)) {
            MPoly lr = r.coefficients(vy).back();
            r = r * lq - lr * MPoly::variable(vy, r.degree(vy) - q.degree(vy)) * q;
        }
        p = q;
        if (r.is_zero())
            return c * p;
        q = primitive_in(r, vx, vy);
    }
    return c;
}

std::string power_str(const MPoly& f, int k)
{
    std::string b = f.size() > 1 ? "(" + f.str() + ")" : f.str();
    return k > 1 ? b + "^" + std::to_string(k) : b;
}

// Factors of the defining surfaces' top forms common to both: the directions of
// a curve at infinity in their intersection. Returned as forms in x, y, z.
std::vector<MPoly> common_at_infinity(const MPoly& F1, const MPoly& F2)
{
    MPoly T1 = F1.homogeneous_part(F1.total_degree()), T2 = F2.homogeneous_part(F2.total_degree());
    std::vector<MPoly> out;
    if (T1.low_degree(z) > 0 && T2.low_degree(z) > 0)
        out.push_back(MPoly::variable(z));
    MPoly a = T1.eval(z, Scalar(1)), b = T2.eval(z, Scalar(1));
    MPoly g = bivariate_gcd(a, b, x, y);
    if (g.total_degree() < 1)
        return out;
    MPoly rep = bivariate_gcd(g, bivariate_gcd(g.derivative(x), g.derivative(y), x, y), x, y);
    MPoly sq = exact_div(g, rep);
    auto lf = line_factors(sq);
    bool rational = lf.complete;
    for (const auto& l : lf.lines)
        rational = rational && l.conjugates == 1;
    if (rational) {
        for (const auto& l : lf.lines)
            out.push_back(MPoly::variable(x).scaled(l.a) + MPoly::variable(y).scaled(l.b) + MPoly::variable(z).scaled(l.c));
    } else {
        out.push_back(sq.homogenize({x, y}, z, sq.total_degree()));
    }
    return out;
}

} // namespace

Vec3 Plane::normal() const { return cross(u, v); }

MPoly Plane::equation() const
{
    Vec3 n = normal();
    if (is_null(n))
        throw std::invalid_argument("plane directions are dependent");
    MPoly e;
    const Var xs[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
        e += (MPoly::variable(xs[i]) - MPoly(origin[i])).scaled(n[i]);
    return e;
}

bool Plane::contains(const Vec3& p) const { return dot(normal(), sub(p, origin)).is_zero(); }

std::array<Scalar, 2> Plane::coordinates(const Vec3& p) const
{
    Scalar det;
    auto [i, j] = pivot_rows(*this, det);
    Vec3 d = sub(p, origin);
    return {(d[i] * v[j] - d[j] * v[i]) / det, (u[i] * d[j] - u[j] * d[i]) / det};
}

std::array<MPoly, 2> Plane::coordinate_functions() const
{
    Scalar det;
    auto [i, j] = pivot_rows(*this, det);
    const Var xs[3] = {x, y, z};
    MPoly di = MPoly::variable(xs[i]) - MPoly(origin[i]);
    MPoly dj = MPoly::variable(xs[j]) - MPoly(origin[j]);
    Scalar inv = Scalar(1) / det;
    return {(di.scaled(v[j]) - dj.scaled(v[i])).scaled(inv), (dj.scaled(u[i]) - di.scaled(u[j])).scaled(inv)};
}

std::array<MPoly, 3> Plane::point(Var X, Var Y) const
{
    std::array<MPoly, 3> p;
    for (int i = 0; i < 3; ++i)
        p[i] = MPoly(origin[i]) + MPoly::variable(X).scaled(u[i]) + MPoly::variable(Y).scaled(v[i]);
    return p;
}

std::array<MPoly, 3> CenterLine::at(Var t) const
{
    std::array<MPoly, 3> p;
    for (int i = 0; i < 3; ++i)
        p[i] = MPoly(origin[i]) + MPoly::variable(t).scaled(direction[i]);
    return p;
}

bool dimension_one_check(const SpaceCurve& C, std::string* detail)
{
    const Var xs[3] = {x, y, z};
    const int samples[] = {0, 1, -1, 2, 3, -2, 5, 7};
    for (int k = 0; k < 3; ++k) {
        Var a = xs[(k + 1) % 3], b = xs[(k + 2) % 3];
        if (a > b)
            std::swap(a, b);
        for (int c : samples) {
            std::vector<MPoly> eqs{C.F1.eval(xs[k], Scalar(c)), C.F2.eval(xs[k], Scalar(c))};
            if (eqs[0].is_zero() || eqs[1].is_zero())
                continue;
            auto sol = exactmath::solve_system(eqs, a, b);
            if (sol && !sol->empty()) {
                if (detail)
                    *detail = "section " + exactmath::var_name(xs[k]) + " = " + std::to_string(c) + " has " +
                              std::to_string(sol->size()) + " point classes";
                return true;
            }
        }
    }
    if (detail)
        *detail = "no sampled plane section is a nonempty finite set";
    return false;
}

std::string CurveFamily::str() const
{
    std::ostringstream os;
    os << "H = " << H.str() << "; parameter " << exactmath::var_name(param) << ", degenerate at "
       << exactmath::var_name(param) << " = " << t_star.str() << "; degree " << degree;
    return os.str();
}

CurveFamily cone_family(const SpaceCurve& C, const CenterLine& centers, const Plane& omega, Var param)
{
    if (is_null(centers.direction))
        throw std::invalid_argument("centre line has zero direction");
    Vec3 n = omega.normal();
    Scalar nd = dot(n, centers.direction);
    if (nd.is_zero())
        throw std::invalid_argument("centre line never meets the target plane");

    CurveFamily fam;
    fam.param = param;
    fam.target = omega;
    fam.centers = centers;
    fam.t_star = dot(n, sub(omega.origin, centers.origin)) / nd;

    auto Q = centers.at(param);
    auto r = omega.point(X, Y);
    std::map<Var, MPoly> line;
    const Var xs[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
        line[xs[i]] = Q[i] + MPoly::variable(lam) * (r[i] - Q[i]);
    MPoly f1 = C.F1.subs(line), f2 = C.F2.subs(line);
    if (f1.is_zero() || f2.is_zero())
        throw std::invalid_argument("a defining surface contains every line of the cone");

    MPoly R;
    if (!f1.involves(lam))
        R = f1;
    else if (!f2.involves(lam))
        R = f2;
    else
        R = exactmath::resultant(f1, f2, lam);
    if (R.is_zero())
        throw std::runtime_error("elimination collapsed: the defining surfaces share a factor along the cone");

    // cones over the common part at infinity of the two surfaces
    for (const auto& g : common_at_infinity(C.F1, C.F2)) {
        MPoly E = g.subs({{x, r[0] - Q[0]}, {y, r[1] - Q[1]}, {z, r[2] - Q[2]}});
        if (E.total_degree({X, Y}) < 1)
            continue;
        int k = 0;
        MPoly quo;
        while (mdivides(E, R, &quo)) {
            R = quo;
            ++k;
        }
        if (k > 0)
            fam.notes.push_back("stripped factor " + power_str(E, k) + " from the surfaces at infinity");
    }

    UniPoly content;
    R = strip_param_content(R, param, &content);
    if (content.degree() > 0)
        fam.notes.push_back("stripped factor " + content.str(exactmath::var_name(param)));
    exactmath::Monomial mono;
    R = R.strip_monomial(&mono);
    if (!mono.empty())
        fam.notes.push_back("stripped factor " + MPoly::term(Scalar(1), mono).str());
    if (R.involves(lam))
        throw std::logic_error("elimination left the line parameter");

    fam.degree = R.total_degree({X, Y});
    fam.H = R.homogenize({X, Y}, W, fam.degree);

    std::vector<MPoly> sec{C.F1.subs({{x, r[0]}, {y, r[1]}, {z, r[2]}}), C.F2.subs({{x, r[0]}, {y, r[1]}, {z, r[2]}})};
    auto pts = exactmath::solve_system(sec, X, Y);
    if (!pts)
        fam.notes.push_back("source curve meets the target plane in infinitely many points");
    else {
        fam.transversal = *pts;
        for (const auto& p : *pts)
            fam.expected_degree += p.conjugates;
        if (fam.expected_degree != fam.degree)
            fam.notes.push_back("degree " + std::to_string(fam.degree) + " differs from the " +
                                std::to_string(fam.expected_degree) + " points on the target plane");
    }
    return fam;
}

CurveFamily family_from_form(const MPoly& H, Var param, const Scalar& t_star)
{
    CurveFamily fam;
    fam.param = param;
    fam.t_star = t_star;
    fam.degree = H.total_degree({X, Y, W});
    if (H.involves(W)) {
        if (H.homogeneous_part(fam.degree, {X, Y, W}) != H)
            throw std::invalid_argument("family form is not homogeneous in X, Y, W");
        fam.H = H;
    } else {
        fam.degree = H.total_degree({X, Y});
        fam.H = H.homogenize({X, Y}, W, fam.degree);
    }
    fam.expected_degree = fam.degree;
    return fam;
}

std::string MirrorConfig::violation() const
{
    Vec3 n1 = omega1.normal(), n2 = omega2.normal();
    if (is_null(n1) || is_null(n2))
        return "plane directions are dependent";
    if (is_null(cross(n1, n2)))
        return omega1.contains(omega2.origin) ? "the two planes coincide" : "the two planes are parallel";
    if (omega1.contains(P) || omega2.contains(P))
        return "centre P lies on one of the planes";
    if (!omega2.contains(Q))
        return "pivot Q is not on the target plane";
    if (P == Q)
        return "centre and pivot coincide";
    int m = G.total_degree();
    if (m < 1 || G.involves(z) || G.variables().size() > 2)
        return "curve must be a nonconstant polynomial in x, y";
    // common line in omega1 coordinates: a X + b Y + c = 0
    auto p = omega1.point(x, y);
    MPoly lin;
    for (int i = 0; i < 3; ++i)
        lin += (p[i] - MPoly(omega2.origin[i])).scaled(n2[i]);
    Scalar a = lin.coeff({{x, 1}}), b = lin.coeff({{y, 1}}), c = lin.constant_term();
    UniPoly g;
    if (!b.is_zero())
        g = G.subs(y, (MPoly::variable(x).scaled(a) + MPoly(c)).scaled(-Scalar(1) / b)).to_uni(x);
    else
        g = G.subs(x, MPoly(-c / a)).to_uni(y);
    if (g.degree() != m || !exactmath::is_squarefree(g))
        return "curve meets the common line in fewer than " + std::to_string(m) + " distinct points";
    return "";
}

CurveFamily mirror_family(const MirrorConfig& cfg)
{
    std::string why = cfg.violation();
    if (!why.empty())
        throw std::invalid_argument("invalid mirror configuration: " + why);
    auto cf = cfg.omega1.coordinate_functions();
    SpaceCurve C{cfg.omega1.equation(), cfg.G.subs({{x, cf[0]}, {y, cf[1]}})};
    return cone_family(C, CenterLine{cfg.Q, sub(cfg.P, cfg.Q)}, cfg.omega2, s);
}

MPoly fiber_at(const CurveFamily& fam, const Scalar& t0)
{
    return fam.H.eval(fam.param, t0).subs({{X, MPoly::variable(x)}, {Y, MPoly::variable(y)}, {W, MPoly(1)}});
}

} // namespace degeneration
