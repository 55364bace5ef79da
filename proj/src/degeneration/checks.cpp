#include "degeneration/checks.hpp"

#include "curves/geometry.hpp"
#include "exactmath/homog.hpp"
#include "series/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degeneration {

using namespace exactmath::vars;
using exactmath::decide_zero;
using exactmath::Embedding;
using exactmath::FieldPtr;
using exactmath::RootClass;

namespace {

// Embeddings of several fields at once, agreeing on shared generators.
std::vector<Embedding> joint_embeddings(const std::vector<FieldPtr>& fields)
{
    std::vector<Embedding> acc{Embedding{}};
    for (const auto& F : fields) {
        if (!F)
            continue;
        std::vector<Embedding> next;
        for (const auto& e : acc)
            for (const auto& f : exactmath::embeddings(F)) {
                bool ok = true;
                Embedding merged = e;
                for (const auto& [gen, val] : f.values) {
                    auto it = std::find_if(e.values.begin(), e.values.end(),
                                           [&](const auto& p) { return p.first == gen; });
                    if (it == e.values.end())
                        merged.values.emplace_back(gen, val);
                    else if (abs(it->second - val) > Real("1e-35"))
                        ok = false;
                }
                if (ok)
                    next.push_back(std::move(merged));
            }
        acc = std::move(next);
    }
    return acc;
}

UniPoly at_point(const MPoly& p, Var vx, const Scalar& x0, Var vy, const Scalar& y0, Var param)
{
    return p.eval(vx, x0).eval(vy, y0).to_uni(param);
}

MPoly copy_param(const MPoly& p, Var param) { return p.subs(param, MPoly::variable(u)); }

// c_i(t) c_j(u) - c_j(t) c_i(u) for the first failing pair, or zero.
MPoly proportional_witness(const std::vector<MPoly>& c, Var param, int* bad_i = nullptr, int* bad_j = nullptr)
{
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            MPoly w = c[i] * copy_param(c[j], param) - c[j] * copy_param(c[i], param);
            if (!w.is_zero()) {
                if (bad_i)
                    *bad_i = static_cast<int>(i);
                if (bad_j)
                    *bad_j = static_cast<int>(j);
                return w;
            }
        }
    return MPoly();
}

// c / gcd(c) for a proportional coefficient list; constant entries.
UniPoly fixed_form(const std::vector<MPoly>& c, Var param)
{
    UniPoly g;
    for (const auto& ck : c)
        g = gcd(g, ck.to_uni(param));
    std::vector<Scalar> out;
    for (const auto& ck : c)
        out.push_back(ck.is_zero() ? Scalar(0) : (ck.to_uni(param) / g).coeff(0));
    return UniPoly(out);
}

std::array<Complex, 2> tangent_pair(const Complex& A, const Complex& B, const Complex& C, int which)
{
    Complex d = sqrt(B * B - A * C);
    Complex sgn = which == 0 ? Complex(1) : Complex(-1);
    if (abs(C) >= abs(A) && abs(C) > 0)
        return {Complex(1), (-B + sgn * d) / C};
    if (abs(A) > 0)
        return {(-B + sgn * d) / A, Complex(1)};
    return which == 0 ? std::array<Complex, 2>{Complex(1), Complex(0)} : std::array<Complex, 2>{Complex(0), Complex(1)};
}

PlaneLine make_line(const Scalar& a, const Scalar& b, const Scalar& c, int conj)
{
    if (!decide_zero(a)) {
        Scalar k = Scalar(1) / a;
        return PlaneLine{Scalar(1), b * k, c * k, conj};
    }
    Scalar k = Scalar(1) / b;
    return PlaneLine{Scalar(0), Scalar(1), c * k, conj};
}

std::string cdec(const Complex& c) { return exactmath::decimal(c, 12); }
std::string rdec(const Real& r) { return exactmath::decimal(r, 6); }

} // namespace

std::string PlaneLine::str() const
{
    MPoly l = MPoly::variable(x).scaled(a) + MPoly::variable(y).scaled(b) + MPoly(c);
    return l.str() + " = 0";
}

LineFactorization line_factors(const MPoly& f)
{
    LineFactorization out;
    int m = f.total_degree();
    if (f.is_zero() || m < 1) {
        out.detail = "constant polynomial";
        return out;
    }
    MPoly top = exactmath::homog_part(f, m, x, y).form;
    UniPoly p1 = top.eval(x, Scalar(1)).to_uni(y);
    if (p1.degree() > 0)
        for (const auto& rc : exactmath::root_classes(p1)) {
            auto per = exactmath::split_eval(rc, [&](const RootClass& r) {
                std::vector<PlaneLine> got;
                MPoly g = f.subs(y, MPoly::variable(x).scaled(r.value) + MPoly::variable(w));
                UniPoly h;
                for (const auto& cf : g.coefficients(x))
                    h = gcd(h, cf.to_uni(w));
                if (h.degree() <= 0)
                    return got;
                for (const auto& cc : exactmath::root_classes(h, r.own_field ? r.own_field : r.value.field())) {
                    auto inner = exactmath::split_eval(cc, [&](const RootClass& cr) {
                        return make_line(-r.value, Scalar(1), -cr.value, r.conjugates() * cr.degree());
                    });
                    for (auto& [k, l] : inner)
                        got.push_back(l);
                }
                return got;
            });
            for (auto& [k, ls] : per)
                for (auto& l : ls)
                    out.lines.push_back(l);
        }
    if (p1.degree() < m) {
        UniPoly h;
        for (const auto& cf : f.coefficients(y))
            h = gcd(h, cf.to_uni(x));
        if (h.degree() > 0)
            for (const auto& cc : exactmath::root_classes(h))
                for (auto& [k, l] : exactmath::split_eval(cc, [&](const RootClass& cr) {
                         return PlaneLine{Scalar(1), Scalar(0), -cr.value, cr.conjugates()};
                     }))
                    out.lines.push_back(l);
    }
    for (const auto& l : out.lines)
        out.found += l.conjugates;
    out.complete = out.found == m;
    if (!out.complete)
        out.detail = "found " + std::to_string(out.found) + " distinct line factors of a degree " + std::to_string(m) +
                     " polynomial";
    return out;
}

DegenerateVerdict degenerate_fiber_check(const CurveFamily& fam)
{
    DegenerateVerdict v;
    v.fiber = fiber_at(fam, fam.t_star);
    int m = fam.degree;
    if (v.fiber.is_zero()) {
        v.detail = "H vanishes identically at the degenerate parameter";
        return v;
    }
    bool geometric = !(fam.centers.direction[0].is_zero() && fam.centers.direction[1].is_zero() &&
                       fam.centers.direction[2].is_zero());
    if (geometric) {
        Vec3 Q;
        for (int i = 0; i < 3; ++i)
            Q[i] = fam.centers.origin[i] + fam.t_star * fam.centers.direction[i];
        v.O = fam.target.coordinates(Q);
    } else {
        // no geometry: take the singular point of highest order
        auto sol = exactmath::solve_system({v.fiber, v.fiber.derivative(x), v.fiber.derivative(y)}, x, y);
        if (!sol || sol->size() != 1 || !(*sol)[0].x.is_rational() || !(*sol)[0].y.is_rational()) {
            v.detail = "no single rational vertex for the degenerate fibre";
            return v;
        }
        v.O = {(*sol)[0].x, (*sol)[0].y};
    }
    MPoly g = v.fiber.subs({{x, MPoly::variable(x) + MPoly(v.O[0])}, {y, MPoly::variable(y) + MPoly(v.O[1])}});
    MPoly top = exactmath::homog_part(g, m, x, y).form;
    if (g.total_degree() != m || top != g) {
        v.detail = "degenerate fibre is not a union of lines through O = (" + v.O[0].str() + ", " + v.O[1].str() +
                   "): residual " + (g - top).str();
        return v;
    }
    auto lf = line_factors(v.fiber);
    v.lines = lf.lines;
    if (!lf.complete) {
        v.detail = "degenerate fibre is not a product of distinct lines: " + lf.detail;
        return v;
    }
    if (!geometric) {
        v.pass = true;
        v.detail = std::to_string(m) + " distinct lines through (" + v.O[0].str() + ", " + v.O[1].str() + ")";
        return v;
    }
    int npts = 0;
    bool rational = true;
    for (const auto& p : fam.transversal) {
        Scalar val = v.fiber.eval_all({{x, p.x}, {y, p.y}});
        if (!val.is_zero()) {
            v.detail = "point (" + p.x.str() + ", " + p.y.str() + ") of the source curve is not on the degenerate fibre";
            return v;
        }
        if (p.x == v.O[0] && p.y == v.O[1]) {
            v.detail = "the source curve passes through O";
            return v;
        }
        npts += p.conjugates;
        rational = rational && p.x.is_rational() && p.y.is_rational();
    }
    if (npts != m) {
        v.detail = std::to_string(npts) + " points of the source curve on the target plane, expected " +
                   std::to_string(m);
        return v;
    }
    for (const auto& l : v.lines)
        rational = rational && l.a.is_rational() && l.b.is_rational() && l.c.is_rational();
    // each line carries exactly one of the points: exact over Q, else through the embeddings
    std::vector<std::array<Complex, 2>> pts;
    std::vector<Vec3> exact_pts;
    for (const auto& p : fam.transversal) {
        if (rational)
            exact_pts.push_back({p.x, p.y, Scalar(1)});
        else
            for (const auto& e : joint_embeddings({p.x.field(), p.y.field()}))
                pts.push_back({exactmath::evaluate(p.x, e), exactmath::evaluate(p.y, e)});
    }
    std::vector<int> hits(rational ? exact_pts.size() : pts.size(), 0);
    auto count_on = [&](const PlaneLine& l) {
        int on = 0;
        if (rational) {
            for (size_t k = 0; k < exact_pts.size(); ++k)
                if ((l.a * exact_pts[k][0] + l.b * exact_pts[k][1] + l.c).is_zero()) {
                    ++on;
                    ++hits[k];
                }
            return std::vector<int>{on};
        }
        std::vector<int> per;
        for (const auto& e : joint_embeddings({l.a.field(), l.b.field(), l.c.field()})) {
            Complex a = exactmath::evaluate(l.a, e), b = exactmath::evaluate(l.b, e), c = exactmath::evaluate(l.c, e);
            on = 0;
            for (size_t k = 0; k < pts.size(); ++k)
                if (abs(a * pts[k][0] + b * pts[k][1] + c) < Real("1e-30")) {
                    ++on;
                    ++hits[k];
                }
            per.push_back(on);
        }
        return per;
    };
    for (const auto& l : v.lines)
        for (int on : count_on(l))
            if (on != 1) {
                v.detail = "line " + l.str() + " carries " + std::to_string(on) + " points of the source curve";
                return v;
            }
    v.pass = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    v.detail = v.pass ? std::to_string(m) + " lines through O = (" + v.O[0].str() + ", " + v.O[1].str() +
                            ") and the points of the source curve"
                      : "a point of the source curve lies on two lines";
    return v;
}

RationalFunction RationalFunction::make(const UniPoly& n, const UniPoly& d)
{
    if (d.is_zero())
        throw exactmath::DivisionByZero();
    RationalFunction r;
    if (n.is_zero()) {
        r.den = UniPoly(Scalar(1));
        return r;
    }
    UniPoly g = gcd(n, d);
    r.num = n / g;
    r.den = d / g;
    Scalar k;
    if (r.den.is_rational() && r.num.is_rational()) {
        // integer coefficients with gcd 1, positive leading denominator
        exactmath::Integer l = 1, g = 0;
        for (const auto* p : {&r.num, &r.den})
            for (const auto& c : p->coeffs()) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
            }
        Rational q(l, g);
        q.canonicalize();
        if (r.den.lead().rational() < 0)
            q = -q;
        k = Scalar(q);
    } else {
        k = Scalar(1) / r.den.lead();
    }
    r.num = k * r.num;
    r.den = k * r.den;
    return r;
}

std::string RationalFunction::str(const std::string& var) const
{
    auto wrap = [&](const UniPoly& p) {
        std::string s = p.str(var);
        int terms = 0;
        for (const auto& c : p.coeffs())
            terms += !c.is_zero();
        return terms > 1 ? "(" + s + ")" : s;
    };
    if (den.degree() == 0 && den.coeff(0).is_one())
        return num.str(var);
    return wrap(num) + "/" + wrap(den);
}

RationalFunction tangent_gradient(const CurveFamily& fam, const Scalar& a)
{
    MPoly F = fam.H.subs(W, MPoly(1));
    if (!at_point(F, X, Scalar(0), Y, a, fam.param).is_zero())
        throw std::invalid_argument("(0, " + a.str() + ") is not on every fibre");
    UniPoly fx = at_point(F.derivative(X), X, Scalar(0), Y, a, fam.param);
    UniPoly fy = at_point(F.derivative(Y), X, Scalar(0), Y, a, fam.param);
    if (fy.is_zero())
        throw std::invalid_argument("tangent at (0, " + a.str() + ") is vertical or the point is singular on every fibre");
    return RationalFunction::make(-fx, fy);
}

AsymptoticVerdict asymptotic_check(const CurveFamily& fam, const AsymptoticOptions& opts)
{
    AsymptoticVerdict out;
    out.mode = opts.weak ? "weak" : "strict";
    const Var t = fam.param;
    const std::string tn = exactmath::var_name(t);
    int m = fam.degree;
    MPoly F = fam.H.subs(W, MPoly(1));
    MPoly Fx = F.derivative(X), Fy = F.derivative(Y);

    // samples usable for the weak form and the certificate
    std::vector<Scalar> usable;
    for (const auto& t0 : opts.samples)
        if (t0 != fam.t_star && fiber_at(fam, t0).total_degree() == m)
            usable.push_back(t0);

    MPoly h = fam.H.eval(X, Scalar(0));
    UniPoly h0;
    if (h.is_zero()) {
        out.failures.push_back("the axis X = 0 is a component of every fibre");
    } else {
        std::vector<MPoly> c = h.eval(W, Scalar(1)).coefficients(Y);
        c.resize(m + 1);
        int i = 0, j = 0;
        MPoly wit = proportional_witness(c, t, &i, &j);
        if (!wit.is_zero()) {
            out.failures.push_back("the points on X = 0 move: for Y^" + std::to_string(i) + " and Y^" +
                                   std::to_string(j) + " the identity gives " + wit.str());
        } else {
            h0 = fixed_form(c, t);
            if (h0.degree() < m)
                out.failures.push_back("[0:1:0] lies on every fibre: H(0, Y, 1) has degree " +
                                       std::to_string(h0.degree()) + " < " + std::to_string(m));
            else if (!exactmath::is_squarefree(h0))
                out.failures.push_back("points on X = 0 collide: " + h0.str("Y") + " is not squarefree");
            else if (h0.coeff(0).is_zero())
                out.failures.push_back("(0, 0) lies on every fibre: " + h0.str("Y"));
            else
                out.fixed_points = true;
        }
    }

    if (out.fixed_points) {
        out.tangents = true;
        for (const auto& rc : exactmath::root_classes(h0)) {
            auto per = exactmath::split_eval(rc, [&](const RootClass& r) {
                AxisPoint p{r.value, r.conjugates()};
                std::vector<std::string> fails;
                UniPoly fx = at_point(Fx, X, Scalar(0), Y, r.value, t);
                UniPoly fy = at_point(Fy, X, Scalar(0), Y, r.value, t);
                if (!fy.is_zero())
                    p.gradient = RationalFunction::make(-fx, fy);
                std::string where = "(0, " + r.value.str() + ")";
                if (!opts.weak) {
                    if (fy.is_zero()) {
                        fails.push_back("F_Y vanishes identically at " + where + ": tangent vertical or singular");
                    } else {
                        MPoly a = MPoly::from_uni(fx, t), b = MPoly::from_uni(fy, t);
                        MPoly wit = a * copy_param(b, t) - copy_param(a, t) * b;
                        p.fixed_tangent = wit.is_zero();
                        if (!p.fixed_tangent)
                            fails.push_back("tangent at " + where + " moves: gradient " + p.gradient->str(tn));
                    }
                } else {
                    for (const auto& t0 : usable)
                        if (decide_zero(fy.eval(t0)))
                            fails.push_back("F_Y(" + where + ") = 0 at " + tn + " = " + t0.str());
                }
                return std::make_pair(p, fails);
            });
            for (auto& [k, res] : per) {
                out.points.push_back(res.first);
                for (auto& f : res.second)
                    out.failures.push_back(f);
                out.tangents = out.tangents && res.second.empty();
            }
        }
    }

    if (opts.at_infinity) {
        out.infinity = false;
        MPoly hinf = fam.H.eval(W, Scalar(0));
        if (hinf.is_zero()) {
            out.failures.push_back("the line at infinity is a component of every fibre");
        } else {
            std::vector<MPoly> c = hinf.eval(Y, Scalar(1)).coefficients(X);
            c.resize(m + 1);
            MPoly wit = proportional_witness(c, t);
            if (!wit.is_zero()) {
                out.failures.push_back("the points on W = 0 move: " + wit.str());
            } else {
                UniPoly q = fixed_form(c, t);
                if (q.degree() < m)
                    out.failures.push_back("[1:0:0] lies on every fibre");
                else if (!exactmath::is_squarefree(q))
                    out.failures.push_back("points on W = 0 collide");
                else {
                    bool some = false;
                    std::array<MPoly, 3> grad{fam.H.derivative(X), fam.H.derivative(Y), fam.H.derivative(W)};
                    for (const auto& rc : exactmath::root_classes(q))
                        for (auto& [k, ok] : exactmath::split_eval(rc, [&](const RootClass& r) {
                                 std::vector<MPoly> g;
                                 for (const auto& d : grad)
                                     g.push_back(MPoly::from_uni(
                                         d.eval(X, r.value).eval(Y, Scalar(1)).eval(W, Scalar(0)).to_uni(t), t));
                                 if (g[0].is_zero() && g[1].is_zero())
                                     return false;
                                 return proportional_witness(g, t).is_zero();
                             }))
                            some = some || ok;
                    if (some)
                        out.infinity = true;
                    else
                        out.failures.push_back("no branch at infinity has a fixed tangent distinct from W = 0");
                }
            }
        }
    }

    if (usable.empty())
        out.irreducible = "inconclusive: no sampled fibre of full degree";
    else
        out.irreducible = tn + " = " + usable.front().str() + ": " +
                          irreducibility_certificate(fiber_at(fam, usable.front()));
    out.pass = out.fixed_points && out.tangents && out.infinity;
    return out;
}

std::optional<std::vector<SingularPoint>> singular_points(const MPoly& f)
{
    MPoly fx = f.derivative(x), fy = f.derivative(y);
    auto affine = exactmath::solve_each({f, fx, fy}, x, y, [&](const exactmath::PointClass& p) {
        std::map<Var, Scalar> at{{x, p.x}, {y, p.y}};
        Scalar A = fx.derivative(x).eval_all(at), B = fx.derivative(y).eval_all(at), C = fy.derivative(y).eval_all(at);
        SingularPoint s{"(" + p.x.str() + ", " + p.y.str() + ")", p.conjugates};
        bool zero_form = decide_zero(A) && decide_zero(B) && decide_zero(C);
        s.order = zero_form ? 3 : 2;
        s.node = !zero_form && !decide_zero(B * B - A * C);
        return s;
    });
    if (!affine)
        return std::nullopt;
    std::vector<SingularPoint> out = *affine;
    int m = f.total_degree();
    MPoly Fh = f.homogenize({x, y}, W, m);
    std::array<MPoly, 3> grad{Fh.derivative(x), Fh.derivative(y), Fh.derivative(W)};
    auto at_inf = [&](const Scalar& X0, const Scalar& Y0, int conj) {
        std::map<Var, Scalar> at{{x, X0}, {y, Y0}, {W, Scalar(0)}};
        bool singular = true;
        for (const auto& g : grad)
            singular = singular && decide_zero(g.eval_all(at));
        if (!singular)
            return;
        auto chart = series::make_chart(f, X0, Y0, Scalar(0), x, y);
        auto parts = exactmath::homog_parts(chart.G, x, y);
        SingularPoint s{"[" + X0.str() + ":" + Y0.str() + ":0]", conj};
        s.order = parts.back().degree;
        s.node = s.order == 2 && exactmath::form_is_squarefree(parts.back());
        out.push_back(s);
    };
    for (const auto& ip : curves::points_at_infinity(f, x, y)) {
        if (ip.point.is_Q1()) {
            at_inf(Scalar(0), Scalar(1), 1);
            continue;
        }
        const Scalar lam0 = ip.point.c[1] / ip.point.c[0];
        at_inf(Scalar(1), lam0, ip.conjugates);
    }
    return out;
}

std::string irreducibility_certificate(const MPoly& f)
{
    int m = f.total_degree();
    if (m <= 1)
        return m == 1 ? "irreducible: a line" : "inconclusive: constant";
    auto sp = singular_points(f);
    if (!sp)
        return "inconclusive: the singular locus is not finite (repeated component)";
    int nodes = 0;
    for (const auto& s : *sp) {
        if (!s.node)
            return "inconclusive: " + s.where + " is not a node";
        nodes += s.conjugates;
    }
    if (nodes < m - 1)
        return "irreducible: " + std::to_string(nodes) + " nodes, fewer than " + std::to_string(m - 1);
    return "inconclusive: " + std::to_string(nodes) + " nodes";
}

std::string NodeRecord::slopes() const
{
    const Var dx = exactmath::vars::x, dy = exactmath::vars::y;
    MPoly q = MPoly::variable(dx, 2).scaled(A) + MPoly::term(Scalar(2) * B, {{dx, 1}, {dy, 1}}) +
              MPoly::variable(dy, 2).scaled(C);
    return q.str();
}

std::vector<NodeRecord> node_track(const CurveFamily& fam, const std::vector<Scalar>& samples)
{
    std::vector<NodeRecord> out;
    for (const auto& t0 : samples) {
        MPoly f = fiber_at(fam, t0);
        if (f.is_zero())
            throw std::runtime_error("the fibre vanishes identically at " + exactmath::var_name(fam.param) + " = " +
                                     t0.str());
        MPoly fx = f.derivative(x), fy = f.derivative(y);
        MPoly fxx = fx.derivative(x), fxy = fx.derivative(y), fyy = fy.derivative(y);
        auto got = exactmath::solve_each({f, fx, fy}, x, y, [&](const exactmath::PointClass& p) {
            std::map<Var, Scalar> at{{x, p.x}, {y, p.y}};
            NodeRecord r{t0, p.x, p.y, p.conjugates, fxx.eval_all(at), fxy.eval_all(at), fyy.eval_all(at)};
            if (decide_zero(r.A) && decide_zero(r.B) && decide_zero(r.C))
                throw std::runtime_error("non-nodal singularity at (" + p.x.str() + ", " + p.y.str() + "), " +
                                         exactmath::var_name(fam.param) + " = " + t0.str() +
                                         ": the quadratic part vanishes");
            r.nodal = !decide_zero(r.B * r.B - r.A * r.C);
            for (const auto& e : joint_embeddings({p.x.field(), p.y.field()})) {
                Complex A = exactmath::evaluate(r.A, e), B = exactmath::evaluate(r.B, e), C = exactmath::evaluate(r.C, e);
                r.numeric.push_back({exactmath::evaluate(p.x, e), exactmath::evaluate(p.y, e), tangent_pair(A, B, C, 0),
                                     tangent_pair(A, B, C, 1)});
            }
            return r;
        });
        if (!got)
            throw std::runtime_error("the fibre at " + exactmath::var_name(fam.param) + " = " + t0.str() +
                                     " has a multiple component");
        for (auto& r : *got)
            out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(SpecVerdict v)
{
    switch (v) {
    case SpecVerdict::pass: return "PASS";
    case SpecVerdict::fail: return "FAIL";
    default: return "INCONCLUSIVE";
    }
}

std::vector<Scalar> approach_sequence(const CurveFamily& fam, int n)
{
    std::vector<Scalar> out;
    for (int k = 1; k <= n; ++k)
        out.push_back(fam.t_star + Scalar(Rational(1, 1L << k)));
    return out;
}

Real direction_gap(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b)
{
    Real na = sqrt(norm(a[0]) + norm(a[1])), nb = sqrt(norm(b[0]) + norm(b[1]));
    return Real(abs(a[0] * b[1] - a[1] * b[0])) / (na * nb);
}

GoodSpecReport good_specialization_check(const CurveFamily& fam, const std::vector<Scalar>& samples,
                                         const Real& tolerance)
{
    GoodSpecReport rep;
    rep.samples = samples;
    if (!fam.H.involves(fam.param)) {
        rep.verdict = SpecVerdict::pass;
        rep.detail = "constant family: the fibres do not depend on the parameter";
        return rep;
    }
    if (samples.empty()) {
        rep.detail = "no samples";
        return rep;
    }
    auto lf = line_factors(fiber_at(fam, fam.t_star));
    if (!lf.complete) {
        rep.detail = "degenerate fibre is not a product of distinct lines: " + lf.detail;
        return rep;
    }
    std::vector<std::string>& line_names = rep.line_names;
    for (const auto& l : lf.lines)
        for (const auto& e : joint_embeddings({l.a.field(), l.b.field(), l.c.field()})) {
            rep.lines.push_back({exactmath::evaluate(l.a, e), exactmath::evaluate(l.b, e), exactmath::evaluate(l.c, e)});
            line_names.push_back(l.str());
        }

    std::vector<std::vector<NumericNode>> per_sample;
    for (const auto& t0 : samples) {
        std::vector<NumericNode> nodes;
        for (const auto& r : node_track(fam, {t0}))
            for (const auto& n : r.numeric)
                nodes.push_back(n);
        per_sample.push_back(std::move(nodes));
    }
    if (per_sample.front().empty()) {
        rep.detail = "no singular points to track";
        return rep;
    }
    // nearest-neighbour continuation
    size_t np = per_sample.front().size();
    std::vector<std::vector<NumericNode>> paths(np);
    for (size_t p = 0; p < np; ++p)
        paths[p].push_back(per_sample.front()[p]);
    for (size_t k = 1; k < per_sample.size(); ++k) {
        if (per_sample[k].size() != np) {
            rep.verdict = SpecVerdict::fail;
            rep.detail = "the number of singular points changes from " + std::to_string(np) + " to " +
                         std::to_string(per_sample[k].size()) + " at " + exactmath::var_name(fam.param) + " = " +
                         samples[k].str();
            return rep;
        }
        std::vector<bool> used(np, false);
        for (size_t p = 0; p < np; ++p) {
            const NumericNode& last = paths[p].back();
            size_t best = np;
            Real bd = 0;
            for (size_t q = 0; q < np; ++q) {
                if (used[q])
                    continue;
                Real d = abs(per_sample[k][q].x - last.x) + abs(per_sample[k][q].y - last.y);
                if (best == np || d < bd) {
                    best = q;
                    bd = d;
                }
            }
            used[best] = true;
            paths[p].push_back(per_sample[k][best]);
        }
    }

    auto pair_gaps = [&](const NumericNode& n, size_t i, size_t j, Real& pos, Real& slope) {
        const auto &li = rep.lines[i], &lj = rep.lines[j];
        Complex det = li[0] * lj[1] - lj[0] * li[1];
        Complex px = (-li[2] * lj[1] + lj[2] * li[1]) / det, py = (-li[0] * lj[2] + lj[0] * li[2]) / det;
        pos = sqrt(norm(n.x - px) + norm(n.y - py));
        std::array<Complex, 2> di{-li[1], li[0]}, dj{-lj[1], lj[0]};
        Real s1 = std::max(direction_gap(n.d1, di), direction_gap(n.d2, dj));
        Real s2 = std::max(direction_gap(n.d1, dj), direction_gap(n.d2, di));
        slope = std::min(s1, s2);
    };

    bool all = true;
    std::ostringstream why;
    for (size_t p = 0; p < np; ++p) {
        NodePath path;
        for (const auto& n : paths[p]) {
            path.x.push_back(n.x);
            path.y.push_back(n.y);
            path.tangents.push_back({n.d1, n.d2});
        }
        const NumericNode& fin = paths[p].back();
        Real best = -1;
        for (size_t i = 0; i < rep.lines.size(); ++i)
            for (size_t j = i + 1; j < rep.lines.size(); ++j) {
                const auto &li = rep.lines[i], &lj = rep.lines[j];
                if (abs(li[0] * lj[1] - lj[0] * li[1]) < Real("1e-30"))
                    continue;
                Real pos, slope;
                pair_gaps(fin, i, j, pos, slope);
                Real score = std::max(pos, slope);
                if (best < 0 || score < best) {
                    best = score;
                    path.line_i = static_cast<int>(i);
                    path.line_j = static_cast<int>(j);
                }
            }
        if (path.line_i < 0) {
            rep.detail = "the degenerate lines are parallel";
            return rep;
        }
        for (const auto& n : paths[p]) {
            Real pos, slope;
            pair_gaps(n, path.line_i, path.line_j, pos, slope);
            path.gaps.push_back(slope);
            path.position_gaps.push_back(pos);
        }
        path.monotone = true;
        for (size_t k = 1; k < path.gaps.size(); ++k)
            path.monotone = path.monotone && path.gaps[k] <= path.gaps[k - 1] + Real("1e-40");
        path.pass = path.monotone && path.gaps.back() < tolerance;
        if (!path.pass && all) {
            why << "node path " << p << " ends near (" << cdec(fin.x) << ", " << cdec(fin.y) << ") with tangents ("
                << cdec(fin.d1[0]) << ", " << cdec(fin.d1[1]) << ") and (" << cdec(fin.d2[0]) << ", "
                << cdec(fin.d2[1]) << "); closest incident pair " << line_names[path.line_i] << ", "
                << line_names[path.line_j] << " at gap " << rdec(path.gaps.back())
                << (path.monotone ? "" : "; the gap does not decrease monotonically");
        }
        all = all && path.pass;
        rep.paths.push_back(std::move(path));
    }
    rep.verdict = all ? SpecVerdict::pass : SpecVerdict::fail;
    if (all) {
        Real worst = 0;
        for (const auto& p : rep.paths)
            worst = std::max(worst, p.gaps.back());
        rep.detail = "every node tends to an intersection of two degenerate lines; final tangent gap " + rdec(worst);
    } else {
        rep.detail = why.str();
    }
    return rep;
}

} // namespace degeneration
