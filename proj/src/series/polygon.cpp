#include "series/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace series {

using exactmath::Monomial;
using exactmath::RootClass;
namespace vars = exactmath::vars;

namespace {

using Support = std::map<std::pair<int, int>, Scalar>;  // (i, j) -> coefficient

Support to_support(const MPoly& G)
{
    Support s;
    for (const auto& [m, c] : G.terms()) {
        int i = exactmath::exponent(m, vars::x), j = exactmath::exponent(m, vars::y);
        if (exactmath::total_degree(m) != i + j)
            throw std::invalid_argument("local polynomial involves other variables");
        s[{i, j}] = c;
    }
    return s;
}

MPoly from_support(const Support& s)
{
    MPoly out;
    for (const auto& [ij, c] : s)
        out += MPoly(c) * MPoly::variable(vars::x).pow(ij.first) * MPoly::variable(vars::y).pow(ij.second);
    return out;
}

// drop coefficients that are zero under dynamic evaluation
Support decided(const Support& s)
{
    Support out;
    for (const auto& [ij, c] : s)
        if (!exactmath::decide_zero(c))
            out.emplace(ij, c);
    return out;
}

Integer binom(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

NewtonPolygon polygon_of(const Support& s0)
{
    NewtonPolygon P;
    for (const auto& [ij, c] : s0)
        P.support.push_back(ij);
    if (s0.empty())
        throw std::invalid_argument("Newton polygon of the zero polynomial");
    int ilow = s0.begin()->first.first;
    for (const auto& [ij, c] : s0)
        ilow = std::min(ilow, ij.first);
    P.vertical_component = ilow;
    Support s;
    for (const auto& [ij, c] : s0)
        s[{ij.first - ilow, ij.second}] = c;
    int ja = -1, jlow = -1;
    for (const auto& [ij, c] : s) {
        if (ij.first == 0 && (ja < 0 || ij.second < ja))
            ja = ij.second;
        if (jlow < 0 || ij.second < jlow)
            jlow = ij.second;
    }
    P.y_multiplicity = ja;
    if (ja <= 0)
        return P;
    int jc = ja, ic = 0;
    while (jc > jlow) {
        // smallest slope to a point on the left, ties to the farthest point
        bool found = false;
        Rational best;
        int bj = 0, bi = 0;
        for (const auto& [ij, c] : s) {
            auto [i, j] = ij;
            if (j >= jc)
                continue;
            Rational sl(i - ic, jc - j);
            sl.canonicalize();
            if (!found || sl < best || (sl == best && j < bj)) {
                found = true;
                best = sl;
                bj = j;
                bi = i;
            }
        }
        PolygonSegment seg;
        seg.i_left = bi;
        seg.j_left = bj;
        seg.i_right = ic;
        seg.j_right = jc;
        seg.slope = best;
        seg.length = jc - bj;
        seg.lattice_length = std::gcd(bi - ic, jc - bj);
        int q = static_cast<int>(best.get_den().get_si());
        std::vector<Scalar> e(seg.length + 1), ph(seg.length / q + 1);
        for (const auto& [ij, c] : s) {
            auto [i, j] = ij;
            if (j < bj || j > jc)
                continue;
            // on the segment iff i + slope*j equals the value at the right end
            if (Rational(i) + best * j == Rational(ic) + best * jc) {
                e[j - bj] = c;
                ph[(j - bj) / q] = c;
            }
        }
        seg.edge = UniPoly(e);
        seg.phi = UniPoly(ph);
        P.segments.push_back(seg);
        jc = bj;
        ic = bi;
    }
    if (jlow > 0) {
        PolygonSegment inf;
        inf.infinite = true;
        inf.j_left = 0;
        inf.j_right = jlow;
        inf.length = jlow;
        inf.lattice_length = jlow;
        P.segments.push_back(inf);
    }
    return P;
}

struct Prefix {
    int Q = 1;                   // x = tau^Q
    std::map<long, Scalar> y;    // y = sum y_k tau^k + tau^E * (current unknown)
    int E = 0;
};

PuiseuxBranch finish(const Prefix& pre, const std::optional<TruncSeries>& tail, int places, int mult,
                     bool unresolved)
{
    PuiseuxBranch b;
    b.ram = pre.Q;
    b.places = places;
    b.multiplicity = mult;
    b.unresolved = unresolved;
    b.param.x = TruncSeries::monomial(Scalar(1), Rational(pre.Q));
    TruncSeries y = TruncSeries::from_terms(1, pre.y);
    if (tail)
        y = y + tail->shifted(Rational(pre.E));
    else if (unresolved)
        y = y.truncated(Rational(pre.E));
    b.param.y = y;
    b.field = y.field();
    return b;
}

std::vector<PuiseuxBranch> recurse(const Support& G0, const Prefix& pre, int places, int depth, int N,
                                   int max_depth)
{
    std::vector<PuiseuxBranch> out;
    Support G = decided(G0);
    NewtonPolygon P = polygon_of(G);
    if (P.vertical_component > 0 && depth > 0)
        throw std::logic_error("unexpected base factor in Newton recursion");
    if (P.y_multiplicity <= 0)
        return out;
    if (depth >= max_depth) {
        out.push_back(finish(pre, std::nullopt, places, 1, true));
        return out;
    }
    for (const auto& seg : P.segments) {
        if (seg.infinite) {
            out.push_back(finish(pre, TruncSeries(), places, seg.length, false));
            continue;
        }
        int p = static_cast<int>(seg.slope.get_num().get_si());
        int q = static_cast<int>(seg.slope.get_den().get_si());
        int L = q * seg.i_right + p * seg.j_right;
        // roots of phi must live over the field of G even when phi is rational
        FieldPtr KG;
        for (const auto& [ij, a] : G)
            KG = exactmath::common_field(KG, a.field());
        for (const auto& [k, v] : pre.y)
            KG = exactmath::common_field(KG, v.field());
        for (const auto& tc : exactmath::root_classes(seg.phi, KG)) {
            auto per_t = exactmath::split_eval(tc, [&](const RootClass& T) {
                auto with_c = [&](const Scalar& c) {
                    Support G1;
                    for (const auto& [ij, a] : G) {
                        auto [i, j] = ij;
                        int e = q * i + p * j - L;
                        Scalar cp(1);
                        std::vector<Scalar> cpow(j + 1);
                        for (int l = 0; l <= j; ++l) {
                            cpow[l] = cp;
                            cp *= c;
                        }
                        for (int l = 0; l <= j; ++l) {
                            Scalar v = a * Scalar(binom(j, l)) * cpow[j - l];
                            auto& slot = G1[{e, l}];
                            slot += v;
                        }
                    }
                    Prefix np;
                    np.Q = pre.Q * q;
                    for (const auto& [k, v] : pre.y)
                        np.y.emplace(k * q, v);
                    np.E = pre.E * q + p;
                    np.y[np.E] += c;
                    int nplaces = places * T.degree();
                    if (T.multiplicity == 1) {
                        MPoly g1 = from_support(decided(G1));
                        int n1 = std::max(0, N - np.E);
                        TruncSeries tail = newton_lift(g1, Scalar(0), n1);
                        return std::vector<PuiseuxBranch>{finish(np, tail, nplaces, 1, false)};
                    }
                    return recurse(G1, np, nplaces, depth + 1, N, max_depth);
                };
                if (q == 1)
                    return with_c(T.value);
                UniPoly uq = UniPoly::monomial(Scalar(1), q) - UniPoly(T.value);
                auto cc = exactmath::root_classes(uq, exactmath::common_field(KG, T.value.field()));
                const RootClass& c0 = cc.front();
                auto per_c = exactmath::split_eval(c0, [&](const RootClass& C) { return with_c(C.value); });
                // every root of u^q = T gives the same place; keep the first factor
                return per_c.front().second;
            });
            for (auto& [cls, branches] : per_t)
                for (auto& b : branches)
                    out.push_back(std::move(b));
        }
    }
    return out;
}

TruncSeries eval_uni(const UniPoly& p, const TruncSeries& s)
{
    TruncSeries acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * s + TruncSeries(p.coeff(i));
    return acc;
}

} // namespace

NewtonPolygon newton_polygon_local(const MPoly& G) { return polygon_of(decided(to_support(G))); }

Chart make_chart(const MPoly& F, const Scalar& X, const Scalar& Y, const Scalar& W, Var vx, Var vy)
{
    Chart ch;
    MPoly x = MPoly::variable(vars::x), y = MPoly::variable(vars::y);
    int m = F.total_degree({vx, vy});
    MPoly H = F.homogenize({vx, vy}, vars::w, m);
    if (!W.is_zero()) {
        ch.kind = ChartKind::affine;
        ch.a = X / W;
        ch.b = Y / W;
        ch.G = F.subs({{vx, x + MPoly(ch.a)}, {vy, y + MPoly(ch.b)}});
    } else if (!X.is_zero()) {
        ch.kind = ChartKind::direction;
        ch.b = Y / X;
        ch.G = H.subs({{vx, MPoly(1)}, {vy, y + MPoly(ch.b)}, {vars::w, x}});
    } else if (!Y.is_zero()) {
        ch.kind = ChartKind::q1;
        ch.G = H.subs({{vx, y}, {vy, MPoly(1)}, {vars::w, x}});
    } else {
        throw std::invalid_argument("projective point with all coordinates zero");
    }
    if (!ch.G.is_zero() && exactmath::decide_zero(ch.G.constant_term()) == false)
        throw std::invalid_argument("centre is not on the curve");
    return ch;
}

NewtonPolygon newton_polygon(const MPoly& F, const Scalar& a, const Scalar& b, Var vx, Var vy)
{
    return newton_polygon_local(make_chart(F, a, b, Scalar(1), vx, vy).G);
}

NewtonPolygon newton_polygon_at_infinity(const MPoly& F, const Scalar& X, const Scalar& Y, Var vx, Var vy)
{
    return newton_polygon_local(make_chart(F, X, Y, Scalar(0), vx, vy).G);
}

std::vector<PuiseuxBranch> puiseux_local(const MPoly& G, int N, int max_depth)
{
    Support s = decided(to_support(G));
    if (s.empty())
        throw std::invalid_argument("branches of the zero polynomial");
    if (s.count({0, 0}))
        throw std::invalid_argument("centre is not on the curve");
    std::vector<PuiseuxBranch> out;
    int ilow = s.begin()->first.first;
    for (const auto& [ij, c] : s)
        ilow = std::min(ilow, ij.first);
    if (ilow > 0) {
        PuiseuxBranch v;
        v.vertical = true;
        v.multiplicity = ilow;
        v.param.x = TruncSeries();
        v.param.y = TruncSeries::monomial(Scalar(1), Rational(1));
        out.push_back(v);
        Support t;
        for (const auto& [ij, c] : s)
            t[{ij.first - ilow, ij.second}] = c;
        s = std::move(t);
        if (s.count({0, 0}))
            return out;
    }
    auto rest = recurse(s, Prefix{}, 1, 0, N, max_depth);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<PuiseuxBranch> puiseux_branches(const Chart& ch, int N, int max_depth)
{
    auto local = puiseux_local(ch.G, N, max_depth);
    for (auto& b : local) {
        TruncSeries u = b.param.x, v = b.param.y;
        switch (ch.kind) {
        case ChartKind::affine:
            b.param.x = u + TruncSeries(ch.a);
            b.param.y = v + TruncSeries(ch.b);
            break;
        case ChartKind::direction: {
            TruncSeries inv = u.inverse();
            b.param.x = inv;
            b.param.y = (v + TruncSeries(ch.b)) * inv;
            break;
        }
        case ChartKind::q1: {
            TruncSeries inv = u.inverse();
            b.param.x = v * inv;
            b.param.y = inv;
            break;
        }
        }
    }
    return local;
}

std::vector<PuiseuxBranch> puiseux_at(const MPoly& F, const Scalar& a, const Scalar& b, int N, Var vx, Var vy)
{
    return puiseux_branches(make_chart(F, a, b, Scalar(1), vx, vy), N);
}

TruncSeries eval_along(const MPoly& F, const Parametrization& p, Var vx, Var vy)
{
    auto cs = y_coefficients(F, vx, vy);
    TruncSeries acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * p.y + eval_uni(*it, p.x);
    return acc;
}

int branch_mult(const MPoly& F, const Parametrization& p, const AxisLine& line, Var vx, Var vy)
{
    TruncSeries val = eval_along(F, p, vx, vy);
    if (!val.is_zero())
        throw std::invalid_argument("parametrization does not satisfy the curve to its truncation order");
    if (line.at_infinity) {
        auto ox = p.x.ord(), oy = p.y.ord();
        if ((!ox && !p.x.is_exact()) || (!oy && !p.y.is_exact()))
            throw std::domain_error("truncation too short to resolve the order: increase N");
        Rational lo(0);
        if (ox && *ox < lo)
            lo = *ox;
        if (oy && *oy < lo)
            lo = *oy;
        if (lo >= 0)
            throw std::invalid_argument("branch is not centred on the line at infinity");
        Rational r = -lo;
        if (r.get_den() != 1)
            throw std::invalid_argument("parametrization is not on an integral grid");
        return static_cast<int>(r.get_num().get_si());
    }
    TruncSeries d = p.x - TruncSeries(line.a);
    auto o = d.ord();
    if (!o) {
        if (d.is_exact())
            throw std::invalid_argument("branch lies on the axis");
        throw std::domain_error("truncation too short to resolve the order: increase N");
    }
    if (*o <= 0)
        throw std::invalid_argument("branch is not centred on the axis");
    if (o->get_den() != 1)
        throw std::invalid_argument("parametrization is not on an integral grid");
    return static_cast<int>(o->get_num().get_si());
}

} // namespace series
