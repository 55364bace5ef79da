#include "curves/mobius.hpp"

#include "curves/asymptotes.hpp"

#include <algorithm>
#include <stdexcept>

namespace curves {

using exactmath::decide_zero;

namespace {

UniPoly X1() { return UniPoly::variable(); }

TruncSeries eval_series(const UniPoly& p, const TruncSeries& s)
{
    TruncSeries acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * s + TruncSeries(p.coeff(i));
    return acc;
}

} // namespace

MobiusMap MobiusMap::shear(const Scalar& alpha)
{
    MobiusMap g;
    g.a = X1() - UniPoly(alpha);
    return g;
}

std::string MobiusMap::violation() const
{
    if (!b.is_zero() && !b.coeff(0).is_zero())
        return "b(0) must be 0";
    if (decide_zero(a.coeff(0) * d.coeff(0)))
        return "a(0)*d(0) must be nonzero";
    if ((a * d - b * c).is_zero())
        return "a*d - b*c vanishes identically";
    return "";
}

void MobiusMap::validate() const
{
    std::string v = violation();
    if (!v.empty())
        throw std::invalid_argument("invalid Mobius map: " + v);
}

bool MobiusMap::is_identity() const { return b.is_zero() && c.is_zero() && !a.is_zero() && a == d; }

std::string MobiusMap::str(const std::string& var) const
{
    Var v = exactmath::var_id(var);
    MPoly num = MPoly::from_uni(a, exactmath::vars::x) * MPoly::variable(v) + MPoly::from_uni(b, exactmath::vars::x);
    MPoly den = MPoly::from_uni(c, exactmath::vars::x) * MPoly::variable(v) + MPoly::from_uni(d, exactmath::vars::x);
    if (den.is_constant() && !den.is_zero())
        return var + " -> " + num.scaled(den.constant_term().inverse()).str();
    return var + " -> (" + num.str() + ")/(" + den.str() + ")";
}

MPoly apply_mobius(const MPoly& C, const MobiusMap& g, Var vx, Var vz)
{
    g.validate();
    if (C.is_zero())
        throw std::invalid_argument("image of the zero polynomial");
    int n = C.degree(vz);
    auto r = C.coefficients(vz);
    MPoly Z = MPoly::variable(vz);
    MPoly P = MPoly::from_uni(g.d, vx) * Z - MPoly::from_uni(g.b, vx);
    MPoly Q = MPoly::from_uni(g.a, vx) - MPoly::from_uni(g.c, vx) * Z;
    std::vector<MPoly> Pp{MPoly(1)}, Qp{MPoly(1)};
    for (int j = 1; j <= n; ++j) {
        Pp.push_back(Pp.back() * P);
        Qp.push_back(Qp.back() * Q);
    }
    MPoly out;
    for (int j = 0; j <= n; ++j)
        if (!r[static_cast<size_t>(j)].is_zero())
            out += r[static_cast<size_t>(j)] * Pp[static_cast<size_t>(j)] * Qp[static_cast<size_t>(n - j)];
    if (out.is_zero())
        throw std::domain_error("degenerate transform");
    out = exactmath::primitive_part(out, vz, vx);
    if (out.degree(vz) < 1)
        throw std::domain_error("degenerate transform");
    return normalize(out);
}

MobiusMap mobius_inverse(const MobiusMap& g)
{
    g.validate();
    return MobiusMap{g.d, -g.b, -g.c, g.a};
}

MobiusMap compose(const MobiusMap& o, const MobiusMap& i)
{
    MobiusMap r{o.a * i.a + o.b * i.c, o.a * i.b + o.b * i.d, o.c * i.a + o.d * i.c, o.c * i.b + o.d * i.d};
    UniPoly h = exactmath::gcd(exactmath::gcd(r.a, r.b), exactmath::gcd(r.c, r.d));
    if (h.degree() > 0) {
        r.a = r.a / h;
        r.b = r.b / h;
        r.c = r.c / h;
        r.d = r.d / h;
    }
    return r;
}

namespace {

bool shear_like(const MobiusMap& g)
{
    return g.b.is_zero() && g.c.is_zero() && g.d.degree() == 0 && g.a.degree() == 1;
}

} // namespace

ProjPoint predict_center(const BranchParam& br, const MobiusMap& g, int B)
{
    const std::string unclassified = "unclassified: use transport_branch";
    switch (br.kind) {
    case BranchKind::finite: {
        Scalar al = br.center.x(), be = br.center.z();
        Scalar num = g.a.eval(al) * be + g.b.eval(al);
        Scalar den = g.c.eval(al) * be + g.d.eval(al);
        if (!decide_zero(den))
            return ProjPoint::affine(al, num / den);
        if (!decide_zero(num))
            return ProjPoint::Q1();
        throw std::domain_error(unclassified);
    }
    case BranchKind::hyperbolic_q1: {
        if (!br.tangent.is_vertical())
            throw std::domain_error(unclassified);
        Scalar al = br.tangent.vertical_abscissa();
        Scalar ca = g.c.eval(al), aa = g.a.eval(al);
        if (!decide_zero(ca))
            return ProjPoint::affine(al, aa / ca);
        if (!decide_zero(aa))
            return ProjPoint::Q1();
        throw std::domain_error(unclassified);
    }
    case BranchKind::parabolic_q1: {
        if (shear_like(g))
            return ProjPoint::Q1();
        // degrees in x of the nonzero entries: the pole orders along the branch
        auto degs = [](std::initializer_list<const UniPoly*> ps) {
            std::vector<int> d;
            for (const auto* p : ps)
                if (!p->is_zero())
                    d.push_back(p->degree());
            return d;
        };
        auto ab = degs({&g.a, &g.b}), cd = degs({&g.c, &g.d});
        int ab_max = *std::max_element(ab.begin(), ab.end()), ab_min = *std::min_element(ab.begin(), ab.end());
        int cd_max = *std::max_element(cd.begin(), cd.end()), cd_min = *std::min_element(cd.begin(), cd.end());
        if (ab_max + B < cd_min)
            return ProjPoint::X_inf();
        if (cd_max + B < ab_min)
            return ProjPoint::Q1();
        throw std::domain_error(unclassified);
    }
    case BranchKind::other_infinite: {
        if (shear_like(g) && !decide_zero(br.center.c[1]))
            return ProjPoint::Q1();
        throw std::domain_error(unclassified);
    }
    }
    throw std::domain_error(unclassified);
}

BranchParam transport_branch(const BranchParam& br, const MobiusMap& g)
{
    g.validate();
    const TruncSeries& X = br.param.x;
    const TruncSeries& Z = br.param.y;
    TruncSeries num = eval_series(g.a, X) * Z + eval_series(g.b, X);
    TruncSeries den = eval_series(g.c, X) * Z + eval_series(g.d, X);
    if (den.is_zero())
        throw std::domain_error("image of the branch is not determined to the truncation order: increase N");
    BranchParam out = make_branch_projective({X * den, num, den});
    std::optional<Rational> cap = num.precision();
    if (!cap)
        cap = Rational(series::default_truncation);
    out.param = {X, num * den.inverse(cap)};
    out.ram = br.ram;
    out.places = br.places;
    out.multiplicity = br.multiplicity;
    return out;
}

bool meets_infinity_only_at_q1(const MPoly& C, Var vx, Var vz)
{
    MPoly top = top_form(C, vx, vz);
    return top.size() == 1 && top.degree(vz) == 0;
}

namespace {

bool tangent_to_hyperbolic(const MPoly& C, const Scalar& al, Var vx, Var vz)
{
    for (const auto& as : asymptotes(C, vx, vz))
        if (as.b.is_zero() && decide_zero(as.t0 - al))
            return true;
    return false;
}

} // namespace

TransformLog shear_to_Q1(const MPoly& C, const Scalar& alpha, int max_iter, Var vx, Var vz)
{
    if (decide_zero(alpha))
        throw std::invalid_argument("shear parameter must be nonzero");
    if (tangent_to_hyperbolic(C, alpha, vx, vz))
        throw std::invalid_argument("x = " + alpha.str() + " is tangent to a hyperbolic branch at Q1");
    TransformLog log;
    log.curve = C;
    Scalar al = alpha;
    while (!meets_infinity_only_at_q1(log.curve, vx, vz)) {
        if (log.rounds() >= max_iter) {
            std::string pts;
            for (const auto& p : points_at_infinity(log.curve, vx, vz))
                pts += (pts.empty() ? "" : ", ") + p.point.str();
            throw std::runtime_error("shear limit of " + std::to_string(max_iter) +
                                     " rounds reached; curve now meets the line at infinity at " + pts);
        }
        while (decide_zero(al) || tangent_to_hyperbolic(log.curve, al, vx, vz))
            al += Scalar(1);
        MobiusMap g = MobiusMap::shear(al);
        log.curve = apply_mobius(log.curve, g, vx, vz);
        log.maps.push_back(g);
        log.alphas.push_back(al);
    }
    return log;
}

namespace {

UniPoly product_over(const std::vector<Scalar>& roots)
{
    UniPoly p(1);
    for (const auto& r : roots)
        p *= X1() - UniPoly(r);
    return p;
}

void add_unique(std::vector<Scalar>& v, const Scalar& s)
{
    for (const auto& t : v)
        if (t == s)
            return;
    v.push_back(s);
}

bool contains(const std::vector<Scalar>& v, const Scalar& s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

// small integers 1, -1, 2, -2, ...
Scalar nth_candidate(int k) { return Scalar(k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1)); }

std::string clashes(const MoverSpec& sp, const MobiusMap& g)
{
    std::vector<std::string> bad;
    std::string v = g.violation();
    if (!v.empty())
        bad.push_back(v);
    auto nz = [](const Scalar& s) { return !decide_zero(s); };
    switch (sp.kind) {
    case MoverKind::to_q1:
    case MoverKind::gather:
        for (const auto& al : sp.axes) {
            if (nz(g.c.eval(al)))
                bad.push_back("c(" + al.str() + ") != 0");
            if (nz(g.d.eval(al)))
                bad.push_back("d(" + al.str() + ") != 0");
            if (!nz(g.a.eval(al)))
                bad.push_back("a(" + al.str() + ") = 0");
        }
        for (const auto& [al, be] : sp.points)
            if (!nz(g.a.eval(al) * be + g.b.eval(al)))
                bad.push_back("a(" + al.str() + ")*" + be.str() + " + b(" + al.str() + ") = 0");
        if (sp.kind == MoverKind::gather) {
            for (const auto& de : sp.tangent_axes) {
                if (nz(g.c.eval(de)))
                    bad.push_back("c(" + de.str() + ") != 0");
                if (!nz(g.a.eval(de)))
                    bad.push_back("a(" + de.str() + ") = 0");
            }
            int cd = std::max(g.c.degree(), g.d.degree());
            int ab = g.b.is_zero() ? g.a.degree() : std::min(g.a.degree(), g.b.degree());
            if (!(cd + sp.bound < ab))
                bad.push_back("degree condition max(deg c, deg d) + B < min(deg a, deg b) fails");
        }
        break;
    case MoverKind::release:
        for (const auto& [al, be] : sp.points) {
            if (g.a.eval(al) * be + g.b.eval(al) != be)
                bad.push_back("a(" + al.str() + ")*beta + b(" + al.str() + ") != beta");
            if (g.c.eval(al) * be + g.d.eval(al) != Scalar(1))
                bad.push_back("c(" + al.str() + ")*beta + d(" + al.str() + ") != 1");
        }
        if (sp.nonvanishing_c) {
            for (const auto& [al, be] : sp.points)
                if (!nz(g.c.eval(al)))
                    bad.push_back("c(" + al.str() + ") = 0");
            for (const auto& de : sp.tangent_axes)
                if (!nz(g.c.eval(de)))
                    bad.push_back("c(" + de.str() + ") = 0");
        }
        if (sp.order_condition) {
            int ab = g.b.is_zero() ? g.a.degree() : std::max(g.a.degree(), g.b.degree());
            int cd = g.c.is_zero() ? g.d.degree() : std::min(g.c.degree(), g.d.degree());
            if (!(ab + sp.bound < cd))
                bad.push_back("degree condition max(deg a, deg b) + B < min(deg c, deg d) fails");
        }
        break;
    }
    std::string s;
    for (const auto& b : bad)
        s += (s.empty() ? "" : "; ") + b;
    return s;
}

MobiusMap mover_to_q1(const MoverSpec& sp)
{
    MobiusMap g;
    g.c = g.d = product_over(sp.axes);
    for (int k = -1; k < 64; ++k) {
        // b = 0 first, then b = mu*x
        g.b = k < 0 ? UniPoly() : UniPoly::monomial(nth_candidate(k), 1);
        bool ok = true;
        for (const auto& [al, be] : sp.points)
            ok = ok && !decide_zero(be + g.b.eval(al));
        if (ok && g.violation().empty())
            return g;
    }
    throw std::invalid_argument("no b(x) = mu*x avoids every listed point");
}

MobiusMap mover_gather(const MoverSpec& sp)
{
    std::vector<Scalar> both = sp.axes;
    for (const auto& de : sp.tangent_axes)
        add_unique(both, de);
    MobiusMap g;
    g.d = product_over(sp.axes);
    g.c = product_over(both);
    int K = std::max(g.c.degree(), g.d.degree()) + sp.bound + 1;
    for (int i = 0; i < 32; ++i) {
        Scalar lam = nth_candidate(i);
        g.a = UniPoly(1) + UniPoly::monomial(lam, K);
        bool ok = true;
        for (const auto& al : both)
            ok = ok && !decide_zero(g.a.eval(al));
        if (!ok)
            continue;
        for (int k = -1; k < 32; ++k) {
            g.b = k < 0 ? UniPoly() : UniPoly::monomial(nth_candidate(k), K);
            bool good = true;
            for (const auto& [al, be] : sp.points)
                good = good && !decide_zero(g.a.eval(al) * be + g.b.eval(al));
            if (good && g.violation().empty())
                return g;
        }
    }
    throw std::invalid_argument("no a(x) = 1 + lambda*x^K, b(x) = mu*x^K meets the listed points");
}

MobiusMap mover_release(const MoverSpec& sp)
{
    MobiusMap g;
    int K = sp.order_condition ? sp.bound + 1 : 1;
    if (sp.nonvanishing_c)
        g.c = UniPoly::monomial(Scalar(1), K);
    // interpolation data for d: d(0) = 1, d(alpha_j) = 1 - c(alpha_j) beta_j
    std::vector<Scalar> nodes{Scalar(0)}, values{Scalar(1)};
    for (const auto& [al, be] : sp.points) {
        Scalar want = Scalar(1) - g.c.eval(al) * be;
        auto it = std::find(nodes.begin(), nodes.end(), al);
        if (it != nodes.end()) {
            const Scalar& have = values[static_cast<size_t>(it - nodes.begin())];
            if (have != want)
                throw std::invalid_argument("clash on the axis x = " + al.str() + ": d must take both " +
                                            have.str() + " and " + want.str());
            continue;
        }
        nodes.push_back(al);
        values.push_back(want);
    }
    UniPoly d;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UniPoly basis(1);
        Scalar den(1);
        for (size_t j = 0; j < nodes.size(); ++j)
            if (j != i) {
                basis *= X1() - UniPoly(nodes[j]);
                den *= nodes[i] - nodes[j];
            }
        d += (values[i] / den) * basis;
    }
    if (sp.order_condition && d.degree() <= sp.bound) {
        UniPoly vanish = product_over(nodes);
        int pad = std::max(sp.bound + 1, d.degree() + 1) - vanish.degree();
        d += vanish.shift(std::max(pad, 0));
    }
    g.d = d;
    return g;
}

} // namespace

MobiusMap build_mover(const MoverSpec& sp)
{
    for (const auto* list : {&sp.axes, &sp.tangent_axes})
        for (const auto& al : *list)
            if (decide_zero(al))
                throw std::invalid_argument("the axis x = 0 cannot be constrained");
    for (const auto& [al, be] : sp.points)
        if (decide_zero(al))
            throw std::invalid_argument("the axis x = 0 cannot be constrained");
    if (sp.kind != MoverKind::release)
        for (const auto& [al, be] : sp.points)
            if (!contains(sp.axes, al))
                throw std::invalid_argument("point on x = " + al.str() + " is not on a listed axis");
    if (sp.axes.empty() && sp.tangent_axes.empty() && sp.points.empty())
        return MobiusMap::identity();
    MobiusMap g;
    switch (sp.kind) {
    case MoverKind::to_q1:
        g = mover_to_q1(sp);
        break;
    case MoverKind::gather:
        g = mover_gather(sp);
        break;
    case MoverKind::release:
        g = mover_release(sp);
        break;
    }
    std::string bad = clashes(sp, g);
    if (!bad.empty())
        throw std::invalid_argument("constraints cannot be met: " + bad);
    return g;
}

namespace {

int root_multiplicity(UniPoly p, const Scalar& r)
{
    int k = 0;
    while (!p.is_zero() && decide_zero(p.eval(r))) {
        p = divmod(p, UniPoly({-r, Scalar(1)})).first;
        ++k;
    }
    return k;
}

} // namespace

IsolationResult isolate_branch(const MPoly& C, const BranchParam& br, int max_iter, Var vx, Var vz)
{
    if (br.kind != BranchKind::finite)
        throw std::invalid_argument("isolation needs a branch in finite position");
    Scalar al = br.center.x();
    if (decide_zero(al))
        throw std::invalid_argument("isolation excludes the axis x = 0");
    if (series::branch_mult(C, br.param, series::AxisLine::vertical(al), vx, vz) != 1)
        throw std::invalid_argument("branch is not silver: it is not transverse to its vertical axis");
    IsolationResult res;
    res.log.curve = C;
    res.branch = br;
    res.centers.push_back(br.center);
    for (int round = 0;; ++round) {
        Scalar be = res.branch.center.z();
        UniPoly fibre = res.log.curve.eval(vx, al).to_uni(vz);
        if (root_multiplicity(fibre, be) == 1)
            return res;
        if (round >= max_iter)
            throw std::runtime_error("isolation did not finish within " + std::to_string(max_iter) + " rounds");
        MobiusMap g{UniPoly(al), UniPoly::monomial(-be, 1), UniPoly(), UniPoly(al) * (X1() - UniPoly(al))};
        res.log.curve = apply_mobius(res.log.curve, g, vx, vz);
        res.log.maps.push_back(g);
        res.branch = transport_branch(res.branch, g);
        if (res.branch.kind != BranchKind::finite)
            throw std::logic_error("isolation moved the branch off its axis");
        res.centers.push_back(res.branch.center);
    }
}

} // namespace curves
