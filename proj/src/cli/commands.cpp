#include "cli/commands.hpp"

#include "cli/parser.hpp"
#include "curves/asymptotes.hpp"
#include "curves/classify.hpp"
#include "curves/mobius.hpp"
#include "curves/presentation.hpp"
#include "degeneration/checks.hpp"
#include "series/lift.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace cli {

using curves::BranchParam;
using curves::MobiusMap;
using curves::ProjPoint;
using exactmath::MPoly;
using exactmath::Rational;
using exactmath::Scalar;
using exactmath::UniPoly;
using exactmath::Var;
namespace vars = exactmath::vars;

namespace {

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

std::string brace(const std::vector<std::string>& v) { return v.empty() ? "none" : "{" + join(v, ", ") + "}"; }

// " where u1^2 + 1 = 0" for the first algebraic value, else empty
std::string field_note(const std::vector<Scalar>& vals)
{
    for (const auto& v : vals)
        if (!v.is_rational()) {
            std::vector<std::string> eqs;
            for (auto f = v.field(); f; f = f->base())
                eqs.push_back(f->modulus_str() + " = 0");
            return " where " + join(eqs, ", ");
        }
    return "";
}

std::string dec(const exactmath::Complex& c) { return exactmath::decimal(c, 12); }
std::string dec(const exactmath::Real& r) { return exactmath::decimal(r, 12); }

// Parse a polynomial in x and `second`; the other of y, z is renamed when it is
// used alone.
MPoly bivariate(const std::string& expr, Var second, Report& r)
{
    MPoly F = parse_poly(expr);
    Var other = second == vars::y ? vars::z : vars::y;
    r.inputs["expr"] = expr;
    if (F.involves(other) && !F.involves(second)) {
        F = F.subs(other, MPoly::variable(second));
        r.inputs["renamed"] = exactmath::var_name(other) + " -> " + exactmath::var_name(second);
    }
    for (Var v : F.variables())
        if (v != vars::x && v != second)
            throw InputError("expected a polynomial in x, " + exactmath::var_name(second) + "; found variable " +
                             exactmath::var_name(v));
    if (F.is_constant())
        throw InputError("expected a nonconstant polynomial");
    r.inputs["parsed"] = print_poly(F);
    return F;
}

Scalar rational_arg(const std::string& text, const std::string& what)
{
    try {
        return Scalar(exactmath::parse_rational(text));
    } catch (const std::exception&) {
        throw InputError(what + ": '" + text + "' is not a rational number");
    }
}

int int_arg(const std::string& text, const std::string& what)
{
    try {
        size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InputError(what + ": '" + text + "' is not an integer");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) {
        size_t b = part.find_first_not_of(' ');
        size_t e = part.find_last_not_of(' ');
        if (b != std::string::npos)
            out.push_back(part.substr(b, e - b + 1));
    }
    return out;
}

// ---- analyze ----

void run_present(const MPoly& F, Report& r)
{
    static const char* names[5] = {"c1 line at infinity transverse", "c2 fibre over x = 0", "c3 top form squarefree",
                                   "c4 special fibres", "c5 singularity types"};
    auto rep = curves::presentation_check(F);
    json j;
    j["m"] = rep.m;
    json checks = json::array();
    for (int i = 0; i < 5; ++i) {
        checks.push_back({{"name", names[i]}, {"pass", rep.checks[i].pass}, {"witness", rep.checks[i].witness}});
        r.verdict(std::string("presentation ") + names[i], rep.checks[i].pass, rep.checks[i].witness);
    }
    j["checks"] = checks;
    json crit = json::array();
    for (const auto& c : rep.critical)
        crit.push_back({{"x", scalar_json(c.x)},
                        {"y", scalar_json(c.y)},
                        {"x_minpoly", c.x_minpoly.str("x")},
                        {"conjugates", c.conjugates},
                        {"gcd_degree", c.gcd_degree},
                        {"kind", curves::to_string(c.kind)}});
    j["critical"] = crit;
    if (rep.pass()) {
        json fibres = json::array();
        bool ok = true;
        std::vector<std::string> xs;
        for (const auto& f : curves::critical_fiber_analysis(F)) {
            fibres.push_back({{"x", scalar_json(f.x)},
                              {"x_minpoly", f.x_minpoly.str("x")},
                              {"conjugates", f.conjugates},
                              {"collision_pairs", f.collision_pairs},
                              {"higher_collisions", f.higher_collisions}});
            ok = ok && f.ok();
            xs.push_back(f.x.is_rational() ? f.x.str() : "root of " + f.x_minpoly.str("x"));
        }
        j["critical_fibres"] = fibres;
        r.verdict("critical fibres have one collision each", ok, "critical abscissae " + brace(xs));
    }
    r.results["presentation"] = j;
}

void run_asymptotes(const MPoly& F, Report& r)
{
    auto as = curves::asymptotes(F);
    json list = json::array();
    std::vector<std::string> names;
    for (const auto& a : as) {
        list.push_back({{"line", a.str()},
                        {"a", scalar_json(a.a)},
                        {"b", scalar_json(a.b)},
                        {"t0", scalar_json(a.t0)},
                        {"direction_multiplicity", a.r},
                        {"order", a.s},
                        {"conjugates", a.conjugates},
                        {"provenance", a.provenance()}});
        names.push_back(a.str());
        r.say("asymptote " + a.str() + "  (" + a.provenance() + ", r = " + std::to_string(a.r) +
              (a.conjugates > 1 ? ", " + std::to_string(a.conjugates) + " conjugates" : "") + ")" +
              field_note({a.a, a.b, a.t0}));
    }
    r.results["asymptotes"] = list;
    r.results["asymptote_count"] = curves::asymptote_count(as);
    r.verdict("asymptotes", Status::info, brace(names));
}

void run_factor(const MPoly& F, int N, Report& r)
{
    auto ff = series::factor_fibrewise(F, N, series::LiftScheme::successive);
    auto fr = series::factor_fibrewise(F, N, series::LiftScheme::raphson);
    json sheets = json::array();
    // algebraic sheets live in separately built fields, so compare their traces
    bool agree = ff.sheets.size() == fr.sheets.size() && ff.elementary == fr.elementary;
    for (size_t i = 0; i < ff.sheets.size(); ++i) {
        const auto& s = ff.sheets[i];
        if (agree) {
            const auto& o = fr.sheets[i];
            if (!s.field && !o.field)
                agree = s.a == o.a && s.eta == o.eta;
            else if (s.field && o.field)
                agree = series::trace_series(s.eta, s.field) == series::trace_series(o.eta, o.field);
            else
                agree = false;
        }
        json js{{"a", scalar_json(s.a)}, {"eta", s.eta.str("x")}, {"conjugates", s.conjugates}};
        if (s.field)
            js["field"] = field_json(s.field);
        sheets.push_back(js);
        r.say("sheet eta(0) = " + s.a.str() + ": " + s.eta.str("x"));
    }
    json el = json::array();
    for (const auto& e : ff.elementary)
        el.push_back(e.str("x"));
    r.results["factor"] = {{"N", N},
                           {"m", ff.m},
                           {"sheets", sheets},
                           {"elementary", el},
                           {"vieta_ok", ff.vieta_ok},
                           {"product_checked", ff.product_checked},
                           {"product_ok", ff.product_ok},
                           {"schemes_agree", agree}};
    std::string order = "mod x^" + std::to_string(N + 1);
    r.verdict("Vieta identities " + order, ff.vieta_ok, "e_k of the sheets match the coefficients of F");
    if (ff.product_checked)
        r.verdict("product identity " + order, ff.product_ok, "prod (y - eta_j) = F");
    else
        r.verdict("product identity " + order, Status::info,
                  "sheets are algebraic; the identity is carried by the Vieta check");
    r.verdict("successive and doubling lifts agree", agree, std::to_string(ff.sheets.size()) + " sheet classes");
}

json branch_rows(const curves::UniformityReport& u)
{
    json rows = json::array();
    for (const auto& [b, c] : u.branches)
        rows.push_back({{"center", b.center.str()},
                        {"kind", curves::to_string(b.kind)},
                        {"tangent", b.tangent.str()},
                        {"color", c.str()},
                        {"axis_mult", c.axis_mult}});
    return rows;
}

void run_classify(const MPoly& F, int N, Report& r)
{
    json j;
    for (bool inf : {false, true}) {
        auto axis = inf ? curves::Axis::infinity() : curves::Axis::vertical(Scalar(0));
        std::string name = inf ? "line at infinity" : "x = 0";
        auto u = curves::uniformity_check(F, axis, N, vars::x, vars::y);
        j[inf ? "infinity" : "axis_0"] = {
            {"verdict", curves::to_string(u.verdict)}, {"branches", branch_rows(u)},
            {"assumption", u.assumption}};
        for (const auto& [b, c] : u.branches)
            r.say(name + ": branch at " + b.center.str() + " (" + curves::to_string(b.kind) + ") " + c.str());
        r.verdict("uniformity on " + name, Status::info, curves::to_string(u.verdict) + "; " + u.assumption);
    }
    r.results["classify"] = j;
}

void run_points(const MPoly& F, int K, Report& r)
{
    json pts = json::array();
    int count = 0;
    for (int i = 0; i < K; ++i) {
        UniPoly f = F.eval(vars::x, Scalar(i)).to_uni(vars::y);
        if (f.is_zero())
            continue;
        for (const auto& y : exactmath::rational_roots(f)) {
            pts.push_back({rational_json(Rational(i)), rational_json(y)});
            ++count;
        }
    }
    r.results["points"] = pts;
    r.verdict("rational sample points", Status::info, std::to_string(count) + " points over x = 0.." +
                                                          std::to_string(K - 1));
}

// ---- transform ----

struct Step {
    std::string text, op;
    std::map<std::string, std::string> kv;
    int line = 0;

    bool has(const std::string& k) const { return kv.count(k) > 0; }
    const std::string& get(const std::string& k) const
    {
        auto it = kv.find(k);
        if (it == kv.end())
            throw InputError(where() + "missing " + k + "=");
        return it->second;
    }
    std::string where() const { return "step " + std::to_string(line) + " (" + op + "): "; }
};

Step parse_step(const std::string& text, int line)
{
    Step s;
    s.text = text;
    s.line = line;
    std::istringstream in(text);
    in >> s.op;
    std::string tok;
    static const std::map<std::string, std::vector<std::string>> keys{
        {"identity", {}},
        {"mobius", {"a", "b", "c", "d"}},
        {"shear", {"alpha"}},
        {"shear-to-q1", {"alpha", "max"}},
        {"isolate", {"at", "max", "branch"}},
        {"mover", {"kind", "axes", "tangents", "points", "bound", "nonvanishing_c", "order_condition"}},
    };
    auto known = keys.find(s.op);
    if (known == keys.end())
        throw InputError("step " + std::to_string(line) + ": unknown operation '" + s.op +
                         "' (identity, mobius, shear, shear-to-q1, isolate, mover)");
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw InputError(s.where() + "expected key=value, got '" + tok + "'");
        std::string k = tok.substr(0, eq);
        if (std::find(known->second.begin(), known->second.end(), k) == known->second.end())
            throw InputError(s.where() + "unknown key '" + k + "'");
        s.kv[k] = tok.substr(eq + 1);
    }
    return s;
}

UniPoly uni_arg(const Step& s, const std::string& k, int fallback)
{
    if (!s.has(k))
        return UniPoly(Scalar(fallback));
    MPoly p = parse_poly(s.get(k));
    for (Var v : p.variables())
        if (v != vars::x)
            throw InputError(s.where() + k + " must be a polynomial in x");
    return p.to_uni(vars::x);
}

std::vector<Scalar> scalar_list(const Step& s, const std::string& k)
{
    std::vector<Scalar> out;
    if (s.has(k))
        for (const auto& part : split(s.get(k), ','))
            out.push_back(rational_arg(part, s.where() + k));
    return out;
}

void check_map(const Step& s, const MobiusMap& g)
{
    std::string why = g.violation();
    if (!why.empty())
        throw InputError(s.where() + "invalid map " + g.str() + ": " + why);
}

// Centres worth watching: the fibres over x = 0 and over the rational roots of
// the map's coefficients, and the points at infinity.
std::vector<ProjPoint> watched_centres(const MPoly& C, const std::vector<MobiusMap>& maps)
{
    std::vector<Scalar> axes{Scalar(0)};
    for (const auto& g : maps)
        for (const UniPoly* p : {&g.a, &g.b, &g.c, &g.d})
            if (p->degree() > 0)
                for (const auto& q : exactmath::rational_roots(*p))
                    if (std::find(axes.begin(), axes.end(), Scalar(q)) == axes.end())
                        axes.emplace_back(q);
    std::vector<ProjPoint> out;
    for (const auto& a : axes) {
        UniPoly f = C.eval(vars::x, a).to_uni(vars::z);
        if (f.degree() <= 0)
            continue;
        for (const auto& rc : exactmath::root_classes(exactmath::squarefree_part(f)))
            out.push_back(ProjPoint::affine(a, rc.value));
    }
    for (const auto& ip : curves::points_at_infinity(C))
        out.push_back(ip.point);
    return out;
}

json describe_curve(const MPoly& C, const std::vector<ProjPoint>& centres, int N, Report& r)
{
    json table = json::array();
    for (const auto& P : centres) {
        std::vector<BranchParam> bs;
        try {
            bs = curves::branches_at(C, P, N);
        } catch (const exactmath::ExtensionBudgetExceeded&) {
            throw;
        } catch (const std::exception& e) {
            table.push_back({{"center", P.str()}, {"error", e.what()}});
            r.say("    " + P.str() + ": branches unavailable: " + e.what());
            continue;
        }
        for (const auto& b : bs) {
            std::string colour;
            try {
                colour = curves::classify_branch(C, b).str();
            } catch (const exactmath::ExtensionBudgetExceeded&) {
                throw;
            } catch (const std::exception& e) {
                colour = std::string("unclassified: ") + e.what();
            }
            table.push_back({{"center", P.str()},
                             {"kind", curves::to_string(b.kind)},
                             {"tangent", b.tangent.str()},
                             {"color", colour}});
            r.say("    " + P.str() + "  " + curves::to_string(b.kind) + ", tangent " + b.tangent.str() + ", " +
                  colour);
        }
    }
    return table;
}

struct VerifyCount {
    int agree = 0, disagree = 0, skipped = 0;
    std::vector<std::string> mismatches, skips;
};

void verify_map(const MPoly& C, const MobiusMap& g, int N, VerifyCount& vc)
{
    int B = C.total_degree();
    for (const auto& P : watched_centres(C, {g})) {
        std::vector<BranchParam> bs;
        try {
            bs = curves::branches_at(C, P, N);
        } catch (const exactmath::ExtensionBudgetExceeded&) {
            throw;
        } catch (const std::exception& e) {
            ++vc.skipped;
            vc.skips.push_back(P.str() + ": " + e.what());
            continue;
        }
        for (const auto& b : bs) {
            ProjPoint pred, got;
            try {
                pred = curves::predict_center(b, g, B);
                got = curves::transport_branch(b, g).center;
            } catch (const exactmath::ExtensionBudgetExceeded&) {
                throw;
            } catch (const std::exception& e) {
                ++vc.skipped;
                vc.skips.push_back(P.str() + ": " + e.what());
                continue;
            }
            if (pred == got) {
                ++vc.agree;
            } else {
                ++vc.disagree;
                vc.mismatches.push_back(P.str() + " predicted " + pred.str() + ", transported " + got.str());
            }
        }
    }
}

curves::MoverSpec mover_spec(const Step& s)
{
    curves::MoverSpec spec;
    const std::string& kind = s.get("kind");
    if (kind == "to_q1")
        spec.kind = curves::MoverKind::to_q1;
    else if (kind == "gather")
        spec.kind = curves::MoverKind::gather;
    else if (kind == "release")
        spec.kind = curves::MoverKind::release;
    else
        throw InputError(s.where() + "kind must be to_q1, gather or release");
    spec.axes = scalar_list(s, "axes");
    spec.tangent_axes = scalar_list(s, "tangents");
    if (s.has("points"))
        for (const auto& pt : split(s.get("points"), ',')) {
            auto ab = split(pt, ':');
            if (ab.size() != 2)
                throw InputError(s.where() + "points are alpha:beta pairs, got '" + pt + "'");
            spec.points.emplace_back(rational_arg(ab[0], s.where() + "points"), rational_arg(ab[1], s.where() + "points"));
        }
    if (s.has("bound"))
        spec.bound = int_arg(s.get("bound"), s.where() + "bound");
    if (s.has("nonvanishing_c"))
        spec.nonvanishing_c = int_arg(s.get("nonvanishing_c"), s.where() + "nonvanishing_c") != 0;
    if (s.has("order_condition"))
        spec.order_condition = int_arg(s.get("order_condition"), s.where() + "order_condition") != 0;
    return spec;
}

// ---- degenerate ----

void run_fiber(const degeneration::CurveFamily& fam, const Scalar& t0, Report& r)
{
    const std::string& p = exactmath::var_name(fam.param);
    MPoly f = degeneration::fiber_at(fam, t0);
    std::string label = "fibre at " + p + " = " + t0.str();
    if (f.is_zero()) {
        r.verdict(label, false, "the fibre vanishes identically");
        return;
    }
    MPoly fXY = f.subs({{vars::x, MPoly::variable(vars::X)}, {vars::y, MPoly::variable(vars::Y)}});
    auto lf = degeneration::line_factors(f);
    json lines = json::array();
    std::vector<std::string> names;
    for (const auto& l : lf.lines) {
        lines.push_back({{"line", l.str()}, {"conjugates", l.conjugates}});
        names.push_back(l.str());
    }
    json j{{"parameter", scalar_json(t0)},
           {"fiber", fXY.str()},
           {"degree", f.total_degree()},
           {"lines", lines},
           {"complete", lf.complete}};
    r.say(label + ": " + fXY.str());
    if (!names.empty())
        r.say("  line factors " + brace(names) + (lf.complete ? "" : " (incomplete)"));
    if (t0 == fam.t_star) {
        auto v = degeneration::degenerate_fiber_check(fam);
        j["vertex"] = {scalar_json(v.O[0]), scalar_json(v.O[1])};
        r.verdict("degenerate fibre is a union of lines through the vertex", v.pass, v.detail);
    } else {
        std::string cert = degeneration::irreducibility_certificate(f);
        j["irreducibility"] = cert;
        r.verdict("irreducibility of the sampled fibre", Status::info, cert);
    }
    r.results["fibers"].push_back(j);
}

void run_asymptotic(const degeneration::CurveFamily& fam, const std::string& mode, bool at_infinity, Report& r)
{
    if (mode != "strict" && mode != "weak")
        throw InputError("--check-asymptotic takes strict or weak, got '" + mode + "'");
    degeneration::AsymptoticOptions opts;
    opts.weak = mode == "weak";
    opts.at_infinity = at_infinity;
    auto v = degeneration::asymptotic_check(fam, opts);
    const std::string& p = exactmath::var_name(fam.param);
    json pts = json::array();
    for (const auto& a : v.points) {
        json jp{{"a", scalar_json(a.a)}, {"conjugates", a.conjugates}, {"fixed_tangent", a.fixed_tangent}};
        jp["gradient"] = a.gradient ? json(a.gradient->str(p)) : json(nullptr);
        pts.push_back(jp);
        r.say("axis point (0, " + a.a.str() + "): gradient " + (a.gradient ? a.gradient->str(p) : "undefined") +
              (a.fixed_tangent ? ", fixed" : ""));
    }
    r.results["asymptotic"] = {{"mode", v.mode},
                               {"pass", v.pass},
                               {"fixed_points", v.fixed_points},
                               {"tangents", v.tangents},
                               {"infinity", v.infinity},
                               {"points", pts},
                               {"failures", v.failures},
                               {"irreducibility", v.irreducible}};
    std::string witness = v.pass ? std::to_string(v.points.size()) + " fixed axis point classes" : join(v.failures, "; ");
    r.verdict("asymptotic degeneration (" + v.mode + ")", v.pass, witness);
    if (!v.irreducible.empty())
        r.verdict("irreducibility of a sampled fibre", Status::info, v.irreducible);
}

void run_track(const degeneration::CurveFamily& fam, const std::string& list, Report& r)
{
    std::vector<Scalar> samples;
    for (const auto& part : split(list, ','))
        samples.push_back(rational_arg(part, "--track"));
    if (samples.empty())
        throw InputError("--track needs at least one parameter value");
    const std::string& p = exactmath::var_name(fam.param);
    std::vector<degeneration::NodeRecord> recs;
    try {
        recs = degeneration::node_track(fam, samples);
    } catch (const exactmath::ExtensionBudgetExceeded&) {
        throw;
    } catch (const std::runtime_error& e) {
        r.verdict("node tracking", false, e.what());
        return;
    }
    json rows = json::array();
    bool nodal = true;
    std::map<std::string, int> counts;
    for (const auto& rec : recs) {
        json num = json::array();
        for (const auto& n : rec.numeric)
            num.push_back({{"x", exactmath::decimal(n.x)},
                           {"y", exactmath::decimal(n.y)},
                           {"d1", {exactmath::decimal(n.d1[0]), exactmath::decimal(n.d1[1])}},
                           {"d2", {exactmath::decimal(n.d2[0]), exactmath::decimal(n.d2[1])}}});
        rows.push_back({{"parameter", scalar_json(rec.t)},
                        {"x", scalar_json(rec.x)},
                        {"y", scalar_json(rec.y)},
                        {"conjugates", rec.conjugates},
                        {"tangent_cone", rec.slopes()},
                        {"nodal", rec.nodal},
                        {"numeric", num}});
        nodal = nodal && rec.nodal;
        counts[rec.t.str()] += rec.conjugates;
        r.say(p + " = " + rec.t.str() + ": singular point (" + rec.x.str() + ", " + rec.y.str() + ")" +
              (rec.conjugates > 1 ? " x" + std::to_string(rec.conjugates) : "") + ", tangent cone " + rec.slopes() +
              (rec.nodal ? "" : " (not a node)"));
    }
    r.results["track"] = rows;
    std::vector<std::string> per;
    for (const auto& t : samples)
        per.push_back(p + " = " + t.str() + ": " + std::to_string(counts[t.str()]));
    r.verdict("every tracked singular point is a node", nodal, join(per, ", "));
}

void run_good_spec(const degeneration::CurveFamily& fam, int n, const std::string& tol, Report& r)
{
    if (n < 1)
        throw InputError("--samples must be positive");
    exactmath::Real tolerance;
    try {
        tolerance = exactmath::Real(tol);
    } catch (const std::exception&) {
        throw InputError("--tol: '" + tol + "' is not a number");
    }
    auto samples = degeneration::approach_sequence(fam, n);
    auto rep = degeneration::good_specialization_check(fam, samples, tolerance);
    const std::string& p = exactmath::var_name(fam.param);
    json paths = json::array();
    for (size_t k = 0; k < rep.paths.size(); ++k) {
        const auto& path = rep.paths[k];
        json rows = json::array();
        r.say("node path " + std::to_string(k) + " toward " + rep.line_names[path.line_i] + " and " +
              rep.line_names[path.line_j]);
        for (size_t i = 0; i < path.gaps.size(); ++i) {
            const auto& d = path.tangents[i];
            auto slope = [](const std::array<exactmath::Complex, 2>& v) {
                return abs(v[0]) < exactmath::Real("1e-40") ? std::string("inf") : dec(v[1] / v[0]);
            };
            rows.push_back({{"parameter", scalar_json(rep.samples[i])},
                            {"x", exactmath::decimal(path.x[i])},
                            {"y", exactmath::decimal(path.y[i])},
                            {"slopes", {slope(d[0]), slope(d[1])}},
                            {"gap", exactmath::decimal(path.gaps[i])},
                            {"position_gap", exactmath::decimal(path.position_gaps[i])}});
            r.say("  " + p + " = " + rep.samples[i].str() + "  node (" + dec(path.x[i]) + ", " + dec(path.y[i]) +
                  ")  slopes " + slope(d[0]) + ", " + slope(d[1]) + "  gap " + dec(path.gaps[i]));
        }
        paths.push_back({{"lines", {rep.line_names[path.line_i], rep.line_names[path.line_j]}},
                         {"monotone", path.monotone},
                         {"pass", path.pass},
                         {"samples", rows}});
    }
    r.results["good_specialization"] = {{"verdict", degeneration::to_string(rep.verdict)},
                                        {"tolerance", tol},
                                        {"lines", rep.line_names},
                                        {"paths", paths},
                                        {"detail", rep.detail}};
    Status st = rep.verdict == degeneration::SpecVerdict::pass   ? Status::pass
                : rep.verdict == degeneration::SpecVerdict::fail ? Status::fail
                                                                 : Status::inconclusive;
    r.verdict("good specialization along " + p + " = " + fam.t_star.str() + " + 2^-k, k = 1.." + std::to_string(n),
              st, rep.detail);
}

} // namespace

Report cmd_analyze(const std::string& expr, const AnalyzeOptions& o)
{
    Timer tm;
    Report r;
    r.command = "analyze";
    MPoly F = bivariate(expr, vars::y, r);
    bool any = o.asymptotes || o.present || o.classify || o.factor >= 0 || o.emit_points > 0;
    bool present = o.present || !any, asym = o.asymptotes || !any;
    r.inputs["flags"] = {{"asymptotes", asym},        {"present", present}, {"factor", o.factor},
                         {"classify", o.classify},    {"emit_points", o.emit_points}, {"trunc", o.trunc}};
    r.say("curve " + print_poly(F) + " = 0");
    if (present)
        run_present(F, r);
    if (asym)
        run_asymptotes(F, r);
    if (o.factor >= 0)
        run_factor(F, o.factor, r);
    if (o.classify)
        run_classify(F, o.trunc, r);
    if (o.emit_points > 0)
        run_points(F, o.emit_points, r);
    r.seconds = tm.seconds();
    return r;
}

std::vector<std::string> read_script(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read script " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        out.push_back(line);
    }
    return out;
}

Report cmd_transform(const std::string& expr, const TransformOptions& o)
{
    Timer tm;
    Report r;
    r.command = "transform";
    MPoly C = bivariate(expr, vars::z, r);
    r.inputs["steps"] = o.steps;
    r.inputs["verify"] = o.verify;
    std::vector<Step> steps;
    for (size_t i = 0; i < o.steps.size(); ++i)
        steps.push_back(parse_step(o.steps[i], static_cast<int>(i) + 1));
    if (steps.empty())
        throw InputError("transform needs at least one step (--step or --script)");

    MPoly start = C;
    r.say("curve " + C.str() + " = 0");
    json log = json::array();
    VerifyCount total;
    for (const auto& s : steps) {
        std::vector<MobiusMap> maps;
        MPoly next;
        json js{{"step", s.text}};
        r.say("step " + std::to_string(s.line) + ": " + s.text);
        if (s.op == "identity") {
            maps.push_back(MobiusMap::identity());
            next = curves::apply_mobius(C, maps.back());
        } else if (s.op == "mobius" || s.op == "shear" || s.op == "mover") {
            MobiusMap g;
            if (s.op == "mobius") {
                g.a = uni_arg(s, "a", 1);
                g.b = uni_arg(s, "b", 0);
                g.c = uni_arg(s, "c", 0);
                g.d = uni_arg(s, "d", 1);
            } else if (s.op == "shear") {
                g = MobiusMap::shear(rational_arg(s.get("alpha"), s.where() + "alpha"));
            } else {
                try {
                    g = curves::build_mover(mover_spec(s));
                } catch (const InputError&) {
                    throw;
                } catch (const std::exception& e) {
                    throw InputError(s.where() + e.what());
                }
            }
            check_map(s, g);
            maps.push_back(g);
            next = curves::apply_mobius(C, g);
        } else if (s.op == "shear-to-q1") {
            Scalar alpha = rational_arg(s.get("alpha"), s.where() + "alpha");
            check_map(s, MobiusMap::shear(alpha));
            int max = s.has("max") ? int_arg(s.get("max"), s.where() + "max") : 64;
            auto res = curves::shear_to_Q1(C, alpha, max);
            maps = res.maps;
            next = res.curve;
            bool ok = curves::meets_infinity_only_at_q1(next);
            std::string top = curves::top_form(next, vars::x, vars::z).str();
            js["rounds"] = res.rounds();
            js["top_form"] = top;
            r.verdict("step " + std::to_string(s.line) + " top form is c*x^n", ok,
                      top + " after " + std::to_string(res.rounds()) + " rounds");
        } else {  // isolate
            auto at = split(s.get("at"), ',');
            if (at.size() != 2)
                throw InputError(s.where() + "at= takes x,z");
            ProjPoint P = ProjPoint::affine(rational_arg(at[0], s.where() + "at"), rational_arg(at[1], s.where() + "at"));
            int max = s.has("max") ? int_arg(s.get("max"), s.where() + "max") : 24;
            auto bs = curves::branches_at(C, P, o.trunc);
            if (bs.empty())
                throw InputError(s.where() + P.str() + " is not on the curve");
            int pick = s.has("branch") ? int_arg(s.get("branch"), s.where() + "branch") : 0;
            if (pick < 0 || pick >= static_cast<int>(bs.size()))
                throw InputError(s.where() + "branch= must be below " + std::to_string(bs.size()));
            json iso = json::array();
            for (size_t k = 0; k < bs.size(); ++k) {
                auto res = curves::isolate_branch(C, bs[k], max);
                std::vector<std::string> cs;
                for (const auto& c : res.centers)
                    cs.push_back(c.str());
                iso.push_back({{"branch", k}, {"rounds", res.log.rounds()}, {"centers", cs}});
                r.say("  branch " + std::to_string(k) + ": centres " + join(cs, " -> ") + " after " +
                      std::to_string(res.log.rounds()) + " rounds");
                if (static_cast<int>(k) == pick) {
                    maps = res.log.maps;
                    next = res.log.curve;
                }
            }
            js["isolation"] = iso;
        }
        json jm = json::array();
        for (const auto& g : maps) {
            jm.push_back(g.str());
            r.say("  map " + g.str());
        }
        js["maps"] = jm;
        js["curve"] = next.str();
        r.say("  curve " + next.str() + " = 0");
        r.say("  branches:");
        js["branches"] = describe_curve(next, watched_centres(next, maps), o.trunc, r);
        if (o.verify) {
            VerifyCount vc;
            MPoly cur = C;
            for (const auto& g : maps) {
                verify_map(cur, g, o.trunc, vc);
                cur = curves::apply_mobius(cur, g);
            }
            js["verify"] = {{"agree", vc.agree},
                            {"disagree", vc.disagree},
                            {"skipped", vc.skipped},
                            {"mismatches", vc.mismatches},
                            {"skips", vc.skips}};
            std::string w = std::to_string(vc.agree) + " agree, " + std::to_string(vc.disagree) + " disagree, " +
                            std::to_string(vc.skipped) + " skipped";
            if (!vc.mismatches.empty())
                w += "; " + join(vc.mismatches, "; ");
            r.verdict("step " + std::to_string(s.line) + " predicted centres match transported branches",
                      vc.disagree == 0, w);
            total.agree += vc.agree;
            total.disagree += vc.disagree;
            total.skipped += vc.skipped;
        }
        log.push_back(js);
        C = next;
    }
    r.results["steps"] = log;
    r.results["final_curve"] = C.str();
    r.results["unchanged"] = exactmath::proportional(C, start);
    r.verdict("final curve", Status::info, C.str() + (exactmath::proportional(C, start) ? " (unchanged)" : ""));
    r.seconds = tm.seconds();
    return r;
}

Report cmd_degenerate(const Config& cfg, const DegenerateOptions& o)
{
    Timer tm;
    Report r;
    r.command = "degenerate";
    r.inputs["config"] = cfg.source;
    json flags;
    flags["fiber"] = o.fiber ? json(*o.fiber) : json(nullptr);
    flags["check_asymptotic"] = o.asymptotic ? json(*o.asymptotic) : json(nullptr);
    flags["at_infinity"] = o.at_infinity;
    flags["track"] = o.track ? json(*o.track) : json(nullptr);
    flags["good_spec"] = o.good_spec;
    flags["samples"] = o.samples;
    flags["tol"] = o.tolerance;
    r.inputs["flags"] = flags;
    json echo;
    auto fam = build_family(cfg, &echo);
    r.inputs["family"] = echo;
    const std::string& p = exactmath::var_name(fam.param);
    json notes = fam.notes;
    r.results["family"] = {{"H", fam.H.str()},
                           {"parameter", p},
                           {"degenerate_parameter", scalar_json(fam.t_star)},
                           {"degree", fam.degree},
                           {"expected_degree", fam.expected_degree},
                           {"notes", notes}};
    r.results["fibers"] = json::array();
    r.say("family H = " + fam.H.str());
    r.say("degree " + std::to_string(fam.degree) + ", degenerate at " + p + " = " + fam.t_star.str());
    for (const auto& n : fam.notes)
        r.say("note: " + n);
    if (fam.expected_degree > 0)
        r.verdict("degree matches the points on the target plane", fam.degree == fam.expected_degree,
                  std::to_string(fam.degree) + " vs " + std::to_string(fam.expected_degree));

    bool any = o.fiber || o.asymptotic || o.track || o.good_spec;
    if (o.fiber || !any)
        run_fiber(fam, o.fiber ? rational_arg(*o.fiber, "--fiber") : fam.t_star, r);
    if (o.asymptotic)
        run_asymptotic(fam, *o.asymptotic, o.at_infinity, r);
    if (o.track)
        run_track(fam, *o.track, r);
    if (o.good_spec)
        run_good_spec(fam, o.samples, o.tolerance, r);
    r.seconds = tm.seconds();
    return r;
}

} // namespace cli
