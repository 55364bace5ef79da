// Acceptance run: one line per criterion, exit status 1 if any fails.
// Usage: acceptance [test-executable ...]  (the executables back criterion 10)

#include "cli/parser.hpp"
#include "curves/asymptotes.hpp"
#include "curves/mobius.hpp"
#include "curves/presentation.hpp"
#include "degeneration/checks.hpp"
#include "series/lift.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace exactmath;
using namespace curves;
using namespace degeneration;
using cli::parse_poly;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    int checks = 0;
    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && pass) {
            pass = false;
            note << "first failure: " << what;
        } else if (!ok) {
            note << "; " << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const char* quartic = "x^4 + x^3*y - 6*x^3 - 2*x^2*y + 13*x^2 + 4*x*y^2 + x*y - 12*x + y^4 - 5*y^2 + 4";

MPoly form(const std::string& s) { return parse_poly(s).homogenize({vars::X, vars::Y}, vars::W); }
MPoly zc(const std::string& s) { return parse_poly(s); }
UniPoly px(const std::string& s) { return parse_poly(s).to_uni(vars::x); }
MobiusMap map_of(const std::string& a, const std::string& b, const std::string& c, const std::string& d)
{
    return MobiusMap{px(a), px(b), px(c), px(d)};
}

CurveFamily cubic_cone()
{
    SpaceCurve C{parse_poly("y - x^2"), parse_poly("z - (x-2)*(x-3)*(x-4)")};
    return cone_family(C, CenterLine{{0, 0, 0}, {0, 0, 1}}, Plane::z_equals_0());
}

MirrorConfig conic_mirror()
{
    MirrorConfig m;
    m.omega1 = Plane{{0, 0, 0}, {1, 0, 1}, {0, 1, 0}};
    m.omega2 = Plane::z_equals_0();
    m.G = parse_poly("y^2 - x - 1");
    m.P = {1, 0, 2};
    m.Q = {2, 0, 0};
    return m;
}

std::set<std::string> asymptote_set(const std::string& s)
{
    std::set<std::string> out;
    for (const auto& a : asymptotes(parse_poly(s)))
        out.insert(a.str());
    return out;
}

void c1(Outcome& o)
{
    using S = std::set<std::string>;
    const std::vector<std::pair<std::string, S>> golden = {
        {"x*y - 5", {"x = 0", "y = 0"}},
        {"x^2 - y", {}},
        {"x*y^2 - x^3 - 2*x^2", {"x = 0", "y - x = 1", "y + x = -1"}},
        {"x*y^2 - x^2", {"x = 0"}},
        {"x*y^2 + y - 4*x", {"x = 0", "y = 2", "y = -2"}},
        {"x*y - (x^3 + x^2 + x + 1)", {"x = 0"}},
        {"y^2 - (x^3 + x + 1)", {}},
        {"y - (x^3 - 2*x + 5)", {}},
    };
    double worst = 0;
    for (const auto& [curve, want] : golden) {
        auto t0 = std::chrono::steady_clock::now();
        S got = asymptote_set(curve);
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        o.expect(got == want, curve + " line set");
        o.expect(dt < 1.0, curve + " took " + std::to_string(dt) + " s");
    }
    o.note << (o.pass ? "" : "; ") << golden.size() << " curves, slowest " << worst << " s";
}

void c2(Outcome& o)
{
    std::mt19937 rng(5);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 10; ++trial) {
        int m = 2 + trial % 3;
        MPoly F = testutil::corpus_curve(rng, m);
        if (!presentation_check(F).pass())
            continue;
        o.expect(asymptote_count(asymptotes(F)) == m, F.str() + ": count differs from " + std::to_string(m));
        ++done;
    }
    o.expect(done == 10, "only " + std::to_string(done) + " presented curves generated");
    o.note << (o.pass ? "" : "; ") << done << " presented curves";
}

void c3(Outcome& o)
{
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    for (int n = 0; n < 50; ++n) {
        int m = 2 + n % 4;
        MPoly F = testutil::corpus_curve(rng, m);
        auto a = series::factor_fibrewise(F, 32, series::LiftScheme::successive);
        auto b = series::factor_fibrewise(F, 32, series::LiftScheme::raphson);
        bool agree = a.sheets.size() == b.sheets.size();
        for (size_t i = 0; agree && i < a.sheets.size(); ++i)
            agree = a.sheets[i].eta == b.sheets[i].eta;
        o.expect(agree, F.str() + ": schemes disagree");
        o.expect(a.product_checked && a.product_ok, F.str() + ": product mod x^33");
        o.expect(a.vieta_ok && b.vieta_ok, F.str() + ": Vieta at order 32");
        // Vieta at lower orders too
        for (int N : {4, 12}) {
            auto lo = series::factor_fibrewise(F, N, series::LiftScheme::successive);
            o.expect(lo.vieta_ok, F.str() + ": Vieta at order " + std::to_string(N));
        }
    }
    double dt = seconds_since(t0);
    o.expect(dt < 10.0, "corpus took " + std::to_string(dt) + " s");
    o.note << (o.pass ? "" : "; ") << "50 curves, " << dt << " s";
}

void c4(Outcome& o)
{
    auto circle = presentation_check(parse_poly("x^2 + y^2 - 1"));
    std::set<std::string> xs;
    for (const auto& c : circle.critical)
        xs.insert(c.x.str());
    o.expect(circle.pass(), "circle verdict");
    o.expect(xs == std::set<std::string>{"1", "-1"}, "circle critical abscissae");

    auto q = presentation_check(parse_poly("y^4 - y^2 + x^2"));
    bool witness = false;
    for (const auto& c : q.critical)
        if (c.x == Scalar(Rational(1, 2)))
            witness = c.gcd_degree == 2;
    o.expect(!q.pass() && !q.checks[3].pass, "quartic fails the special fibre check");
    o.expect(witness && q.checks[3].witness.find("x = 1/2") != std::string::npos, "quartic witness at x = 1/2");

    auto cubic = presentation_check(parse_poly("y^2 - x*(x-1)*(x-2)"));
    o.expect(!cubic.checks[0].pass, "cubic fails the line at infinity check");
}

MobiusMap random_map(std::mt19937& rng)
{
    auto coef = [&] { return static_cast<long>(rng() % 7) - 3; };
    auto poly = [&](int deg, bool unit_const) {
        std::vector<Scalar> c;
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(coef());
        if (unit_const)
            c[0] = Scalar(1 + static_cast<long>(rng() % 3));
        return UniPoly(c);
    };
    while (true) {
        MobiusMap g{poly(1 + static_cast<int>(rng() % 2), true), poly(1, false).shift(1),
                    poly(static_cast<int>(rng() % 3), false), poly(1, true)};
        if (g.violation().empty())
            return g;
    }
}

MPoly random_zcurve(std::mt19937& rng, int deg)
{
    MPoly F;
    while (F.degree(vars::z) < 1 ||
           exactmath::primitive_part(F, vars::z, vars::x) != F.monic_lex().scaled(F.lead_coeff()))
        F = testutil::random_bivariate(rng, deg, deg).subs(vars::y, MPoly::variable(vars::z));
    return F;
}

void c5(Outcome& o)
{
    MoverSpec gather;
    gather.kind = MoverKind::gather;
    gather.axes = {Scalar(1)};
    gather.tangent_axes = {Scalar(2)};
    gather.points = {{Scalar(1), Scalar(2)}};
    gather.bound = 2;
    MoverSpec release;
    release.kind = MoverKind::release;
    release.points = {{Scalar(3), Scalar(1)}};
    release.tangent_axes = {Scalar(2)};
    release.bound = 2;
    MoverSpec to_q1;
    to_q1.axes = {Scalar(1)};
    to_q1.points = {{Scalar(1), Scalar(0)}};

    Scalar one(1), zero(0);
    struct Scenario {
        std::string name, curve;
        ProjPoint at;
        MobiusMap g;
    };
    std::vector<Scenario> table = {
        {"hyperbolic, c(alpha) != 0", "(x-2)*z - 1", ProjPoint::Q1(), map_of("1", "0", "1", "1")},
        {"hyperbolic, c(alpha) = 0", "(x-2)*z - 1", ProjPoint::Q1(), map_of("1", "0", "x - 2", "1")},
        {"hyperbolic, a/c value", "(x-2)*z - 1", ProjPoint::Q1(), map_of("x + 1", "0", "x", "1")},
        {"hyperbolic, double pole", "(x-1)^2*z - 1", ProjPoint::Q1(), map_of("1", "0", "x - 1", "1")},
        {"hyperbolic, kept by a shear", "(x-2)*z - 1", ProjPoint::Q1(), MobiusMap::shear(one)},
        {"hyperbolic, gathered", "(x-2)*z - 1", ProjPoint::Q1(), build_mover(gather)},
        {"hyperbolic, released", "(x-2)*z - 1", ProjPoint::Q1(), build_mover(release)},
        {"parabolic to [1:0:0]", "z - x^2", ProjPoint::Q1(), map_of("1", "0", "x^3", "x^3 + 1")},
        {"parabolic kept", "z - x^2", ProjPoint::Q1(), map_of("x^3 + 1", "x^3", "0", "1")},
        {"parabolic ramified to [1:0:0]", "z^2 - x^3", ProjPoint::Q1(), map_of("1", "0", "x^4", "x^4 + 1")},
        {"parabolic under a shear", "z - x^2", ProjPoint::Q1(), MobiusMap::shear(one)},
        {"parabolic gathered", "z - x^2", ProjPoint::Q1(), build_mover(gather)},
        {"point [1:2:0] under a shear", "z - 2*x - 1", ProjPoint(one, Scalar(2), zero), MobiusMap::shear(one)},
        {"point [1:-3:0] under a shear", "z + 3*x", ProjPoint(one, Scalar(-3), zero), MobiusMap::shear(Scalar(5))},
        {"finite to Q1", "z - x - 1", ProjPoint::affine(one, Scalar(2)), map_of("1", "0", "x - 1", "x - 1")},
        {"finite to Q1 with beta = 0", "z - x + 1", ProjPoint::affine(one, zero), build_mover(to_q1)},
        {"finite gathered", "z - x - 1", ProjPoint::affine(one, Scalar(2)), build_mover(gather)},
        {"finite regular", "z - x + 1", ProjPoint::affine(Scalar(2), one), map_of("1", "0", "1", "1")},
    };
    int branches = 0;
    for (const auto& sc : table) {
        MPoly C = zc(sc.curve);
        auto bs = branches_at(C, sc.at, 12);
        o.expect(!bs.empty(), sc.name + ": no branch");
        MPoly D = apply_mobius(C, sc.g);
        for (const auto& br : bs) {
            ++branches;
            BranchParam moved = transport_branch(br, sc.g);
            o.expect(predict_center(br, sc.g, C.total_degree()) == moved.center, sc.name + ": centres differ");
            o.expect(series::eval_along(D, moved.param, vars::x, vars::z).is_zero(), sc.name + ": image off the curve");
        }
    }
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        MobiusMap g = random_map(rng);
        MPoly C = random_zcurve(rng, 2 + i % 3);
        o.expect(compose(mobius_inverse(g), g).is_identity(), g.str() + ": inverse composed is not the identity");
        o.expect(proportional(apply_mobius(apply_mobius(C, g), mobius_inverse(g)), C), g.str() + ": round trip");
    }
    o.note << (o.pass ? "" : "; ") << table.size() << " scenarios, " << branches << " branches, 50 round trips";
}

void c6(Outcome& o)
{
    const char* list[] = {"x*z - 1",        "x^2 + z^2 - 1",       "z^2 - x^3 - 1",   "x*z^2 - x - 1",
                          "z^2 - x^2 - 1",  "z^3 - x*z - x^2 + 1", "x^2*z - z^2 - 1", "(z - x)*(z - 2*x) - 1",
                          "x*z - z^2 + 3",  "z^3 + x^3 - 3*x*z + 2"};
    std::ostringstream rounds;
    for (const char* s : list) {
        auto log = shear_to_Q1(zc(s), Scalar(1), 64);
        MPoly top = top_form(log.curve, vars::x, vars::z);
        int deg = log.curve.total_degree();
        o.expect(top.size() == 1 && top.degree(vars::z) == 0, std::string(s) + ": top form " + top.str());
        o.expect(log.rounds() <= deg, std::string(s) + ": " + std::to_string(log.rounds()) + " rounds");
        rounds << " " << log.rounds() << "/" << deg;
    }
    o.note << (o.pass ? "" : "; ") << "rounds/degree:" << rounds.str();
}

void c7(Outcome& o)
{
    CurveFamily fam = mirror_family(conic_mirror());
    o.expect(proportional(fam.H, form("Y^2*(3*s - 2)^2 - (X*(2*s + 1) + 3*s - 2)*(X + 3*s - 2)")), "family form");
    for (long n = -6; n <= 6; ++n) {
        Scalar s0(Rational(n, 3));
        if (s0 == fam.t_star)
            continue;
        MPoly f = fiber_at(fam, s0);
        if (f.is_zero())
            continue;
        for (long y0 : {1L, -1L})
            o.expect(f.eval(vars::x, Scalar(0)).eval(vars::y, Scalar(y0)).is_zero(),
                     "(0, " + std::to_string(y0) + ") off the fibre at s = " + s0.str());
    }
    o.expect(proportional(fiber_at(fam, Scalar(0)), parse_poly("(2*y - x + 2)*(2*y + x - 2)")), "degenerate fibre");
    auto strict = asymptotic_check(fam);
    o.expect(!strict.pass, "strict check passed");
    bool theta = false;
    for (const auto& f : strict.failures)
        theta = theta || f.find("(s + 1)/(3*s - 2)") != std::string::npos;
    o.expect(theta, "strict witness theta(s)");
    AsymptoticOptions weak;
    weak.weak = true;
    o.expect(asymptotic_check(fam, weak).pass, "weak check failed");
}

void c8(Outcome& o)
{
    CurveFamily fam = cubic_cone();
    o.expect(proportional(fiber_at(fam, Scalar(0)), parse_poly("(y - 2*x)*(y - 3*x)*(y - 4*x)")), "t = 0 fibre");
    MPoly f1 = fiber_at(fam, Scalar(1));
    std::string cert = irreducibility_certificate(f1);
    o.expect(cert.rfind("irreducible", 0) == 0, "t = 1: " + cert);
    auto sp = singular_points(f1);
    o.expect(sp && sp->size() == 1 && (*sp)[0].node && (*sp)[0].conjugates == 1, "t = 1 singular points");
    auto nodes = node_track(fam, {Scalar(1)});
    o.expect(nodes.size() == 1 && nodes[0].nodal, "t = 1 node with distinct slopes");
    if (o.pass)
        o.note << "node at (" << nodes[0].x.str() << ", " << nodes[0].y.str() << "), tangent cone " << nodes[0].slopes();
}

void c9(Outcome& o)
{
    MirrorConfig m = conic_mirror();
    m.G = parse_poly(quartic);
    m.P = {0, 0, 1};
    CurveFamily fam = mirror_family(m);
    auto rep = good_specialization_check(fam, approach_sequence(fam, 10));
    o.expect(rep.verdict == SpecVerdict::pass, "quartic mirror: " + rep.detail);
    o.expect(rep.paths.size() == 1, "quartic mirror paths");
    if (!rep.paths.empty()) {
        const auto& p = rep.paths[0];
        o.expect(p.monotone, "gaps not monotone");
        o.expect(!p.gaps.empty() && p.gaps.back() < Real("1e-3"), "final gap");
        if (!p.gaps.empty())
            o.note << (o.pass ? "" : "; ") << "final gap " << p.gaps.back().str(3, std::ios::scientific);
    }
    auto cone = good_specialization_check(cubic_cone(), approach_sequence(cubic_cone(), 6));
    o.expect(cone.verdict == SpecVerdict::fail, "cone did not fail");
    o.note << ", cone witness: " << cone.detail;
}

void c10(Outcome& o, const std::vector<std::string>& suites)
{
    o.expect(!suites.empty(), "no suites given");
    for (const auto& s : suites) {
        std::string cmd = "\"" + s + "\" > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        o.expect(rc == 0, s + " exited with " + std::to_string(rc));
    }
    o.note << (o.pass ? "" : "; ") << suites.size() << " suites";
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> suites(argv + 1, argv + argc);
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"asymptote golden suite", c1},
        {"exactly m asymptotes on presented curves", c2},
        {"fibrewise factorization corpus", c3},
        {"presentation verdicts", c4},
        {"Mobius scenarios and round trips", c5},
        {"shear termination", c6},
        {"conic mirror family", c7},
        {"cubic cone family", c8},
        {"good specialization", c9},
        {"property suites", [&](Outcome& o) { c10(o, suites); }},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
                  << o.note.str() << (o.note.str().empty() ? "" : ", ") << o.checks << " checks, " << dt << " s)\n";
    }
    return failed ? 1 : 0;
}
