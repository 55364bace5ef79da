#include "doctest.h"

#include "cli/parser.hpp"
#include "curves/asymptotes.hpp"
#include "curves/classify.hpp"
#include "curves/mobius.hpp"
#include "curves/presentation.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace exactmath;
using namespace curves;
using cli::parse_poly;

namespace {

const char* nodal_cubic = "y^3 - 3*x*y^2 + x^2*y - x^3 + 3*x*y - 3*x^2 - 7*y - x + 6";

UniPoly px(const std::string& s) { return parse_poly(s).to_uni(vars::x); }

MobiusMap map_of(const std::string& a, const std::string& b, const std::string& c, const std::string& d)
{
    return MobiusMap{px(a), px(b), px(c), px(d)};
}

// (a, b, t0) triples as strings
std::set<std::string> line_set(const std::vector<Asymptote>& as)
{
    std::set<std::string> out;
    for (const auto& a : as)
        out.insert(a.str());
    return out;
}

BranchParam only_branch(const MPoly& C, const ProjPoint& P, int N = 12)
{
    auto bs = branches_at(C, P, N);
    REQUIRE(bs.size() == 1);
    return bs[0];
}

MPoly zcurve(const std::string& s) { return parse_poly(s); }

} // namespace

TEST_CASE("presentation examples")
{
    auto circle = presentation_check(parse_poly("x^2 + y^2 - 1"));
    CHECK(circle.pass());
    std::set<std::string> xs;
    for (const auto& c : circle.critical) {
        xs.insert(c.x.str());
        CHECK(c.kind == CriticalKind::vertical_tangency);
    }
    CHECK(xs == std::set<std::string>{"1", "-1"});

    auto quartic = presentation_check(parse_poly("y^4 - y^2 + x^2"));
    CHECK_FALSE(quartic.pass());
    CHECK_FALSE(quartic.checks[3].pass);
    bool witness = false;
    for (const auto& c : quartic.critical)
        if (c.x == Scalar(Rational(1, 2)))
            witness = c.gcd_degree == 2;
    CHECK(witness);
    CHECK(quartic.checks[3].witness.find("x = 1/2") != std::string::npos);

    auto cubic = presentation_check(parse_poly("y^2 - x*(x-1)*(x-2)"));
    CHECK_FALSE(cubic.checks[0].pass);
    CHECK(cubic.checks[0].witness.find("[0:1:0]") != std::string::npos);
}

TEST_CASE("presented nodal cubic")
{
    MPoly F = parse_poly(nodal_cubic);
    auto rep = presentation_check(F);
    REQUIRE(rep.pass());
    int nodes = 0, tangencies = 0;
    for (const auto& c : rep.critical) {
        if (c.kind == CriticalKind::node) {
            nodes += c.conjugates;
            CHECK(c.x == Scalar(-1));
            CHECK(c.y == Scalar(1));
        } else {
            tangencies += c.conjugates;
        }
    }
    CHECK(nodes == 1);
    CHECK(tangencies == 4);
    auto fibres = critical_fiber_analysis(F);
    CHECK(fibres.size() == rep.critical.size());
    for (const auto& f : fibres)
        CHECK(f.ok());
}

TEST_CASE("critical fibres")
{
    auto fibres = critical_fiber_analysis(parse_poly("x^2 + y^2 - 1"));
    REQUIRE(fibres.size() == 2);
    for (const auto& f : fibres) {
        CHECK(f.collision_pairs == 1);
        CHECK(f.higher_collisions == 0);
    }
    CHECK_THROWS_WITH_AS(critical_fiber_analysis(parse_poly("y^4 - y^2 + x^2")),
                         doctest::Contains("not presented"), std::invalid_argument);
}

TEST_CASE("special fibres of presented curves never hold three sheets")
{
    std::mt19937 rng(21);
    int presented = 0;
    for (int trial = 0; trial < 40 && presented < 8; ++trial) {
        MPoly F = testutil::corpus_curve(rng, 3);
        auto rep = presentation_check(F);
        if (!rep.pass())
            continue;
        ++presented;
        for (const auto& f : critical_fiber_analysis(F)) {
            CHECK(f.collision_pairs == 1);
            CHECK(f.higher_collisions == 0);
        }
    }
    CHECK(presented >= 5);
}

TEST_CASE("asymptote golden curves")
{
    auto set_of = [](const std::string& s) { return line_set(asymptotes(parse_poly(s))); };
    using S = std::set<std::string>;
    CHECK(set_of("x*y - 5") == S{"x = 0", "y = 0"});
    CHECK(set_of("x^2 - y").empty());
    // x*y^2 + e*y = a^2*x^3 + b*x^2 + c*x + d
    CHECK(set_of("x*y^2 - x^3 - 2*x^2") == S{"x = 0", "y - x = 1", "y + x = -1"});
    CHECK(set_of("x*y^2 - x^2") == S{"x = 0"});
    CHECK(set_of("x*y^2 + y - 4*x") == S{"x = 0", "y = 2", "y = -2"});
    CHECK(set_of("x*y - (x^3 + x^2 + x + 1)") == S{"x = 0"});
    CHECK(set_of("y^2 - (x^3 + x + 1)").empty());
    CHECK(set_of("y - (x^3 - 2*x + 5)").empty());
}

TEST_CASE("asymptote provenance")
{
    for (const auto& a : asymptotes(parse_poly("x*y - 5")))
        CHECK(a.provenance() == "simple-factor");
    auto c3 = asymptotes(parse_poly("x*y^2 + y - 4*x"));
    int multiple = 0;
    for (const auto& a : c3)
        multiple += a.b == Scalar(1) && !a.simple();
    CHECK(multiple == 2);
}

TEST_CASE("presented curves have exactly m asymptotes")
{
    std::mt19937 rng(5);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 10; ++trial) {
        int m = 2 + trial % 3;
        MPoly F = testutil::corpus_curve(rng, m);
        if (!presentation_check(F).pass())
            continue;
        CHECK(asymptote_count(asymptotes(F)) == m);
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("apply_mobius examples")
{
    CHECK(apply_mobius(zcurve("z - x"), map_of("1", "0", "0", "x - 1")) == zcurve("z*(x-1) - x"));
    // the image of xz - 1 under (x, z) -> (x, (x - 1) z)
    CHECK(apply_mobius(zcurve("x*z - 1"), MobiusMap::shear(Scalar(1))) == zcurve("x*z - x + 1"));
    MPoly C = zcurve("z^2 - x^3 - 1");
    MobiusMap g = map_of("1", "0", "x", "1");
    MPoly back = apply_mobius(apply_mobius(C, g), mobius_inverse(g));
    CHECK(exactmath::proportional(back, C));
    CHECK_THROWS_WITH(apply_mobius(C, map_of("1", "1", "0", "1")), doctest::Contains("b(0) must be 0"));
}

TEST_CASE("mobius_inverse examples")
{
    MobiusMap g = map_of("1", "0", "1", "1");
    MobiusMap gi = mobius_inverse(g);
    CHECK(gi.a == px("1"));
    CHECK(gi.b.is_zero());
    CHECK(gi.c == px("-1"));
    CHECK(gi.d == px("1"));
    MobiusMap h = map_of("x - 1", "0", "0", "1");
    MobiusMap hi = mobius_inverse(h);
    CHECK(compose(hi, h).is_identity());
    CHECK(hi.a == px("1"));
    CHECK(hi.d == px("x - 1"));
}

namespace {

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
    while (F.degree(vars::z) < 1 || exactmath::primitive_part(F, vars::z, vars::x) != F.monic_lex().scaled(F.lead_coeff()))
        F = testutil::random_bivariate(rng, deg, deg).subs(vars::y, MPoly::variable(vars::z));
    return F;
}

} // namespace

TEST_CASE("inverse composed with the map is the identity")
{
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        MobiusMap g = random_map(rng);
        INFO(g.str());
        CHECK(compose(mobius_inverse(g), g).is_identity());
        CHECK(mobius_inverse(g).violation().empty());
    }
}

TEST_CASE("apply then apply inverse returns the curve")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        MobiusMap g = random_map(rng);
        MPoly C = random_zcurve(rng, 2 + i % 3);
        INFO(C.str(), "  g = ", g.str());
        MPoly back = apply_mobius(apply_mobius(C, g), mobius_inverse(g));
        CHECK(exactmath::proportional(back, C));
    }
}

TEST_CASE("predict_center examples")
{
    MPoly hyp = zcurve("(x-2)*z - 1");
    BranchParam br = only_branch(hyp, ProjPoint::Q1());
    CHECK(br.kind == BranchKind::hyperbolic_q1);
    CHECK(br.tangent == Line(Scalar(1), Scalar(0), Scalar(-2)));
    CHECK(predict_center(br, map_of("1", "0", "1", "1"), 2) == ProjPoint::affine(Scalar(2), Scalar(1)));
    CHECK(predict_center(br, map_of("1", "0", "x - 2", "1"), 2) == ProjPoint::Q1());
    MPoly line = zcurve("z - 2*x - 1");
    BranchParam at_inf = only_branch(line, ProjPoint(Scalar(1), Scalar(2), Scalar(0)));
    CHECK(at_inf.kind == BranchKind::other_infinite);
    CHECK(predict_center(at_inf, MobiusMap::shear(Scalar(1)), 1) == ProjPoint::Q1());
    CHECK(ProjPoint(Scalar(0), Scalar(2), Scalar(0)) == ProjPoint::Q1());
}

TEST_CASE("transport_branch examples")
{
    // exact parametrization (2 + e, 1/e)
    series::Parametrization p{TruncSeries::from_terms(1, {{0, Scalar(2)}, {1, Scalar(1)}}),
                              TruncSeries::monomial(Scalar(1), Rational(-1), Rational(10))};
    BranchParam br = make_branch(p);
    CHECK(br.kind == BranchKind::hyperbolic_q1);
    CHECK(transport_branch(br, map_of("1", "0", "1", "1")).center == ProjPoint::affine(Scalar(2), Scalar(1)));
    CHECK(transport_branch(br, map_of("1", "0", "x - 2", "1")).center == ProjPoint::Q1());
    BranchParam par = only_branch(zcurve("z - x^2"), ProjPoint::Q1());
    CHECK(par.kind == BranchKind::parabolic_q1);
    CHECK(transport_branch(par, MobiusMap::shear(Scalar(1))).center == ProjPoint::Q1());
}

namespace {

struct Scenario {
    std::string name;
    std::string curve;
    ProjPoint at;
    MobiusMap g;
};

} // namespace

TEST_CASE("prediction agrees with transport on the scenario table")
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
        {"parabolic released", "z - x^2", ProjPoint::Q1(), build_mover(release)},
        {"point [1:2:0] under a shear", "z - 2*x - 1", ProjPoint(one, Scalar(2), zero), MobiusMap::shear(one)},
        {"point [1:-3:0] under a shear", "z + 3*x", ProjPoint(one, Scalar(-3), zero), MobiusMap::shear(Scalar(5))},
        {"finite to Q1", "z - x - 1", ProjPoint::affine(one, Scalar(2)), map_of("1", "0", "x - 1", "x - 1")},
        {"finite to Q1 with beta = 0", "z - x + 1", ProjPoint::affine(one, zero), build_mover(to_q1)},
        {"finite gathered", "z - x - 1", ProjPoint::affine(one, Scalar(2)), build_mover(gather)},
        {"finite regular", "z - x + 1", ProjPoint::affine(Scalar(2), one), map_of("1", "0", "1", "1")},
        {"finite released stays", "z - x + 2", ProjPoint::affine(Scalar(3), one), build_mover(release)},
    };
    CHECK(table.size() >= 12);
    for (const auto& sc : table) {
        INFO(sc.name);
        MPoly C = zcurve(sc.curve);
        auto bs = branches_at(C, sc.at, 12);
        REQUIRE_FALSE(bs.empty());
        for (const auto& br : bs) {
            ProjPoint predicted = predict_center(br, sc.g, C.total_degree());
            BranchParam moved = transport_branch(br, sc.g);
            CHECK(predicted == moved.center);
            // the image branch lies on the image curve
            MPoly D = apply_mobius(C, sc.g);
            CHECK(series::eval_along(D, moved.param, vars::x, vars::z).is_zero());
        }
    }
}

TEST_CASE("classify_branch examples")
{
    MPoly circle = zcurve("x^2 + z^2 - 1");
    BranchColor top = classify_branch(circle, only_branch(circle, ProjPoint::affine(Scalar(0), Scalar(1))));
    CHECK(top.silver);
    CHECK(top.refinement == Refinement::green);
    BranchColor side = classify_branch(circle, only_branch(circle, ProjPoint::affine(Scalar(1), Scalar(0))));
    CHECK_FALSE(side.silver);
    CHECK(side.refinement == Refinement::violet);
    CHECK(side.axis_mult == 2);

    MPoly nodal = parse_poly(nodal_cubic).subs(vars::y, MPoly::variable(vars::z));
    auto bs = branches_at(nodal, ProjPoint::affine(Scalar(-1), Scalar(1)), 12);
    REQUIRE(bs.size() == 2);
    for (const auto& b : bs) {
        BranchColor c = classify_branch(nodal, b);
        CHECK_FALSE(c.silver);
        CHECK(c.refinement == Refinement::green);
    }
    BranchParam q1 = only_branch(zcurve("z - x^2"), ProjPoint::Q1());
    CHECK_THROWS_WITH(classify_branch(zcurve("z - x^2"), q1), doctest::Contains("move it"));
}

TEST_CASE("contact with the vertical axis survives a map fixing the axis in finite position")
{
    std::mt19937 rng(23);
    MPoly circle = zcurve("x^2 + z^2 - 1");
    std::vector<BranchParam> bs = branches_at(circle, ProjPoint::affine(Scalar(1), Scalar(0)), 12);
    auto more = branches_at(circle, ProjPoint::affine(Scalar(Rational(3, 5)), Scalar(Rational(4, 5))), 12);
    bs.insert(bs.end(), more.begin(), more.end());
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        MobiusMap g = random_map(rng);
        for (const auto& br : bs) {
            Scalar al = br.center.x(), be = br.center.z();
            if (decide_zero(g.c.eval(al) * be + g.d.eval(al)))
                continue;
            MPoly D = apply_mobius(circle, g);
            BranchParam moved = transport_branch(br, g);
            REQUIRE(moved.center.finite());
            CHECK(moved.center.x() == al);
            int before = series::branch_mult(circle, br.param, series::AxisLine::vertical(al), vars::x, vars::z);
            int after = series::branch_mult(D, moved.param, series::AxisLine::vertical(al), vars::x, vars::z);
            CHECK(before == after);
            CHECK(classify_branch(circle, br).silver == (after == 1 && nonsingular_at(D, moved.center)));
            ++checked;
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("shear examples")
{
    auto log = shear_to_Q1(zcurve("x*z - 1"), Scalar(1), 10);
    CHECK(log.rounds() == 3);
    CHECK(exactmath::proportional(log.curve, zcurve("x*z - (x-1)^3")));
    CHECK(meets_infinity_only_at_q1(log.curve));
    auto none = shear_to_Q1(zcurve("z - x^2"), Scalar(1), 10);
    CHECK(none.rounds() == 0);
    CHECK(none.curve == zcurve("z - x^2"));
    CHECK_THROWS_WITH(shear_to_Q1(zcurve("(x-2)*z - 1"), Scalar(2), 10), doctest::Contains("tangent"));
    CHECK_THROWS_WITH(shear_to_Q1(zcurve("x*z - 1"), Scalar(1), 2), doctest::Contains("shear limit"));
}

TEST_CASE("shearing ends with a pure power of x")
{
    const char* curves_list[] = {"x*z - 1",          "x^2 + z^2 - 1",        "z^2 - x^3 - 1",   "x*z^2 - x - 1",
                                 "z^2 - x^2 - 1",   "z^3 - x*z - x^2 + 1",  "x^2*z - z^2 - 1", "(z - x)*(z - 2*x) - 1",
                                 "x*z - z^2 + 3",   "z^3 + x^3 - 3*x*z + 2"};
    for (const char* s : curves_list) {
        INFO(s);
        auto log = shear_to_Q1(zcurve(s), Scalar(1), 20);
        MPoly top = top_form(log.curve, vars::x, vars::z);
        CHECK(top.size() == 1);
        CHECK(top.degree(vars::z) == 0);
        CHECK(log.rounds() <= log.curve.total_degree());
    }
}

TEST_CASE("build_mover examples")
{
    MoverSpec sp;
    sp.axes = {Scalar(1)};
    sp.points = {{Scalar(1), Scalar(2)}};
    MobiusMap g = build_mover(sp);
    CHECK(g.a == px("1"));
    CHECK(g.b.is_zero());
    CHECK(g.c == px("x - 1"));
    CHECK(g.d == px("x - 1"));

    MoverSpec rel;
    rel.kind = MoverKind::release;
    rel.points = {{Scalar(1), Scalar(1)}};
    rel.nonvanishing_c = false;
    rel.order_condition = false;
    CHECK(build_mover(rel).is_identity());
    CHECK(build_mover(MoverSpec{}).is_identity());

    MoverSpec clash;
    clash.kind = MoverKind::release;
    clash.points = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(2)}};
    CHECK_THROWS_WITH(build_mover(clash), doctest::Contains("clash on the axis x = 1"));
    MoverSpec on_zero;
    on_zero.axes = {Scalar(0)};
    CHECK_THROWS(build_mover(on_zero));
}

TEST_CASE("gather mover meets its conditions")
{
    MoverSpec sp;
    sp.kind = MoverKind::gather;
    sp.axes = {Scalar(1), Scalar(-2)};
    sp.tangent_axes = {Scalar(3)};
    sp.points = {{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(5)}, {Scalar(-2), Scalar(1)}};
    sp.bound = 3;
    MobiusMap g = build_mover(sp);
    CHECK(g.violation().empty());
    for (const Scalar& al : {Scalar(1), Scalar(-2), Scalar(3)}) {
        CHECK(g.c.eval(al).is_zero());
        CHECK_FALSE(g.a.eval(al).is_zero());
    }
    CHECK(std::max(g.c.degree(), g.d.degree()) + 3 < std::min(g.a.degree(), g.b.is_zero() ? 99 : g.b.degree()));
}

TEST_CASE("isolate_branch examples")
{
    MPoly F = zcurve("(z - x)*(z - 2*x + 1) + (x - 1)^3");
    auto bs = branches_at(F, ProjPoint::affine(Scalar(1), Scalar(1)), 12);
    REQUIRE(bs.size() == 2);
    std::set<std::string> centers;
    for (const auto& b : bs) {
        auto res = isolate_branch(F, b, 24);
        CHECK(res.log.rounds() == 1);
        centers.insert(res.branch.center.str());
    }
    CHECK(centers == std::set<std::string>{"(1, 0)", "(1, 1)"});

    MPoly circle = zcurve("x^2 + z^2 - 1");
    auto top = only_branch(circle, ProjPoint::affine(Scalar(Rational(3, 5)), Scalar(Rational(4, 5))));
    CHECK(isolate_branch(circle, top, 24).log.rounds() == 0);

    // two branches with the same tangent, first differing at (x-1)^2
    MPoly G = zcurve("(z - x - (x-1)^2)*(z - x - 2*(x-1)^2) + (x - 1)^5");
    for (const auto& b : branches_at(G, ProjPoint::affine(Scalar(1), Scalar(1)), 12))
        CHECK(isolate_branch(G, b, 24).log.rounds() == 2);

    auto side = only_branch(circle, ProjPoint::affine(Scalar(1), Scalar(0)));
    CHECK_THROWS_WITH(isolate_branch(circle, side, 24), doctest::Contains("not silver"));
}

TEST_CASE("uniformity examples")
{
    MPoly circle = zcurve("x^2 + z^2 - 1");
    auto at1 = uniformity_check(circle, Axis::vertical(Scalar(1)));
    CHECK(at1.verdict == Uniformity::uniform_blue);
    REQUIRE(at1.branches.size() == 1);
    CHECK(at1.branches[0].second.refinement == Refinement::violet);
    CHECK(uniformity_check(circle, Axis::vertical(Scalar(Rational(1, 2)))).verdict == Uniformity::uniform_silver);
    auto at0 = uniformity_check(circle, Axis::vertical(Scalar(0)));
    CHECK(at0.verdict == Uniformity::uniform_silver);
    for (const auto& [b, c] : at0.branches)
        CHECK(c.refinement == Refinement::green);
}

TEST_CASE("sheets through a violet branch differ at order one half")
{
    MPoly circle = zcurve("x^2 + z^2 - 1");
    for (const Scalar& a : {Scalar(1), Scalar(-1)}) {
        BranchParam b = only_branch(circle, ProjPoint::affine(a, Scalar(0)));
        auto w = symmetric_witness(b);
        REQUIRE(w.has_value());
        CHECK(*w == Rational(1, 2));
    }
    BranchParam silver = only_branch(circle, ProjPoint::affine(Scalar(0), Scalar(1)));
    CHECK_FALSE(symmetric_witness(silver).has_value());
}
