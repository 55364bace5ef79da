#include "doctest.h"

#include "cli/commands.hpp"
#include "cli/parser.hpp"

#include <random>

using namespace exactmath;
using cli::parse_poly;
using cli::print_poly;

namespace {

struct Expr {
    std::string text;
    MPoly value;
};

const char* names = "xyzXYWts";

// Random expression with its value built directly, bypassing the parser.
Expr random_expr(std::mt19937& rng, int depth)
{
    int pick = depth <= 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 8);
    switch (pick) {
    case 0: {
        long n = static_cast<long>(rng() % 40);
        return {std::to_string(n), MPoly(Scalar(n))};
    }
    case 1: {
        long n = static_cast<long>(rng() % 30) + 1, d = static_cast<long>(rng() % 12) + 1;
        return {std::to_string(n) + "/" + std::to_string(d), MPoly(Scalar(Rational(n, d)))};
    }
    case 2: {
        char c = names[rng() % 8];
        return {std::string(1, c), MPoly::variable(var_id(std::string(1, c)))};
    }
    case 3: {
        Expr a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
        return {a.text + " + " + b.text, a.value + b.value};
    }
    case 4: {
        Expr a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
        return {a.text + " - (" + b.text + ")", a.value - b.value};
    }
    case 5: {
        Expr a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
        return {"(" + a.text + ")*(" + b.text + ")", a.value * b.value};
    }
    case 6: {
        Expr a = random_expr(rng, depth - 1);
        int e = static_cast<int>(rng() % 4);
        return {"(" + a.text + ")^" + std::to_string(e), a.value.pow(e)};
    }
    default: {
        Expr a = random_expr(rng, depth - 1);
        return {"-(" + a.text + ")", -a.value};
    }
    }
}

} // namespace

TEST_CASE("parse and print round trip on a random corpus")
{
    std::mt19937 rng(20261014);
    int nontrivial = 0;
    for (int i = 0; i < 200; ++i) {
        Expr e = random_expr(rng, 1 + i % 4);
        INFO(e.text);
        MPoly p = parse_poly(e.text);
        CHECK(p == e.value);
        std::string printed = print_poly(p);
        INFO(printed);
        CHECK(parse_poly(printed) == p);
        CHECK(print_poly(parse_poly(printed)) == printed);
        if (p.total_degree() >= 2)
            ++nontrivial;
    }
    CHECK(nontrivial >= 10);
}

TEST_CASE("parser precedence and literals")
{
    MPoly x = MPoly::variable(vars::x), y = MPoly::variable(vars::y);
    CHECK(parse_poly("1 + 2*x^2") == MPoly(1) + MPoly(2) * x * x);
    CHECK(parse_poly("-x^2") == -(x * x));
    CHECK(parse_poly("(-x)^2") == x * x);
    CHECK(parse_poly("3/6*x") == x.scaled(Scalar(Rational(1, 2))));
    CHECK(parse_poly("x - y - 1") == x - y - MPoly(1));
    CHECK(parse_poly("x*y^2*3/4") == (x * y * y).scaled(Scalar(Rational(3, 4))));
    CHECK(parse_poly("  ( ( x ) )  ") == x);
    CHECK(print_poly(parse_poly("1/6*x - 2")) == "1/6*x - 2");
}

TEST_CASE("parser errors")
{
    CHECK_THROWS_AS(parse_poly(""), cli::ParseError);
    CHECK_THROWS_WITH(parse_poly("2x"), doctest::Contains("implicit multiplication"));
    CHECK_THROWS_WITH(parse_poly("x y"), doctest::Contains("implicit multiplication"));
    CHECK_THROWS_WITH(parse_poly("x(y)"), doctest::Contains("implicit multiplication"));
    CHECK_THROWS_WITH(parse_poly("x/y"), doctest::Contains("unexpected '/'"));
    CHECK_THROWS_WITH(parse_poly("1/0"), doctest::Contains("zero denominator"));
    CHECK_THROWS_WITH(parse_poly("x^-1"), doctest::Contains("non-negative integer"));
    CHECK_THROWS_WITH(parse_poly("(x + 1"), doctest::Contains("missing ')'"));
    CHECK_THROWS_WITH(parse_poly("q + 1"), doctest::Contains("unknown variable"));
    CHECK_THROWS_WITH(parse_poly("xy"), doctest::Contains("unknown identifier"));
    CHECK_THROWS_WITH(parse_poly("x + "), doctest::Contains("unexpected end"));
    CHECK_THROWS_WITH(parse_poly("x^2^3"), doctest::Contains("chained exponents"));
    try {
        parse_poly("x + $");
        FAIL("no error");
    } catch (const cli::ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("report scalars")
{
    CHECK(cli::rational_json(Rational(-3, 6)) == "-1/2");
    CHECK(cli::rational_json(Rational(4)) == "4/1");
    CHECK(cli::scalar_json(Scalar(0)) == "0/1");
    auto rc = root_classes(parse_poly("y^2 - 2").to_uni(vars::y));
    REQUIRE(rc.size() == 1);
    auto j = cli::scalar_json(rc[0].value + Scalar(1));
    REQUIRE(j.is_object());
    CHECK(j["field"].size() == 1);
    CHECK(j["field"][0].get<std::string>().find("^2 - 2 = 0") != std::string::npos);

    cli::Report r;
    r.command = "analyze";
    r.verdict("a", cli::Status::pass, "w");
    CHECK(r.exit_code() == 0);
    r.verdict("b", false, "counterexample");
    CHECK(r.exit_code() == 1);
    auto out = r.to_json();
    CHECK(out["verdicts"][1]["status"] == "FAIL");
    CHECK(out["verdicts"][1]["witness"] == "counterexample");
    CHECK(r.to_text().find("[FAIL] b: counterexample") != std::string::npos);
}

TEST_CASE("config files")
{
    auto cfg = cli::Config::parse("# comment\nfamily = form   # trailing\nH = X*Y - t*W^2\n\ndegenerate = 0\n");
    CHECK(cfg.get("family") == "form");
    CHECK(cfg.get("H") == "X*Y - t*W^2");
    auto fam = cli::build_family(cfg);
    CHECK(fam.degree == 2);
    CHECK(fam.t_star == Scalar(0));

    CHECK_THROWS_AS(cli::Config::parse("a = 1\na = 2\n"), cli::InputError);
    CHECK_THROWS_AS(cli::Config::parse("novalue\n"), cli::InputError);
    CHECK_THROWS_WITH(cli::build_family(cli::Config::parse("family = form\nH = X*Y\ncolour = 1\n")),
                      doctest::Contains("unknown key 'colour'"));
    CHECK_THROWS_WITH(cli::build_family(cli::Config::parse("family = cone\n")), doctest::Contains("missing key"));
    CHECK_THROWS_WITH(cli::parse_vec3("1, 2"), doctest::Contains("three"));
    CHECK_THROWS_WITH(cli::parse_vec3("1, a, 2"), doctest::Contains("not a rational"));
    auto v = cli::parse_vec3("1/2, -3, 0");
    CHECK(v[0] == Scalar(Rational(1, 2)));
    CHECK(v[1] == Scalar(-3));
}

TEST_CASE("commands report their verdicts")
{
    cli::AnalyzeOptions ao;
    ao.asymptotes = true;
    auto r = cli::cmd_analyze("x*y - 5", ao);
    CHECK(r.results["asymptote_count"] == 2);
    CHECK(r.exit_code() == 0);
    CHECK_THROWS_AS(cli::cmd_analyze("x*y*z - 1", ao), cli::InputError);

    cli::TransformOptions to;
    to.steps = {"identity"};
    auto t = cli::cmd_transform("x^2 + z^2 - 1", to);
    CHECK(t.results["unchanged"] == true);
    to.steps = {"mobius b=1"};
    CHECK_THROWS_WITH(cli::cmd_transform("x*z - 1", to), doctest::Contains("b(0) must be 0"));
    to.steps = {"shear alpha=0"};
    CHECK_THROWS_AS(cli::cmd_transform("x*z - 1", to), cli::InputError);

    auto cfg = cli::Config::parse("family = form\nH = X*Y - t*W^2\n");
    cli::DegenerateOptions d;
    d.asymptotic = "strict";
    auto g = cli::cmd_degenerate(cfg, d);
    // X*Y - t: the axis X = 0 meets every fibre only at infinity
    CHECK(g.exit_code() == 1);
}
