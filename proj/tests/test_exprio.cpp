#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tsurf/render.hpp"

using namespace tsurf;
using namespace tsurf::test;

TEST_CASE("parse_poly basics") {
    CHECK(P("x3+5*x1^2-6*x1*x2+2*x2^2") == f_ex1());
    CHECK(P("0").is_zero());
    MPoly p = P("x1^2 - (1/2)*x2");
    CHECK(p.coeff(Mono{2, 0, 0}) == 1);
    CHECK(p.coeff(Mono{0, 1, 0}) == rat(-1, 2));
    CHECK(P("1/2*x1") == P("(1/2)*x1"));
    CHECK(P(" x1 + \n x2 ") == P("x1+x2"));
    CHECK(P("-x1^2") == -P("x1^2"));
}

TEST_CASE("parse_poly errors carry positions") {
    CHECK_THROWS_AS(P("x1 + y"), ParseError);
    CHECK_THROWS_AS(P("x1^-2"), ParseError);
    CHECK_THROWS_AS(P("x1^(2)"), ParseError);
    CHECK_THROWS_AS(P("x1 x2"), ParseError);  // juxtaposition is not multiplication
    CHECK_THROWS_AS(P("(x1+x2"), ParseError);
    CHECK_THROWS_AS(P("x1/x2"), ParseError);  // '/' only in rational literals here
    try {
        P("x1 + @");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);
    }
}

TEST_CASE("parse_param_triple") {
    auto p1 = parse_param_triple("t1, (1+t1^2)/t1^2, 1/t1", "t1");
    VarSet t1 = VarSet::single("t1");
    CHECK(p1[0] == parse_ratexpr("t1", t1));
    CHECK(p1[1].num() == parse_poly("t1^2+1", t1));
    CHECK(p1[1].den() == parse_poly("t1^2", t1));
    CHECK(p1[2].den() == parse_poly("t1", t1));

    auto p2 = parse_param_triple("t2^2, t2^3, t2", "t2");
    CHECK(p2[0].is_polynomial());

    auto z = parse_param_triple("0, 0, 0", "s");
    CHECK(z[0].is_zero());

    CHECK_THROWS_AS(parse_param_triple("t1, t1", "t1"), ParseError);
    CHECK_THROWS_AS(parse_param_triple("t1, t2, t1", "t1"), ParseError);  // unknown name
    CHECK_THROWS_AS(parse_param_triple("1/(t1-t1), 0, 0", "t1"), ParseError);
}

TEST_CASE("render canonical text") {
    CHECK(render(MPoly::zero(X())) == "0");
    CHECK(render(P("x3+5*x1^2-6*x1*x2+2*x2^2")) == "5*x1^2-6*x1*x2+2*x2^2+x3");
    CHECK(render(P("-x1-1")) == "-x1-1");
    CHECK(render(P("1/2*x2-3*x1")) == "-3*x1+1/2*x2");
    // Example 2 P2 in canonical order
    auto p2 = parse_param_triple("t2, t2, -t2*(t2-1)", "t2");
    CurveParam cp({p2[0], p2[1], p2[2]}, "t2");
    CHECK(render(cp) == "t2, t2, -t2^2+t2");
}

TEST_CASE("render/parse round trip on random polynomials") {
    PolyGen gen(101);
    for (int iter = 0; iter < 100; ++iter) {
        MPoly p = gen.random_poly(X(), 4, 5, 9);
        CHECK(parse_poly(render(p), X()) == p);
        std::string once = render(p);
        CHECK(render(parse_poly(once, X())) == once);
    }
}

TEST_CASE("render/parse round trip on rational functions") {
    PolyGen gen(103);
    VarSet t = VarSet::single("t");
    for (int iter = 0; iter < 40; ++iter) {
        RatFn f(gen.random_poly(t, 3, 3, 5), gen.random_nonzero(t, 2, 2, 5));
        RatFn back = parse_ratexpr(render(f), t);
        CHECK(back == f);
    }
}

TEST_CASE("structured document round trip is byte identical") {
    Classification c;
    c.tag = SurfaceTag::Translational;
    auto t1 = parse_param_triple("t1, (4*t1+1)/2, -(2*t1^2+2*t1+1)/2", "t1");
    auto t2 = parse_param_triple("t2, t2, -t2^2+t2", "t2");
    c.param = SurfaceParam{CurveParam(t1, "t1"), CurveParam(t2, "t2")};
    Certificate cert;
    cert.vector = {Vec3{rat(1), rat(1), rat(1)}};
    cert.s1 = rat(1);
    cert.s2 = rat(-3);
    cert.shift = rat(0);
    cert.used_shortcut = true;
    c.certificate = cert;
    c.evidence = {"vector (1,1,1): verified translational decomposition"};

    ResultDocument doc = ResultDocument::from(c);
    std::string s1 = render_structured(doc);
    ResultDocument doc2 = parse_structured(s1);
    std::string s2 = render_structured(doc2);
    CHECK(s1 == s2);
    CHECK(s1.find("\"classification\": \"translational\"") != std::string::npos);
    CHECK(s1.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("structured document for cylinder and undecided") {
    Classification c;
    c.tag = SurfaceTag::Cylinder;
    c.direction = Vec3{rat(0), rat(0), rat(1)};
    c.evidence = {"gradient kernel direction (0,0,1)"};
    std::string s = render_structured(ResultDocument::from(c));
    ResultDocument back = parse_structured(s);
    CHECK(back.classification == SurfaceTag::Cylinder);
    CHECK(render_structured(back) == s);

    Classification u;
    u.tag = SurfaceTag::Undecided;
    u.evidence = {"vector budget exhausted without a verified certificate"};
    std::string su = render_structured(ResultDocument::from(u));
    CHECK(parse_structured(su).classification == SurfaceTag::Undecided);
    CHECK(render_structured(parse_structured(su)) == su);
}
