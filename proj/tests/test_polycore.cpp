#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tsurf/substitute.hpp"

using namespace tsurf;
using namespace tsurf::test;

TEST_CASE("arithmetic basics") {
    MPoly x1 = MPoly::variable(X(), 0);
    CHECK((x1 + (-x1)).is_zero());
    CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
    CHECK(P("2*x2-2*x1").pow(1) == P("2*x2-2*x1"));
    CHECK(P("x1+1").pow(0) == P("1"));
    CHECK_THROWS_AS(MPoly::variable(X(), 0) + MPoly::variable(VarSet::single("t"), 0), VarMismatch);
}

TEST_CASE("canonical form") {
    CHECK(P("x1*x2 + x2*x1") == P("2*x1*x2"));
    CHECK(P("x1 - x1").terms().empty());
    CHECK(P("3*x1^2 - 3*x1^2 + x3") == P("x3"));
    // grlex leading term: higher total degree wins, then earlier variable
    CHECK(P("x1*x2 + x3^2").leading_mono() == Mono{1, 1, 0});
    CHECK(P("x1 + x2").leading_mono() == Mono{1, 0, 0});
}

TEST_CASE("diff") {
    CHECK(f_ex1().diff(0) == P("10*x1-6*x2"));
    CHECK(P("7").diff(1).is_zero());
    CHECK(P("x1^3*x2").diff(1) == P("x1^3"));
}

TEST_CASE("substitute: Example 2 P1 lies on the surface") {
    VarSet t1 = VarSet::single("t1");
    Bindings b;
    b.emplace(0, parse_ratexpr("t1", t1));
    b.emplace(1, parse_ratexpr("(4*t1+1)/2", t1));
    b.emplace(2, parse_ratexpr("-(2*t1^2+2*t1+1)/2", t1));
    CHECK(substitute(f_ex1(), t1, b).is_zero());
}

TEST_CASE("substitute: trivial cases") {
    VarSet t = VarSet::single("t");
    {
        Bindings b;
        b.emplace(0, parse_ratexpr("t", t));
        b.emplace(1, parse_ratexpr("-t", t));
        b.emplace(2, RatFn(MPoly(t)));
        CHECK(substitute(P("x1+x2"), t, b).is_zero());
    }
    {
        Bindings b;
        b.emplace(0, parse_ratexpr("1/t", t));
        b.emplace(1, RatFn(MPoly(t)));
        b.emplace(2, RatFn(MPoly(t)));
        RatFn r = substitute(P("x1^2"), t, b);
        CHECK(r == parse_ratexpr("1/t^2", t));
    }
}

TEST_CASE("substitute: unbound variables pass through by name") {
    VarSet xt{"x1", "x2", "x3", "t1"};
    Bindings b;
    b.emplace(0, RatFn(MPoly::variable(xt, 0) + MPoly::variable(xt, 3)));  // x1 -> x1 + t1
    RatFn h = substitute(P("x1^2 + x2"), xt, b);
    CHECK(h.is_polynomial());
    CHECK(h.num() == parse_poly("x1^2 + 2*x1*t1 + t1^2 + x2", xt));
}

TEST_CASE("gcd basics") {
    CHECK(poly_gcd(P("x1^2-1"), P("x1^2+2*x1+1")) == P("x1+1"));
    CHECK(equal_up_to_constant(poly_gcd(P("(x1+x2)*(x1-x3)"), P("(x1+x2)*x2")), P("x1+x2")));
    CHECK(poly_gcd(MPoly::zero(X()), P("3*x1+3")) == P("x1+1"));
    CHECK(poly_gcd(P("6"), P("4")) == P("1"));
}

TEST_CASE("gcd: Example 2 shortcut shifts are coprime") {
    // G = gcd(f(P1(1)+x), f(P1(-3)+x)) = 1
    std::array<Rat, 3> q1{rat(1), rat(5, 2), rat(-5, 2)};
    std::array<Rat, 3> q2{rat(-3), rat(-11, 2), rat(-13, 2)};
    MPoly g1 = shift_poly(f_ex1(), q1);
    MPoly g2 = shift_poly(f_ex1(), q2);
    CHECK(poly_gcd(g1, g2) == P("1"));
}

TEST_CASE("gcd property: common factor scales out") {
    PolyGen gen(42);
    for (int iter = 0; iter < 30; ++iter) {
        MPoly p = gen.random_nonzero(X(), 3, 3);
        MPoly q = gen.random_nonzero(X(), 3, 3);
        MPoly r = gen.random_nonzero(X(), 2, 2);
        MPoly lhs = poly_gcd(p * r, q * r);
        MPoly rhs = (r * poly_gcd(p, q)).normalized();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant examples") {
    // criterion: res_x3(f_Ex1, grad f.(1,1,1)) = 4x1-2x2+1 up to constant
    MPoly g = f_ex1().diff(0) + f_ex1().diff(1) + f_ex1().diff(2);
    CHECK(g == P("4*x1-2*x2+1"));
    CHECK(equal_up_to_constant(resultant(f_ex1(), g, 2), P("4*x1-2*x2+1")));
    CHECK(equal_up_to_constant(resultant(f_ex1(), P("4*x1-2*x2+1"), 2), P("4*x1-2*x2+1")));

    CHECK(resultant(P("x3-x1"), P("x3-x2"), 2) == P("x1-x2"));  // a-b with a=x1,b=x2
    CHECK(resultant(P("x3^2-x1"), P("x3-x2"), 2) == P("x2^2-x1"));
    CHECK_THROWS_AS(resultant(P("x1"), P("x2"), 2), std::domain_error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    PolyGen gen(7);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        MPoly p = gen.random_nonzero(X(), 3, 3, 3);
        MPoly q = gen.random_nonzero(X(), 3, 3, 3);
        int v = static_cast<int>(gen.pick(0, 2));
        if (p.degree(v) < 1 || q.degree(v) < 1) continue;
        CHECK(resultant(p, q, v) == sylvester_resultant(p, q, v));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("resultant product formula") {
    PolyGen gen(11);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly p = gen.random_nonzero(X(), 2, 3, 3);
        MPoly q1 = gen.random_nonzero(X(), 2, 2, 3);
        MPoly q2 = gen.random_nonzero(X(), 2, 2, 3);
        int v = static_cast<int>(gen.pick(0, 2));
        if (p.degree(v) < 1 || q1.degree(v) < 1 || q2.degree(v) < 1) continue;
        CHECK(resultant(p, q1 * q2, v) == resultant(p, q1, v) * resultant(p, q2, v));
    }
}

TEST_CASE("resultant vanishes exactly on shared factors") {
    PolyGen gen(13);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly p = gen.random_nonzero(X(), 2, 2, 3);
        MPoly q = gen.random_nonzero(X(), 2, 2, 3);
        MPoly r = gen.random_nonzero(X(), 2, 2, 3);
        int v = static_cast<int>(gen.pick(0, 2));
        if (r.degree(v) < 1 || p.degree(v) < 1 || q.degree(v) < 1) continue;
        CHECK(resultant(p * r, q * r, v).is_zero());
        MPoly res = resultant(p, q, v);
        MPoly g = poly_gcd(p, q);
        if (!res.is_zero()) CHECK(g.degree(v) <= 0);
        if (g.degree(v) > 0) CHECK(res.is_zero());
    }
}

TEST_CASE("chain rule through substitution") {
    PolyGen gen(17);
    VarSet tv = VarSet::single("t");
    for (int iter = 0; iter < 10; ++iter) {
        MPoly f = gen.random_nonzero(X(), 3, 4, 3);
        std::array<RatFn, 3> pc;
        Bindings b;
        for (int i = 0; i < 3; ++i) {
            MPoly num = gen.random_nonzero(tv, 2, 2, 3);
            pc[i] = RatFn(num);
            b.emplace(i, pc[i]);
        }
        RatFn composed = substitute(f, tv, b);
        RatFn lhs = composed.diff(0);
        RatFn rhs = RatFn(MPoly(tv));
        for (int i = 0; i < 3; ++i) rhs = rhs + substitute(f.diff(i), tv, b) * pc[i].diff(0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("content and primitive part") {
    VarSet xt{"x1", "x2", "x3", "t1"};
    {
        auto [c, pr] = content_primitive(parse_poly("x1*t1 + x1*x2", xt), 3);
        CHECK(c == parse_poly("x1", xt));
        CHECK(pr == parse_poly("t1+x2", xt));
    }
    {
        // psi of Example 1 at (1,1,1): gcd of t1-coefficients is 1
        MPoly psi = parse_poly("x3+2*x2^2-6*x1*x2+5*x1^2-3*x1+2*x2+(2*x2-2*x1)*t1", xt);
        auto [c, pr] = content_primitive(psi, 3);
        CHECK(c == parse_poly("1", xt));
        CHECK(pr == psi);
    }
    {
        auto [c, pr] = content_primitive(MPoly::zero(X()), 0);
        CHECK(c.is_zero());
        CHECK(pr.is_zero());
    }
    PolyGen gen(23);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly p = gen.random_nonzero(X(), 3, 3);
        int v = static_cast<int>(gen.pick(0, 2));
        auto [c, pr] = content_primitive(p, v);
        CHECK(c * pr == p);
        auto [c2, pr2] = content_primitive(pr, v);
        CHECK(c2.is_constant());
    }
}

TEST_CASE("squarefree part") {
    CHECK(equal_up_to_constant(squarefree_part(P("(x1+x2)^2")), P("x1+x2")));
    CHECK(equal_up_to_constant(squarefree_part(P("x1^2-x2^2")), P("x1^2-x2^2")));
    MPoly cube = P("4*x1-2*x2+1").pow(3) * P("x1-1");
    CHECK(equal_up_to_constant(squarefree_part(cube), P("4*x1-2*x2+1") * P("x1-1")));
    CHECK_THROWS_AS(squarefree_part(MPoly::zero(X())), std::domain_error);
    CHECK(is_squarefree(P("x1*x2+1")));
    CHECK_FALSE(is_squarefree(P("(x1+1)*(x1+1)*x2")));
}

TEST_CASE("psi_decompose_core examples") {
    VarSet xt{"x1", "x2", "x3", "t1"};
    {
        MPoly H = parse_poly("(x1+1)*(t1^2+1)*(x2+t1)", xt);
        PsiCore c = psi_decompose_core(H, 3);
        CHECK(equal_up_to_constant(c.h_tilde, parse_poly("x1+1", xt)));
        CHECK(equal_up_to_constant(c.p_hat, parse_poly("t1^2+1", xt)));
        CHECK(equal_up_to_constant(c.psi, parse_poly("x2+t1", xt)));
        CHECK(c.h_tilde * c.psi * c.p_hat == H);
    }
    {
        MPoly H = parse_poly("t1*x1", xt);
        PsiCore c = psi_decompose_core(H, 3);
        CHECK(equal_up_to_constant(c.h_tilde, parse_poly("x1", xt)));
        CHECK(equal_up_to_constant(c.p_hat, parse_poly("t1", xt)));
        CHECK(c.psi.is_constant());
        CHECK(c.h_tilde * c.psi * c.p_hat == H);
    }
}

TEST_CASE("psi_decompose_core reconstruction on random inputs") {
    VarSet xt{"x1", "x2", "x3", "t1"};
    PolyGen gen(29);
    for (int iter = 0; iter < 20; ++iter) {
        MPoly H = gen.random_nonzero(xt, 4, 5, 3);
        PsiCore c = psi_decompose_core(H, 3);
        CHECK(c.h_tilde * c.psi * c.p_hat == H);
        // coprimality of the psi coefficients in both directions
        auto tcoeffs = c.psi.coeffs_in(3);
        MPoly g(xt);
        for (const auto& q : tcoeffs) g = poly_gcd(g, q);
        CHECK(g.is_constant());
        PsiCore again = psi_decompose_core(c.psi, 3);
        CHECK(again.p_hat.is_constant());
        CHECK(again.h_tilde.is_constant());
    }
}

TEST_CASE("RatFn reduction is canonical and idempotent") {
    RatFn r(P("2*x1^2-2*x2^2"), P("4*x1+4*x2"));
    CHECK(r.num() == P("1/2*x1-1/2*x2"));
    CHECK(r.den() == P("1"));
    RatFn again(r.num(), r.den());
    CHECK(again == r);
    CHECK_THROWS_AS(RatFn(P("x1"), MPoly::zero(X())), std::domain_error);
    PolyGen gen(31);
    for (int iter = 0; iter < 15; ++iter) {
        MPoly n = gen.random_poly(X(), 3, 3);
        MPoly d = gen.random_nonzero(X(), 2, 2);
        RatFn f(n, d);
        CHECK(RatFn(f.num(), f.den()) == f);
        CHECK(f.den().leading_coeff() == 1);
        CHECK(poly_gcd(f.num().is_zero() ? f.den() : f.num(), f.den()).is_constant());
    }
}
