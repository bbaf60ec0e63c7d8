#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tsurf/render.hpp"
#include "tsurf/surface.hpp"

using namespace tsurf;
using namespace tsurf::test;

namespace {

CurveParam triple(const std::string& text, const std::string& param) {
    return CurveParam(parse_param_triple(text, param), param);
}

// independent full-column-rank check on the partials' coefficient matrix
bool partials_full_rank(const MPoly& f) {
    std::array<MPoly, 3> cols{f.diff(0), f.diff(1), f.diff(2)};
    std::vector<Mono> monos;
    for (const auto& c : cols)
        for (const auto& [m, co] : c.terms())
            if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
    std::vector<std::array<Rat, 3>> rows;
    for (const auto& m : monos) rows.push_back({cols[0].coeff(m), cols[1].coeff(m), cols[2].coeff(m)});
    int rank = 0;
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (size_t r = 0; r < rows.size(); ++r)
            if (rows[r][col] != 0) { piv = static_cast<int>(r); break; }
        if (piv < 0) continue;
        ++rank;
        auto prow = rows[piv];
        std::vector<std::array<Rat, 3>> next;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == piv) continue;
            auto row = rows[r];
            if (row[col] != 0) {
                Rat fac = row[col] / prow[col];
                for (int cc = 0; cc < 3; ++cc) row[cc] -= fac * prow[cc];
            }
            next.push_back(row);
        }
        rows = next;
    }
    return rank == 3;
}

} // namespace

TEST_CASE("cylinder_test") {
    auto d1 = cylinder_test(P("x1^2+x2^2-1"));
    REQUIRE(d1);
    CHECK(*d1 == Vec3{rat(0), rat(0), rat(1)});
    CHECK(partials_full_rank(f_ex1()));
    CHECK_FALSE(cylinder_test(f_ex1()));
    auto d3 = cylinder_test(P("x1+x2+x3"));
    REQUIRE(d3);
    // any nonzero kernel vector works; check it annihilates the gradient
    MPoly g = P("x1+x2+x3").diff(0) * (*d3)[0] + P("x1+x2+x3").diff(1) * (*d3)[1] +
              P("x1+x2+x3").diff(2) * (*d3)[2];
    CHECK(g.is_zero());
    CHECK(!((*d3)[0] == 0 && (*d3)[1] == 0 && (*d3)[2] == 0));
}

TEST_CASE("plane_param") {
    {
        SurfaceParam sp = plane_param(P("x1+2*x2+x3+4"));
        CHECK(render(sp.p1) == "t1, 0, -t1-4");
        CHECK(render(sp.p2) == "0, t2, -2*t2");
        CHECK(verify_surface_param(P("x1+2*x2+x3+4"), sp));
    }
    {
        SurfaceParam sp = plane_param(P("x3"));
        CHECK(render(sp.p1) == "t1, 0, 0");
        CHECK(render(sp.p2) == "0, t2, 0");
        CHECK(verify_surface_param(P("x3"), sp));
    }
    {
        SurfaceParam sp = plane_param(P("x2"));
        CHECK(verify_surface_param(P("x2"), sp));
    }
    CHECK_THROWS_AS(plane_param(P("7")), std::invalid_argument);
}

TEST_CASE("candidate_vectors") {
    Config cfg;
    auto vs = candidate_vectors(cfg);
    REQUIRE(static_cast<int>(vs.size()) == cfg.vector_budget);
    CHECK(vs[0].a == Vec3{rat(1), rat(0), rat(0)});
    bool has111 = false;
    for (int i = 0; i < 7; ++i)
        if (vs[i].a == Vec3{rat(1), rat(1), rat(1)}) has111 = true;
    CHECK(has111);

    Config cfg7 = cfg;
    cfg7.vector_budget = 7;
    CHECK(candidate_vectors(cfg7).size() == 7);

    // determinism and no duplicates
    auto vs2 = candidate_vectors(cfg);
    for (size_t i = 0; i < vs.size(); ++i) CHECK(vs[i].a == vs2[i].a);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) CHECK(!(vs[i].a == vs[j].a));

    Config forced = cfg;
    forced.vector_override = {{Vec3{rat(1), rat(1), rat(1)}}};
    auto vf = candidate_vectors(forced);
    REQUIRE(vf.size() == 1);
    CHECK(vf[0].a == Vec3{rat(1), rat(1), rat(1)});
}

TEST_CASE("compute_c1") {
    Config cfg;
    {
        C1Result r = compute_c1(f_ex1(), {Vec3{rat(1), rat(1), rat(1)}}, cfg);
        REQUIRE(r.p1);
        MPoly g = f_ex1().diff(0) + f_ex1().diff(1) + f_ex1().diff(2);
        CHECK(validate_on_curve(r.p1->renamed("t"), {f_ex1(), g}));
        CHECK(properness_degree(*r.p1) == 1);
    }
    {
        C1Result r = compute_c1(f_ex4(), {Vec3{rat(1), rat(0), rat(0)}}, cfg);
        REQUIRE(r.p1);
        // same curve as the paper's (t, t, t^2)
        CHECK(validate_on_curve(r.p1->renamed("t"), {P("x2-x1"), P("x3-x1^2")}));
    }
    {
        C1Result r = compute_c1(f_ex1(), {Vec3{rat(0), rat(0), rat(1)}}, cfg);
        CHECK(r.vector_rejected);  // g = 1
    }
}

TEST_CASE("compute_c1 skips the singular locus of the quartic") {
    // (t, 3t-2, t^2+4t-4) lies on {f4, grad f4 . a} for every a but is the
    // singular curve; the smoothness predicate must reject it
    Config cfg;
    CurveParam sing = triple("t1, 3*t1-2, t1^2+4*t1-4", "t1");
    for (auto vec : {Vec3{rat(1), rat(0), rat(0)}, Vec3{rat(1), rat(1), rat(1)}}) {
        C1Result r = compute_c1(f_ex4(), {vec}, cfg);
        REQUIRE(r.p1);
        bool all_zero = true;
        for (int i = 0; i < 3; ++i)
            if (!r.p1->substitute_into(f_ex4().diff(i)).is_zero()) all_zero = false;
        CHECK_FALSE(all_zero);
    }
    // the singular curve itself does lie on the system
    MPoly g = f_ex4().diff(0);
    CHECK(validate_on_curve(sing.renamed("t"), {f_ex4(), g}));
}

TEST_CASE("psi_decompose on Example 1 at (1,1,1)") {
    CurveParam p1 = triple("t1, (4*t1+1)/2, -(2*t1^2+2*t1+1)/2", "t1");
    PsiDecomposition d = psi_decompose(f_ex1(), p1);
    REQUIRE(d.psi_coeffs.size() == 2);
    CHECK(d.psi_coeffs[0] == P("x3+2*x2^2-6*x1*x2+5*x1^2-3*x1+2*x2"));
    CHECK(d.psi_coeffs[1] == P("2*x2-2*x1"));
    CHECK(d.h_tilde.is_constant());
    CHECK(d.p_hat.is_constant());
}

TEST_CASE("psi_decompose degenerate and reconstruction") {
    {
        CurveParam p1 = triple("t1, 0, t1", "t1");
        PsiDecomposition d = psi_decompose(P("x3-x1"), p1);
        REQUIRE(d.psi_coeffs.size() == 1);
        CHECK(equal_up_to_constant(d.psi_coeffs[0], P("x3-x1")));
    }
    // reconstruction h_tilde * psi * p_hat == cleared numerator on random graphs
    PolyGen gen(307);
    VarSet t1v = VarSet::single("t1");
    VarSet xt = VarSet::surface_t1();
    for (int iter = 0; iter < 20; ++iter) {
        MPoly A = gen.random_poly(t1v, 3, 3, 3);
        MPoly B = gen.random_poly(t1v, 3, 3, 3);
        // f vanishing on (t, A(t), B(t)) built from its graph ideal
        MPoly f = (P("x2") - graph_as_x1(A)) * (P("x3") - graph_as_x1(B));
        f = f + (P("x2") - graph_as_x1(A));  // keep it non-product but still vanishing
        CurveParam p1({RatFn(MPoly::variable(t1v, 0)), RatFn(A), RatFn(B)}, "t1");
        if (!p1.substitute_into(f).is_zero()) continue;
        PsiDecomposition d = psi_decompose(f, p1);
        Bindings b;
        for (int i = 0; i < 3; ++i) {
            RatFn pi = remap_curve_coord(p1.coord(i), xt, 3);
            b.emplace(i, RatFn(MPoly::variable(xt, i)) + pi);
        }
        auto [H, D] = substitute_cleared(f, xt, b);
        CHECK(d.h_tilde * d.psi * d.p_hat == H);
        CHECK(d.den_cleared == D);
    }
}

TEST_CASE("compute_c2_shortcut reproduces Example 2") {
    Config cfg;
    CurveParam p1 = triple("t1, (4*t1+1)/2, -(2*t1^2+2*t1+1)/2", "t1");
    PsiDecomposition psi = psi_decompose(f_ex1(), p1);
    C2Result r = compute_c2_shortcut(f_ex1(), p1, psi, cfg);
    REQUIRE(r.p2);
    CHECK(r.s1 == 1);
    CHECK(r.s2 == -3);
    // the paper's C2 is cut out by x2-x1 and x3+x1^2-x1
    CHECK(validate_on_curve(r.p2->renamed("t"), {P("x2-x1"), P("x3+x1^2-x1")}));
}

TEST_CASE("compute_c2_general agrees with the shortcut on Example 1") {
    Config cfg;
    CurveParam p1 = triple("t1, (4*t1+1)/2, -(2*t1^2+2*t1+1)/2", "t1");
    PsiDecomposition psi = psi_decompose(f_ex1(), p1);
    C2Result a = compute_c2_shortcut(f_ex1(), p1, psi, cfg);
    C2Result b = compute_c2_general(f_ex1(), p1, psi, cfg);
    REQUIRE(a.p2);
    REQUIRE(b.p2);
    // same curve: each validates on the other's defining system
    CHECK(validate_on_curve(a.p2->renamed("t"), b.system));
    CHECK(validate_on_curve(b.p2->renamed("t"), a.system));
}

TEST_CASE("compute_c2_general needs two independent coefficients") {
    Config cfg;
    CurveParam p1 = triple("t1, 0, t1", "t1");
    MPoly f = P("x3-x1");
    PsiDecomposition psi = psi_decompose(f, p1);
    C2Result r = compute_c2_general(f, p1, psi, cfg);
    CHECK_FALSE(r.p2);
    REQUIRE(!r.log.empty());
    CHECK(r.log[0].find("independent") != std::string::npos);
}

TEST_CASE("normalize_standard") {
    {
        CurveParam p1 = triple("0, 0, 0", "t1");
        CurveParam p2 = triple("t2+1/2, (t2+1/2)^2, (t2+1/2)^3", "t2");
        auto [sp, shift] = normalize_standard(p1, p2);
        // standard form reached, and the sum surface is unchanged
        auto v0 = sp.p2.eval(rat(0));
        REQUIRE(v0);
        CHECK(((*v0)[0] == 0 && (*v0)[1] == 0 && (*v0)[2] == 0));
        auto d0 = sp.p2.derivative().eval(rat(0));
        REQUIRE(d0);
        CHECK(!((*d0)[0] == 0 && (*d0)[1] == 0 && (*d0)[2] == 0));
        for (long a : {0L, 1L, 2L}) {
            auto lhs1 = sp.p1.eval(rat(a)), lhs2 = sp.p2.eval(rat(a));
            auto rhs1 = p1.eval(rat(a)), rhs2 = p2.eval(rat(a) + shift);
            REQUIRE(lhs1);
            for (int i = 0; i < 3; ++i)
                CHECK((*lhs1)[i] + (*lhs2)[i] == (*rhs1)[i] + (*rhs2)[i]);
        }
    }
    {
        CurveParam p1 = triple("t1, t1, t1", "t1");
        CurveParam p2 = triple("t2, t2^2+t2, t2^3+3/2*t2^2+3/4*t2", "t2");
        auto [sp, shift] = normalize_standard(p1, p2);
        CHECK(shift == 0);
        CHECK(render(sp.p2) == render(p2));
        CHECK(render(sp.p1) == render(p1));
    }
    {
        CurveParam p1 = triple("0, 0, 0", "t1");
        CurveParam p2 = triple("t2+1, t2+1, (t2+1)^2", "t2");
        auto [sp, shift] = normalize_standard(p1, p2);
        CHECK(shift == 0);
        CHECK(render(sp.p2) == "t2, t2, t2^2+2*t2");
        CHECK(render(sp.p1) == "1, 1, 1");
        auto v = sp.p2.eval(rat(0));
        REQUIRE(v);
        CHECK(((*v)[0] == 0 && (*v)[1] == 0 && (*v)[2] == 0));
    }
}

TEST_CASE("verify_surface_param") {
    {
        SurfaceParam sp{triple("t1, (1+t1^2)/t1^2, 1/t1", "t1"), triple("t2^2, t2^3, t2", "t2")};
        CHECK(verify_surface_param(f_ex3(), sp));
    }
    {
        SurfaceParam sp{triple("t1, 0, 0", "t1"), triple("0, t2, 0", "t2")};
        CHECK_FALSE(verify_surface_param(f_ex1(), sp));
    }
    {
        SurfaceParam sp{triple("t1, t1, t1^2", "t1"), triple("t2, t2^2, t2^3", "t2")};
        CHECK(verify_surface_param(f_ex4(), sp));
    }
    {
        SurfaceParam sp{triple("t1, t1-1/4, 3/8-t1+t1^2", "t1"),
                        triple("t2, t2+t2^2, 3/4*t2+3/2*t2^2+t2^3", "t2")};
        CHECK(verify_surface_param(f_ex4(), sp));
    }
    {
        // zero substitution but Jacobian rank below 2: not a surface
        SurfaceParam sp{triple("t1, 0, 0", "t1"), triple("t2, 0, 0", "t2")};
        CHECK_FALSE(verify_surface_param(P("x2"), sp));
    }
}

TEST_CASE("classify_surface on Example 1") {
    Classification c = classify_surface(f_ex1());
    REQUIRE(c.tag == SurfaceTag::Translational);
    REQUIRE(c.param);
    REQUIRE(c.certificate);
    CHECK(verify_surface_param(f_ex1(), *c.param));
    // certificate invariants
    const SurfaceParam& sp = *c.param;
    auto p20 = sp.p2.eval(rat(0));
    REQUIRE(p20);
    CHECK(((*p20)[0] == 0 && (*p20)[1] == 0 && (*p20)[2] == 0));
    auto d20 = sp.p2.derivative().eval(rat(0));
    REQUIRE(d20);
    CHECK(!((*d20)[0] == 0 && (*d20)[1] == 0 && (*d20)[2] == 0));
    CHECK_FALSE(is_line(sp.p1));
    CHECK_FALSE(is_line(sp.p2));
    CHECK(properness_degree(sp.p1) == 1);
    CHECK(properness_degree(sp.p2) == 1);
    // p1 lies on the certificate's C1 system, p2 on the psi variety by construction
    CHECK(validate_on_curve(sp.p1.renamed("t"), c.certificate->c1_defining));
    // C1 != C2: some sampled p2 point misses the C1 system
    bool differs = false;
    for (long k = -5; k <= 5 && !differs; ++k) {
        auto pt = sp.p2.eval(rat(k));
        if (!pt) continue;
        if (c.certificate->c1_defining.g1.eval({(*pt)[0], (*pt)[1], (*pt)[2]}) != 0 ||
            c.certificate->c1_defining.g2.eval({(*pt)[0], (*pt)[1], (*pt)[2]}) != 0)
            differs = true;
    }
    CHECK(differs);
    // psi of the final p1 vanishes on p2 (Theorem 5 statement 3)
    PsiDecomposition psi = psi_decompose(f_ex1(), sp.p1);
    for (const auto& h : psi.psi_coeffs) CHECK(sp.p2.substitute_into(h).is_zero());
    // psi has mixed dependence
    CHECK(psi.psi.degree(3) > 0);
    bool dep_x = psi.psi.degree(0) > 0 || psi.psi.degree(1) > 0 || psi.psi.degree(2) > 0;
    CHECK(dep_x);
}

TEST_CASE("classify_surface on cylinder and plane") {
    Classification c1 = classify_surface(P("x1^2+x2^2-1"));
    CHECK(c1.tag == SurfaceTag::Cylinder);
    REQUIRE(c1.direction);
    CHECK(*c1.direction == Vec3{rat(0), rat(0), rat(1)});

    Classification c2 = classify_surface(P("x1+2*x2+x3+4"));
    CHECK(c2.tag == SurfaceTag::Plane);
    REQUIRE(c2.param);
    CHECK(verify_surface_param(P("x1+2*x2+x3+4"), *c2.param));
}

TEST_CASE("classify_surface rejects non-squarefree input") {
    CHECK_THROWS_AS(classify_surface(P("(x3-x1^2)^2")), std::invalid_argument);
    CHECK_THROWS_AS(classify_surface(P("5")), std::invalid_argument);
}

TEST_CASE("classification is deterministic") {
    Classification a = classify_surface(f_ex1());
    Classification b = classify_surface(f_ex1());
    CHECK(render_structured(ResultDocument::from(a)) == render_structured(ResultDocument::from(b)));
}
