#include "tsurf/surface.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tsurf {

namespace {

std::string vec_str(const Vec3& a) {
    return "(" + rat_str(a[0]) + "," + rat_str(a[1]) + "," + rat_str(a[2]) + ")";
}

MPoly gradient_combination(const MPoly& f, const Vec3& a) {
    MPoly g(f.vars());
    for (int i = 0; i < 3; ++i)
        if (a[i] != 0) g += f.diff(i) * a[i];
    return g;
}

// exact kernel of the column space spanned by the partials' coefficient vectors
std::optional<Vec3> kernel_vector(const std::array<MPoly, 3>& cols) {
    // rows indexed by monomials appearing in any column
    std::set<Mono, GrlexLess> monos;
    for (const auto& p : cols)
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    std::vector<std::array<Rat, 3>> rows;
    rows.reserve(monos.size());
    for (const auto& m : monos) rows.push_back({cols[0].coeff(m), cols[1].coeff(m), cols[2].coeff(m)});

    // Gaussian elimination over Q on a (#monos x 3) matrix
    int rank = 0;
    std::array<int, 3> pivot_row{-1, -1, -1};
    std::vector<bool> used(rows.size(), false);
    for (int col = 0; col < 3; ++col) {
        int pr = -1;
        for (size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && rows[r][col] != 0) { pr = static_cast<int>(r); break; }
        if (pr < 0) continue;
        used[pr] = true;
        pivot_row[col] = pr;
        ++rank;
        Rat pv = rows[pr][col];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr || rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / pv;
            for (int c = 0; c < 3; ++c) rows[r][c] -= factor * rows[pr][c];
        }
    }
    if (rank == 3) return std::nullopt;
    // back-substitute one free column
    int free_col = -1;
    for (int c = 0; c < 3; ++c)
        if (pivot_row[c] < 0) { free_col = c; break; }
    Vec3 v{Rat(0), Rat(0), Rat(0)};
    v[free_col] = Rat(1);
    for (int c = 0; c < 3; ++c) {
        if (pivot_row[c] < 0) continue;
        const auto& row = rows[pivot_row[c]];
        v[c] = -row[free_col] / row[c];
    }
    // integer-normalize for a stable witness
    Int l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) { x *= Rat(l); x.canonicalize(); }
    Int g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    if (g != 0)
        for (auto& x : v) { x /= Rat(g); x.canonicalize(); }
    return v;
}

const std::vector<Rat>& small_rational_ladder() {
    static const std::vector<Rat> ladder = [] {
        std::vector<Rat> l;
        for (long v : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L}) l.emplace_back(v);
        l.push_back(rat(1, 2));
        l.push_back(rat(-1, 2));
        l.push_back(rat(1, 3));
        l.push_back(rat(-1, 3));
        l.push_back(rat(3, 2));
        l.push_back(rat(-3, 2));
        return l;
    }();
    return ladder;
}

const std::vector<std::pair<long, long>>& shortcut_pairs() {
    static const std::vector<std::pair<long, long>> pairs{
        {1, -3}, {2, -1}, {1, 2}, {-1, 3}, {2, 3}, {-2, 1}, {1, -1}, {3, -2}, {-1, -3}, {4, 1},
        {5, -2}, {-4, 3}, {2, -5}, {6, 1}, {-5, -1}};
    return pairs;
}

} // namespace

std::optional<Vec3> cylinder_test(const MPoly& f) {
    if (f.is_constant()) return std::nullopt;
    return kernel_vector({f.diff(0), f.diff(1), f.diff(2)});
}

SurfaceParam plane_param(const MPoly& f) {
    if (f.is_constant() || f.total_degree() != 1)
        throw std::invalid_argument("plane_param: input is not linear");
    const VarSet& vs = f.vars();
    Mono m0(vs.arity(), 0);
    std::array<Rat, 4> m;  // m1,m2,m3,m4
    for (int i = 0; i < 3; ++i) {
        Mono mi(vs.arity(), 0);
        mi[i] = 1;
        m[i] = f.coeff(mi);
    }
    m[3] = f.coeff(m0);
    // choose the coordinate playing the x3 role: the last with nonzero coefficient
    int k = -1;
    for (int i = 2; i >= 0; --i)
        if (m[i] != 0) { k = i; break; }
    // the two remaining coordinates in increasing order take the x1/x2 roles
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == k) continue;
        if (i1 < 0) i1 = i;
        else i2 = i;
    }
    Rat m1 = m[i1] / m[k], m2 = m[i2] / m[k], m4 = m[3] / m[k];

    VarSet t1v = VarSet::single("t1"), t2v = VarSet::single("t2");
    MPoly t1 = MPoly::variable(t1v, 0), t2 = MPoly::variable(t2v, 0);
    std::array<RatFn, 3> c1{RatFn(MPoly(t1v)), RatFn(MPoly(t1v)), RatFn(MPoly(t1v))};
    std::array<RatFn, 3> c2{RatFn(MPoly(t2v)), RatFn(MPoly(t2v)), RatFn(MPoly(t2v))};
    c1[i1] = RatFn(t1);
    c1[k] = RatFn(t1 * (-m1) - MPoly::constant(t1v, m4));
    c2[i2] = RatFn(t2);
    c2[k] = RatFn(t2 * (-m2));
    return SurfaceParam{CurveParam(std::move(c1), "t1"), CurveParam(std::move(c2), "t2")};
}

std::vector<CandidateVector> candidate_vectors(const Config& cfg) {
    if (!cfg.vector_override.empty()) {
        auto v = cfg.vector_override;
        if (static_cast<int>(v.size()) > cfg.vector_budget) v.resize(cfg.vector_budget);
        return v;
    }
    std::vector<CandidateVector> out;
    std::set<std::array<std::string, 3>> seen;
    auto push = [&](const Rat& a, const Rat& b, const Rat& c) {
        if (static_cast<int>(out.size()) >= cfg.vector_budget) return;
        if (a == 0 && b == 0 && c == 0) return;
        std::array<std::string, 3> key{rat_str(a), rat_str(b), rat_str(c)};
        if (!seen.insert(key).second) return;
        out.push_back({Vec3{a, b, c}});
    };
    push(1, 0, 0);
    push(0, 1, 0);
    push(0, 0, 1);
    push(1, 1, 0);
    push(1, 0, 1);
    push(0, 1, 1);
    push(1, 1, 1);
    // patterned fills with a_i = 1 and one zero entry (the Lemma-7 shape)
    static const std::vector<Rat> qladder = [] {
        std::vector<Rat> q;
        for (long v : {2L, -1L, 3L, -2L}) q.emplace_back(v);
        q.push_back(rat(1, 2));
        q.push_back(rat(-1, 2));
        return q;
    }();
    for (const Rat& q : qladder) {
        push(1, q, 0);
        push(1, 0, q);
        push(0, 1, q);
        push(Rat(q), 1, 0);
        push(0, Rat(q), 1);
        push(Rat(q), 0, 1);
        if (static_cast<int>(out.size()) >= cfg.vector_budget) break;
    }
    // seeded pseudo-random small rationals
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + 12345ULL);
    while (static_cast<int>(out.size()) < cfg.vector_budget) {
        auto small = [&]() { return Rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)); };
        Rat a = small(), b = small(), c = small();
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        push(a, b, c);
    }
    return out;
}

C1Result compute_c1(const MPoly& f, const CandidateVector& a, const Config& cfg) {
    C1Result out;
    MPoly g = gradient_combination(f, a.a);
    out.system = SpaceCurveSystem{f, g};
    if (g.is_constant()) {
        out.vector_rejected = true;
        out.log.push_back("vector " + vec_str(a.a) + ": gradient combination is constant");
        return out;
    }
    std::array<MPoly, 3> partials{f.diff(0), f.diff(1), f.diff(2)};
    CurveAcceptor smooth = [&partials](const CurveParam& p) {
        for (const auto& fx : partials)
            if (!p.substitute_into(fx).is_zero()) return true;
        return false;  // singular locus of the surface: not usable as C1
    };
    SpaceCurveResult r = parametrize_space_curve(out.system, cfg.curve_options(), smooth);
    for (auto& s : r.log) out.log.push_back("C1 " + s);
    if (r.param) out.p1 = r.param->renamed("t1");
    return out;
}

PsiDecomposition psi_decompose(const MPoly& f, const CurveParam& p1) {
    VarSet xt = VarSet::surface_t1();
    Bindings b;
    for (int i = 0; i < 3; ++i) {
        // x_i + p1_i(t1), expressed over (x1,x2,x3,t1)
        RatFn pi = remap_curve_coord(p1.coord(i), xt, 3);
        b.emplace(i, RatFn(MPoly::variable(xt, i)) + pi);
    }
    auto [H, D] = substitute_cleared(f, xt, b);
    PsiCore core = psi_decompose_core(H, 3);
    if (core.psi.is_constant()) {
        // degenerate n=0 split: keep the x-dependence in psi so the
        // coefficient variety V(h_0,...) stays meaningful downstream
        core.psi = core.h_tilde * core.psi;
        core.h_tilde = MPoly::constant(xt, Rat(1));
    }
    PsiDecomposition out;
    out.h_tilde = core.h_tilde;
    out.psi = core.psi;
    out.p_hat = core.p_hat;
    out.den_cleared = D;
    // coefficients of t1^i as polynomials over (x1,x2,x3)
    auto cs = core.psi.coeffs_in(3);
    VarSet xs = VarSet::surface();
    for (const auto& c : cs) {
        MPoly cc(xs);
        for (const auto& [m, co] : c.terms()) {
            Mono mm(3);
            for (int i = 0; i < 3; ++i) mm[i] = m[i];
            cc.add_term(mm, co);
        }
        out.psi_coeffs.push_back(std::move(cc));
    }
    while (!out.psi_coeffs.empty() && out.psi_coeffs.back().is_zero()) out.psi_coeffs.pop_back();
    return out;
}

namespace {

bool vanishes_on_all(const std::vector<MPoly>& polys, const CurveParam& p) {
    for (const auto& q : polys)
        if (!p.substitute_into(q).is_zero()) return false;
    return true;
}

} // namespace

C2Result compute_c2_shortcut(const MPoly& f, const CurveParam& p1, const PsiDecomposition& psi,
                             const Config& cfg) {
    C2Result out;
    int tried = 0;
    for (const auto& [a, b] : shortcut_pairs()) {
        if (tried >= cfg.pair_budget) break;
        Rat s1(a), s2(b);
        auto q1 = p1.eval(s1), q2 = p1.eval(s2);
        if (!q1 || !q2) continue;  // p1 undefined there, pair unusable
        ++tried;
        MPoly g1_raw = shift_poly(f, *q1);
        MPoly g2_raw = shift_poly(f, *q2);
        MPoly G = poly_gcd(g1_raw, g2_raw);
        MPoly g1 = G.is_constant() ? g1_raw : divide_exact(g1_raw, G);
        MPoly g2 = G.is_constant() ? g2_raw : divide_exact(g2_raw, G);
        if (g1.is_constant() || g2.is_constant()) {
            out.log.push_back("pair (" + rat_str(s1) + "," + rat_str(s2) + "): degenerate after gcd removal");
            continue;
        }
        if (g1.normalized() == g2.normalized()) {
            out.log.push_back("pair (" + rat_str(s1) + "," + rat_str(s2) + "): generators associate");
            continue;
        }
        SpaceCurveSystem sys{g1, g2};
        out.system = sys;  // last system tried, kept for evidence
        SpaceCurveResult r = parametrize_space_curve(sys, cfg.curve_options());
        if (!r.param) {
            out.log.push_back("pair (" + rat_str(s1) + "," + rat_str(s2) + "): curve not parametrized");
            continue;
        }
        CurveParam cand = r.param->renamed("t2");
        if (!vanishes_on_all(psi.psi_coeffs, cand)) {
            out.log.push_back("pair (" + rat_str(s1) + "," + rat_str(s2) +
                              "): candidate violates the psi-coefficient variety");
            continue;
        }
        out.p2 = cand;
        out.s1 = s1;
        out.s2 = s2;
        out.system = sys;
        return out;
    }
    out.log.push_back("all sample pairs exhausted");
    return out;
}

C2Result compute_c2_general(const MPoly& f, const CurveParam& p1, const PsiDecomposition& psi,
                            const Config& cfg) {
    C2Result out;
    out.used_shortcut = false;
    const auto& hs = psi.psi_coeffs;
    // two linearly independent coefficients, lowest indices first
    int i0 = -1, i1 = -1;
    for (size_t i = 0; i < hs.size() && i1 < 0; ++i) {
        if (hs[i].is_zero()) continue;
        if (i0 < 0) { i0 = static_cast<int>(i); continue; }
        MPoly cross = hs[i0] * hs[i].leading_coeff() - hs[i] * hs[i0].leading_coeff();
        if (!cross.is_zero()) i1 = static_cast<int>(i);
    }
    if (i1 < 0) {
        out.log.push_back("fewer than two independent psi coefficients");
        return out;
    }
    SpaceCurveSystem sys{hs[i0], hs[i1]};
    out.system = sys;
    SpaceCurveResult r = parametrize_space_curve(sys, cfg.curve_options());
    if (!r.param) {
        out.log.push_back("psi-coefficient curve not parametrized");
        for (auto& s : r.log) out.log.push_back("C2 " + s);
        return out;
    }
    CurveParam cand = r.param->renamed("t2");
    if (!vanishes_on_all(hs, cand)) {
        out.log.push_back("psi-coefficient candidate violates remaining coefficients");
        return out;
    }
    out.p2 = cand;
    out.system = sys;
    return out;
}

std::pair<SurfaceParam, Rat> normalize_standard(const CurveParam& p1, const CurveParam& p2) {
    if (p2.all_constant()) throw std::invalid_argument("normalize_standard: constant p2");
    CurveParam d = p2.derivative();
    for (const Rat& t0 : small_rational_ladder()) {
        auto val = p2.eval(t0);
        if (!val) continue;
        auto dv = d.eval(t0);
        if (!dv) continue;
        if ((*dv)[0] == 0 && (*dv)[1] == 0 && (*dv)[2] == 0) continue;
        CurveParam p2n = (t0 == 0 ? p2 : p2.shifted(t0)) - *val;
        CurveParam p1n = p1 + *val;
        return {SurfaceParam{p1n, p2n}, t0};
    }
    throw std::logic_error("normalize_standard: no usable shift found (p2' should not vanish identically)");
}

bool verify_surface_param(const MPoly& f, const SurfaceParam& sp) {
    VarSet tt{"t1", "t2"};
    Bindings b;
    for (int i = 0; i < 3; ++i) {
        RatFn a = remap_curve_coord(sp.p1.coord(i), tt, 0);
        RatFn c = remap_curve_coord(sp.p2.coord(i), tt, 1);
        b.emplace(i, a + c);
    }
    auto [H, D] = substitute_cleared(f, tt, b);
    if (!H.is_zero()) return false;
    // Jacobian rank 2: some 2x2 minor of (p1'(t1) | p2'(t2)) is nonzero
    CurveParam d1 = sp.p1.derivative(), d2 = sp.p2.derivative();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            RatFn m1 = remap_curve_coord(d1.coord(i), tt, 0) * remap_curve_coord(d2.coord(j), tt, 1);
            RatFn m2 = remap_curve_coord(d1.coord(j), tt, 0) * remap_curve_coord(d2.coord(i), tt, 1);
            if (m1 != m2) return true;
        }
    return false;
}

Classification classify_surface(const MPoly& f, const Config& cfg) {
    Classification out;
    out.tag = SurfaceTag::Undecided;
    if (f.is_constant()) throw std::invalid_argument("classify_surface: constant input");
    if (!is_squarefree(f))
        throw std::invalid_argument("classify_surface: input is not squarefree");

    if (f.total_degree() == 1) {
        SurfaceParam sp = plane_param(f);
        if (!verify_surface_param(f, sp))
            throw std::logic_error("classify_surface: plane parametrization failed verification");
        out.tag = SurfaceTag::Plane;
        out.param = sp;
        out.evidence.push_back("linear polynomial: closed-form plane decomposition");
        return out;
    }
    if (auto dir = cylinder_test(f)) {
        out.tag = SurfaceTag::Cylinder;
        out.direction = *dir;
        out.evidence.push_back("gradient kernel direction " + vec_str(*dir));
        return out;
    }

    for (const CandidateVector& a : candidate_vectors(cfg)) {
        C1Result c1 = compute_c1(f, a, cfg);
        for (auto& s : c1.log) out.evidence.push_back(s);
        if (c1.vector_rejected) continue;
        if (!c1.p1) {
            out.evidence.push_back("vector " + vec_str(a.a) + ": C1 not parametrized");
            continue;
        }
        PsiDecomposition psi = psi_decompose(f, *c1.p1);

        std::vector<C2Result> attempts;
        if (cfg.route == C2Route::Shortcut || cfg.route == C2Route::Both)
            attempts.push_back(compute_c2_shortcut(f, *c1.p1, psi, cfg));
        if (cfg.route == C2Route::General || (cfg.route == C2Route::Both && !attempts.back().p2))
            attempts.push_back(compute_c2_general(f, *c1.p1, psi, cfg));

        for (const C2Result& c2 : attempts) {
            for (const auto& s : c2.log)
                out.evidence.push_back("vector " + vec_str(a.a) + ": " + s);
            if (!c2.p2) continue;
            auto [sp, shift] = normalize_standard(*c1.p1, *c2.p2);
            if (!verify_surface_param(f, sp)) {
                out.evidence.push_back("vector " + vec_str(a.a) + ": verification failed after normalization");
                continue;
            }
            out.tag = SurfaceTag::Translational;
            out.param = sp;
            Certificate cert;
            cert.vector = a;
            cert.s1 = c2.s1;
            cert.s2 = c2.s2;
            cert.shift = shift;
            cert.used_shortcut = c2.used_shortcut;
            cert.c1_defining = c1.system;
            cert.c2_defining = c2.system;
            out.certificate = cert;
            out.evidence.push_back("vector " + vec_str(a.a) + ": verified translational decomposition");
            return out;
        }
        // zero-dimensionality evidence for the last C2 system tried
        if (!attempts.empty() && !attempts.back().system.g1.is_zero()) {
            DimensionEvidence de = dimension_evidence(attempts.back().system, cfg.curve_options());
            if (de.tag == DimensionTag::FiniteEvidence)
                out.evidence.push_back("vector " + vec_str(a.a) + ": C2 system " + de.witness);
        }
    }
    out.evidence.push_back("vector budget exhausted without a verified certificate");
    return out;
}

} // namespace tsurf
