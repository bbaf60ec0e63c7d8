#include "tsurf/genlab.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "tsurf/render.hpp"

namespace tsurf {

namespace {

const VarSet& xvars() {
    static const VarSet vs = VarSet::surface();
    return vs;
}

// x1,x2,x3,t1,t2
const VarSet& wvars() {
    static const VarSet vs{"x1", "x2", "x3", "t1", "t2"};
    return vs;
}

MPoly to_xvars(const MPoly& p) {
    MPoly r(xvars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm(3);
        for (int i = 0; i < 3; ++i) mm[i] = m[i];
        if (m.size() > 3)
            for (size_t i = 3; i < m.size(); ++i)
                if (m[i] != 0) throw std::logic_error("to_xvars: parameter still present");
        r.add_term(mm, c);
    }
    return r;
}

// split a polynomial into content/primitive pieces per variable, repeatedly
std::vector<MPoly> content_split(const MPoly& p) {
    std::vector<MPoly> work{p}, done;
    while (!work.empty()) {
        MPoly cur = work.back();
        work.pop_back();
        bool split = false;
        for (int v = 0; v < cur.vars().arity() && !split; ++v) {
            if (cur.degree(v) <= 0) continue;
            auto [cont, prim] = content_primitive(cur, v);
            if (!cont.is_constant()) {
                work.push_back(cont);
                work.push_back(prim);
                split = true;
            }
        }
        if (!split) done.push_back(cur.normalized());
    }
    std::sort(done.begin(), done.end(),
              [](const MPoly& a, const MPoly& b) { return a.compare(b) < 0; });
    done.erase(std::unique(done.begin(), done.end()), done.end());
    return done;
}

std::vector<std::pair<Rat, Rat>> sample_params(const SurfaceParam& sp, size_t want) {
    std::vector<std::pair<Rat, Rat>> out;
    static const long vals[] = {1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, 7, -7, 8, 9};
    for (long a : vals) {
        for (long b : vals) {
            if (out.size() >= want) return out;
            Rat t1(a), t2v(b + (a % 2));  // skew to avoid symmetric alignments
            if (!sp.p1.eval(t1) || !sp.p2.eval(t2v)) continue;
            out.emplace_back(t1, t2v);
        }
    }
    return out;
}

} // namespace

ImplicitizeResult implicitize(const SurfaceParam& sp, int degree_budget) {
    ImplicitizeResult out;
    // surface check, same minor criterion as verify_surface_param
    {
        CurveParam d1 = sp.p1.derivative(), d2 = sp.p2.derivative();
        bool rank2 = false;
        VarSet tt{"t1", "t2"};
        for (int i = 0; i < 3 && !rank2; ++i)
            for (int j = i + 1; j < 3 && !rank2; ++j) {
                RatFn m1 = remap_curve_coord(d1.coord(i), tt, 0) * remap_curve_coord(d2.coord(j), tt, 1);
                RatFn m2 = remap_curve_coord(d1.coord(j), tt, 0) * remap_curve_coord(d2.coord(i), tt, 1);
                if (m1 != m2) rank2 = true;
            }
        if (!rank2) {
            out.fail = ImplicitizeFail::NotASurface;
            out.log.push_back("Jacobian rank below 2: the sum does not sweep a surface");
            return out;
        }
    }

    const VarSet& W = wvars();
    // N_i = x_i*d1_i*d2_i - n1_i*d2_i - n2_i*d1_i over (x,t1,t2)
    std::vector<MPoly> N;
    for (int i = 0; i < 3; ++i) {
        RatFn a = remap_curve_coord(sp.p1.coord(i), W, 3);
        RatFn b = remap_curve_coord(sp.p2.coord(i), W, 4);
        MPoly xi = MPoly::variable(W, i);
        N.push_back(xi * (a.den() * b.den()) - a.num() * b.den() - b.num() * a.den());
    }

    // after eliminating one parameter, factors that involve only the other
    // parameter cannot be part of the implicit equation, and shared ones
    // would null the next resultant
    auto cleanup = [](MPoly r, int pv) {
        r = squarefree_part(r);
        MPoly c = single_var_content(r, pv);
        if (!c.is_constant()) r = divide_exact(r, c);
        return r;
    };

    auto elim_var = [&](std::vector<MPoly> polys, int v, int keep_pv,
                        int budget) -> std::optional<std::vector<MPoly>> {
        std::vector<MPoly> dep, free_of;
        for (auto& p : polys)
            (p.degree(v) > 0 ? dep : free_of).push_back(p);
        if (dep.size() < 2) {
            if (dep.empty()) return free_of;
            return std::nullopt;  // cannot eliminate from a single dependent equation
        }
        std::vector<MPoly> outp = free_of;
        for (size_t k = 1; k < dep.size(); ++k) {
            MPoly r = resultant(dep[0], dep[k], v);
            if (r.is_zero()) return std::nullopt;
            if (r.total_degree() > budget) return std::nullopt;
            outp.push_back(cleanup(r, keep_pv));
        }
        if (dep.size() >= 3) {
            MPoly r = resultant(dep[1], dep[2], v);
            if (!r.is_zero() && r.total_degree() <= budget) outp.push_back(cleanup(r, keep_pv));
        }
        return outp;
    };

    auto stage1 = elim_var(N, 3, 4, degree_budget);
    if (!stage1 || stage1->size() < 2) {
        out.fail = ImplicitizeFail::BudgetExceeded;
        out.log.push_back("t1 elimination failed or exceeded the degree budget");
        return out;
    }
    // t2 stage: build up to two eliminants from distinct pairings
    std::vector<MPoly> dep;
    for (auto& p : *stage1)
        if (p.degree(4) > 0) dep.push_back(p);
    std::vector<MPoly> elims;
    for (auto& p : *stage1)
        if (p.degree(4) == 0 && !p.is_constant()) elims.push_back(p);
    auto add_elim = [&](MPoly a, MPoly b) {
        if (elims.size() >= 2) return;
        MPoly g = poly_gcd(a, b);
        if (!g.is_constant()) {
            // shared junk factor (typically from a common denominator)
            a = divide_exact(a, g);
            b = divide_exact(b, g);
            if (a.degree(4) <= 0 || b.degree(4) <= 0) return;
        }
        MPoly r = resultant(a, b, 4);
        if (r.is_zero() || r.is_constant()) return;
        if (r.total_degree() > 3 * degree_budget) return;
        elims.push_back(squarefree_part(r));
    };
    for (size_t i = 0; i < dep.size() && elims.size() < 2; ++i)
        for (size_t j = i + 1; j < dep.size() && elims.size() < 2; ++j) add_elim(dep[i], dep[j]);
    if (elims.empty()) {
        out.fail = ImplicitizeFail::BudgetExceeded;
        out.log.push_back("t2 elimination produced no usable eliminant");
        return out;
    }

    MPoly C = to_xvars(elims[0]);
    if (elims.size() > 1) {
        MPoly g = poly_gcd(C, to_xvars(elims[1]));
        if (!g.is_constant()) C = g;
    }
    C = squarefree_part(C);

    // factor selection: sample points of the parametrization
    auto samples = sample_params(sp, 12);
    if (samples.size() < 12) {
        out.fail = ImplicitizeFail::BudgetExceeded;
        out.log.push_back("not enough sample points with defined denominators");
        return out;
    }
    std::vector<std::array<Rat, 3>> pts;
    for (auto& [t1v, t2v] : samples) {
        auto a = sp.p1.eval(t1v), b = sp.p2.eval(t2v);
        pts.push_back({(*a)[0] + (*b)[0], (*a)[1] + (*b)[1], (*a)[2] + (*b)[2]});
    }

    std::vector<MPoly> survivors;
    for (const MPoly& fac : content_split(C)) {
        if (fac.is_constant()) continue;
        bool all_zero = true;
        for (const auto& p : pts)
            if (fac.eval({p[0], p[1], p[2]}) != 0) { all_zero = false; break; }
        if (!all_zero) continue;
        survivors.push_back(fac);
    }
    if (survivors.size() != 1) {
        out.fail = ImplicitizeFail::AmbiguousFactor;
        out.log.push_back(std::to_string(survivors.size()) +
                          " factors vanish on the sampled points; refusing to guess");
        return out;
    }
    MPoly f = survivors[0].normalized();
    // exact identity f(p1(t1)+p2(t2)) == 0
    if (!verify_surface_param(f, sp)) {
        out.fail = ImplicitizeFail::AmbiguousFactor;
        out.log.push_back("surviving factor does not vanish identically on the parametrization");
        return out;
    }
    out.f = f;
    return out;
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed ^ 0xd1b54a32d192ed03ULL) {}
    long pick(long lo, long hi) {  // inclusive, platform-stable
        return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
    }
    Rat coeff(long h) {  // nonzero coefficient in [-h, h]
        long v = 0;
        while (v == 0) v = pick(-h, h);
        return Rat(v);
    }
};

// derivative-at-zero patterns matched to the candidate-vector stream
const std::vector<std::pair<Rat, Rat>>& p2_patterns() {
    static const std::vector<std::pair<Rat, Rat>> pats = {
        {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)},
        {Rat(2), Rat(0)}, {Rat(0), Rat(2)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)},
    };
    return pats;
}

// random dense polynomial c1*t + ... + cd*t^d with c1 fixed, no constant term
MPoly graph_poly(Rng& rng, const VarSet& vs, int deg, long height, const Rat& c1) {
    MPoly t = MPoly::variable(vs, 0);
    MPoly p = t * c1;
    for (int k = 2; k <= deg; ++k) {
        Rat c = (k == deg) ? rng.coeff(height) : Rat(rng.pick(-height, height));
        p += t.pow(k) * c;
    }
    return p;
}

CurveParam make_p2(Rng& rng, Family fam, const InstanceSpec& spec) {
    VarSet vs = VarSet::single("t2");
    MPoly t = MPoly::variable(vs, 0);
    auto [c1, d1] = p2_patterns()[rng.pick(0, static_cast<long>(p2_patterns().size()) - 1)];
    int degC = static_cast<int>(rng.pick(2, spec.degree_bound));
    int degD = static_cast<int>(rng.pick(2, spec.degree_bound));
    switch (fam) {
        case Family::Monomial: {
            // (t2, sigma*t2^a, tau*t2^b): derivative at 0 is (1, 0, 0)
            int a = static_cast<int>(rng.pick(2, spec.degree_bound));
            int b = static_cast<int>(rng.pick(2, spec.degree_bound));
            return CurveParam({RatFn(t), RatFn(t.pow(a) * rng.coeff(spec.coeff_height)),
                               RatFn(t.pow(b) * rng.coeff(spec.coeff_height))},
                              "t2");
        }
        case Family::RationalGraph: {
            // (t2, C(t2), D(t2)/(t2-c)^k), all vanishing at 0, derivative pattern kept
            long c = rng.pick(1, 3) * (rng.pick(0, 1) ? 1 : -1);
            int k = 1;
            MPoly den = (t - MPoly::constant(vs, Rat(c)));
            Rat scale = d1 * rat_pow(Rat(-c), k);
            MPoly Dnum = graph_poly(rng, vs, degD, spec.coeff_height, scale);
            return CurveParam({RatFn(t), RatFn(graph_poly(rng, vs, degC, spec.coeff_height, c1)),
                               RatFn(Dnum, den.pow(k))},
                              "t2");
        }
        default:
            return CurveParam({RatFn(t), RatFn(graph_poly(rng, vs, degC, spec.coeff_height, c1)),
                               RatFn(graph_poly(rng, vs, degD, spec.coeff_height, d1))},
                              "t2");
    }
}

CurveParam make_p1(Rng& rng, Family fam, const InstanceSpec& spec) {
    VarSet vs = VarSet::single("t1");
    MPoly t = MPoly::variable(vs, 0);
    int degA = static_cast<int>(rng.pick(2, spec.degree_bound));
    int degB = static_cast<int>(rng.pick(2, spec.degree_bound));
    switch (fam) {
        case Family::Monomial: {
            int a = static_cast<int>(rng.pick(2, spec.degree_bound));
            int b = static_cast<int>(rng.pick(2, spec.degree_bound));
            return CurveParam({RatFn(t.pow(a) * rng.coeff(spec.coeff_height)),
                               RatFn(t.pow(b) * rng.coeff(spec.coeff_height)), RatFn(t)},
                              "t1");
        }
        case Family::RationalGraph: {
            int j = static_cast<int>(rng.pick(1, 2));
            MPoly Anum(vs);
            for (int k = 0; k <= degA; ++k) {
                Rat c = (k == 0 || k == degA) ? rng.coeff(spec.coeff_height)
                                              : Rat(rng.pick(-spec.coeff_height, spec.coeff_height));
                Anum += t.pow(k) * c;
            }
            MPoly B = graph_poly(rng, vs, degB, spec.coeff_height, Rat(rng.pick(-2, 2)));
            return CurveParam({RatFn(t), RatFn(Anum, t.pow(j)), RatFn(B)}, "t1");
        }
        case Family::ConicBased: {
            // scaled circle in a tilted plane: (r(1-s^2)/(1+s^2), 2rs/(1+s^2), a*x+b*y+c)
            Rat r = Rat(rng.pick(1, 4));
            MPoly one = MPoly::constant(vs, Rat(1));
            RatFn cx(one * r - t.pow(2) * r, one + t.pow(2));
            RatFn cy(t * (2 * r), one + t.pow(2));
            Rat a(rng.pick(-2, 2)), b(rng.pick(-2, 2)), c(rng.pick(-2, 2));
            RatFn cz = cx * RatFn::constant(vs, a) + cy * RatFn::constant(vs, b) +
                       RatFn::constant(vs, c);
            return CurveParam({cx, cy, cz}, "t1");
        }
        default:
            return CurveParam({RatFn(t),
                               RatFn(graph_poly(rng, vs, degA, spec.coeff_height,
                                                Rat(rng.pick(-spec.coeff_height, spec.coeff_height)))),
                               RatFn(graph_poly(rng, vs, degB, spec.coeff_height,
                                                Rat(rng.pick(-spec.coeff_height, spec.coeff_height))))},
                              "t1");
    }
}

} // namespace

std::optional<Instance> random_instance(const InstanceSpec& spec) {
    if (spec.degree_bound < 2)
        throw std::invalid_argument("random_instance: degree bound below 2 would generate lines");
    for (int attempt = 0; attempt < 24; ++attempt) {
        unsigned long seed = spec.seed + 1000003UL * static_cast<unsigned long>(attempt);
        Rng rng(seed);
        CurveParam p1 = make_p1(rng, spec.family, spec);
        CurveParam p2 = make_p2(rng, spec.p2_family, spec);
        if (is_line(p1) || is_line(p2)) continue;
        SurfaceParam sp{p1, p2};
        ImplicitizeResult imp = implicitize(sp, spec.elim_degree_budget);
        if (!imp.f) continue;
        const MPoly& f = *imp.f;
        if (f.total_degree() < 2) continue;
        if (!is_squarefree(f)) continue;
        if (cylinder_test(f)) continue;
        if (!verify_surface_param(f, sp)) continue;
        return Instance{f, sp, seed};
    }
    return std::nullopt;
}

RoundtripReport roundtrip_check(const InstanceSpec& base, int count, const Config& cfg) {
    RoundtripReport rep;
    rep.count = count;
    auto t0 = std::chrono::steady_clock::now();
    // rotate P1/P2 family combinations deterministically across instances
    static const std::pair<Family, Family> schedule[] = {
        {Family::PolynomialGraph, Family::PolynomialGraph},
        {Family::Monomial, Family::PolynomialGraph},
        {Family::PolynomialGraph, Family::Monomial},
        {Family::RationalGraph, Family::PolynomialGraph},
        {Family::PolynomialGraph, Family::RationalGraph},
        {Family::ConicBased, Family::PolynomialGraph},
    };
    for (int i = 0; i < count; ++i) {
        InstanceSpec spec = base;
        spec.seed = base.seed + 7919UL * static_cast<unsigned long>(i);
        auto [f1, f2] = schedule[i % (sizeof(schedule) / sizeof(schedule[0]))];
        spec.family = f1;
        spec.p2_family = f2;
        auto inst = random_instance(spec);
        if (!inst) {
            rep.failing_seeds.push_back(spec.seed);
            rep.notes.push_back("seed " + std::to_string(spec.seed) + ": no usable instance drawn");
            continue;
        }
        Classification cls = classify_surface(inst->f, cfg);
        bool ok = cls.tag == SurfaceTag::Translational && cls.param &&
                  verify_surface_param(inst->f, *cls.param);
        if (ok) {
            ++rep.passes;
        } else {
            rep.failing_seeds.push_back(spec.seed);
            rep.notes.push_back("seed " + std::to_string(spec.seed) + ": classification " +
                                surface_tag_name(cls.tag));
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace tsurf
