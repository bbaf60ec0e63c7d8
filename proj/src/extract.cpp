#include <algorithm>

#include "tsurf/curve.hpp"
#include "tsurf/upoly.hpp"

namespace tsurf {

namespace {

// truncated bivariate series: coefficient of u^i is a series in w
using USeries = std::vector<UPoly>;

// coefficients of R in u, each converted to dense univariate form in v
std::vector<UPoly> u_coeffs_as_upoly(const MPoly& R, int u, int v) {
    auto cs = R.coeffs_in(u);
    std::vector<UPoly> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        UPoly p(static_cast<size_t>(std::max(cs[i].degree(v), 0)) + 1, Rat(0));
        for (const auto& [m, c] : cs[i].terms()) p[m[v]] += c;
        up::trim(p);
        out[i] = std::move(p);
    }
    return out;
}

// evaluate the u-polynomial with series coefficients at a series argument, mod w^n
UPoly eval_series(const std::vector<UPoly>& coeffs, const UPoly& r, int n) {
    UPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = up::mul_trunc(acc, r, n);
        acc = up::add(acc, up::truncate(*it, n));
    }
    return acc;
}

// integer-primitive normal form of A(v)*u - num(v), for dedupe and output
MPoly factor_from_root(const MPoly& R, int u, int v, const UPoly& num, const UPoly& den) {
    const VarSet& vs = R.vars();
    MPoly A(vs), B(vs);
    for (size_t i = 0; i < den.size(); ++i) {
        if (den[i] == 0) continue;
        Mono m(vs.arity(), 0);
        m[v] = static_cast<int>(i);
        A.add_term(m, den[i]);
    }
    for (size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        Mono m(vs.arity(), 0);
        m[v] = static_cast<int>(i);
        B.add_term(m, num[i]);
    }
    MPoly f = A * MPoly::variable(vs, u) - B;
    // strip the den/num common part and normalize scale
    MPoly g = poly_gcd(A, B);
    if (!g.is_constant() && !g.is_zero()) f = divide_exact(f, g);
    return f.normalized();
}

} // namespace

std::vector<MPoly> linear_in_var_factors(const MPoly& R, int u, int v, const CurveOptions& opts) {
    std::vector<MPoly> out;
    int d = R.degree(u);
    if (d < 1) return out;
    if (d == 1) {
        // already linear in u
        out.push_back(R.normalized());
        return out;
    }
    auto coeffs = u_coeffs_as_upoly(R, u, v);
    int D = 0;
    for (const auto& c : coeffs) D = std::max(D, up::deg(c));
    if (D <= 0) {
        // constant coefficients: roots are plain rationals
        UPoly fiber(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i)
            fiber[i] = coeffs[i].empty() ? Rat(0) : coeffs[i][0];
        up::trim(fiber);
        for (const Rat& r : up::rational_roots(fiber, opts.root_height))
            out.push_back((MPoly::variable(R.vars(), u) - MPoly::constant(R.vars(), r)).normalized());
        return out;
    }
    const int N = 2 * D + 2;

    static const long betas[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11};
    for (long beta_l : betas) {
        Rat beta(beta_l);
        if (up::eval(coeffs.back(), beta) == 0) continue;
        // fiber and its squarefreeness
        UPoly fiber(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) fiber[i] = up::eval(coeffs[i], beta);
        up::trim(fiber);
        if (up::deg(up::gcd(fiber, up::derivative(fiber))) != 0) continue;

        // shifted coefficients: c_i(w + beta)
        std::vector<UPoly> shifted(coeffs.size()), dshifted;
        for (size_t i = 0; i < coeffs.size(); ++i) shifted[i] = up::shift(coeffs[i], beta);
        dshifted.resize(coeffs.size() - 1);
        for (size_t i = 1; i < coeffs.size(); ++i)
            dshifted[i - 1] = up::scale(shifted[i], Rat(static_cast<long>(i)));

        for (const Rat& u0 : up::rational_roots(fiber, opts.root_height)) {
            // Newton lifting of the simple root u0 in Q[[w]]
            UPoly r{u0};
            bool ok = true;
            for (int k = 1; k < N && ok;) {
                k = std::min(2 * k, N);
                UPoly F = eval_series(shifted, r, k);
                UPoly Fp = eval_series(dshifted, r, k);
                if (Fp.empty() || Fp[0] == 0) { ok = false; break; }
                r = up::truncate(up::sub(r, up::mul_trunc(F, up::series_inverse(Fp, k), k)), k);
            }
            if (!ok) continue;
            r.resize(static_cast<size_t>(N), Rat(0));
            auto pr = up::pade(r, N, D, D);
            if (!pr) continue;
            // back to v: w = v - beta
            UPoly num = up::shift(pr->num, -beta);
            UPoly den = up::shift(pr->den, -beta);
            // exact check: sum c_i * num^i * den^(d-i) == 0
            UPoly acc;
            UPoly npow{Rat(1)};
            std::vector<UPoly> dpows(static_cast<size_t>(d) + 1);
            dpows[0] = UPoly{Rat(1)};
            for (int i = 1; i <= d; ++i) dpows[i] = up::mul(dpows[i - 1], den);
            for (int i = 0; i <= d; ++i) {
                if (i > 0) npow = up::mul(npow, num);
                if (static_cast<size_t>(i) < coeffs.size() && !coeffs[i].empty())
                    acc = up::add(acc, up::mul(coeffs[i], up::mul(npow, dpows[d - i])));
            }
            if (!acc.empty()) continue;
            out.push_back(factor_from_root(R, u, v, num, den));
        }
        // first usable expansion point decides: every rational-function root
        // specializes to a rational root of this fiber
        break;
    }

    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.compare(b) < 0;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

UPoly to_upoly_in(const MPoly& p, int var) {
    UPoly u(static_cast<size_t>(std::max(p.degree(var), 0)) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) u[m[var]] += c;
    up::trim(u);
    return u;
}

MPoly eval_at(const MPoly& p, int var, const Rat& e) {
    MPoly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        int k = mm[var];
        mm[var] = 0;
        r.add_term(mm, c * rat_pow(e, k));
    }
    return r;
}

// monic quadratic divisors u^2 + p*u + q of a squarefree rational-coefficient
// fiber polynomial, found through the remainder system of the symbolic
// division (two polynomials in (p,q), eliminated by resultant)
std::vector<std::pair<Rat, Rat>> fiber_quadratic_factors(const UPoly& F, long height) {
    std::vector<std::pair<Rat, Rat>> out;
    int d = up::deg(F);
    if (d < 2) return out;
    VarSet pq{"p", "q"};
    MPoly P = MPoly::variable(pq, 0), Q = MPoly::variable(pq, 1);
    // synthetic division of F by u^2 + p u + q: quotient b_i, remainders
    std::vector<MPoly> b(static_cast<size_t>(d) + 1, MPoly(pq));
    auto cf = [&](int i) {
        return MPoly::constant(pq, i <= d ? F[i] / F[d] : Rat(0));  // monicized
    };
    for (int i = d - 2; i >= 0; --i) {
        MPoly bi = cf(i + 2);
        if (i + 1 <= d - 2) bi -= P * b[i + 1];
        if (i + 2 <= d - 2) bi -= Q * b[i + 2];
        b[i] = bi;
    }
    MPoly rem1 = cf(1) - P * b[0] - (d >= 3 ? Q * b[1] : MPoly(pq));
    MPoly rem0 = cf(0) - Q * b[0];
    if (rem1.is_zero() && rem0.is_zero()) return out;  // degenerate
    std::vector<Rat> p_cands;
    if (rem1.is_zero() || rem1.degree(1) <= 0) {
        // rem1 univariate in p (or zero): roots directly
        if (!rem1.is_zero())
            for (const Rat& r : up::rational_roots(to_upoly_in(rem1, 0), height)) p_cands.push_back(r);
    } else {
        MPoly res = resultant(rem1, rem0, 1);
        if (res.is_zero()) return out;
        for (const Rat& r : up::rational_roots(to_upoly_in(res, 0), height)) p_cands.push_back(r);
    }
    for (const Rat& p0 : p_cands) {
        // instantiate p and solve for q
        UPoly A = to_upoly_in(eval_at(rem1, 0, p0), 1);
        UPoly B = to_upoly_in(eval_at(rem0, 0, p0), 1);
        UPoly g = up::is_zero(A) ? B : (up::is_zero(B) ? A : up::gcd(A, B));
        for (const Rat& q0 : up::rational_roots(g, height)) {
            // confirm by direct division
            UPoly quot, rem = F;
            UPoly divisor{q0, p0, Rat(1)};
            auto [qq, rr] = up::divmod(F, divisor);
            if (up::is_zero(rr)) out.emplace_back(p0, q0);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<MPoly> quadratic_in_var_factors(const MPoly& R, int u, int v,
                                            const CurveOptions& opts) {
    std::vector<MPoly> out;
    int d = R.degree(u);
    if (d < 3) return out;  // degree 2: the whole polynomial is the candidate
    auto coeffs = u_coeffs_as_upoly(R, u, v);
    int D = 0;
    for (const auto& c : coeffs) D = std::max(D, up::deg(c));
    if (D <= 0) return out;
    const int B = 3 * D + 2;   // reconstruction degree bound
    const int N = 2 * B + 2;   // series precision

    static const long betas[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11};
    for (long beta_l : betas) {
        Rat beta(beta_l);
        if (up::eval(coeffs.back(), beta) == 0) continue;
        UPoly fiber(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) fiber[i] = up::eval(coeffs[i], beta);
        up::trim(fiber);
        if (up::deg(up::gcd(fiber, up::derivative(fiber))) != 0) continue;

        // monicized coefficients as series in w = v - beta:
        // hatc_i = c_i(w) * lc(w)^(d-1-i), hatc_d = 1
        UPoly lc = up::shift(coeffs.back(), beta);
        std::vector<UPoly> lcpow{UPoly{Rat(1)}};
        for (int k = 1; k <= d; ++k) lcpow.push_back(up::mul_trunc(lcpow.back(), lc, N));
        USeries hat(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i)
            hat[i] = up::mul_trunc(up::shift(coeffs[i], beta), lcpow[d - 1 - i], N);
        hat[d] = UPoly{Rat(1)};

        UPoly monic_fiber(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) monic_fiber[i] = hat[i].empty() ? Rat(0) : hat[i][0];
        up::trim(monic_fiber);

        for (auto [p0, q0] : fiber_quadratic_factors(monic_fiber, opts.root_height)) {
            // Hensel: lift Q = u^2 + p u + q, S = cofactor, to precision N
            UPoly q_start{q0, p0, Rat(1)};
            auto [s_start, rem] = up::divmod(monic_fiber, q_start);
            if (!up::is_zero(rem)) continue;
            // Bezout a*q_start + b*s_start = 1 over Q[u]
            UPoly a, bz;
            {
                UPoly r0 = q_start, r1 = s_start;
                UPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
                while (!up::is_zero(r1)) {
                    auto [qd, rr] = up::divmod(r0, r1);
                    r0 = std::exchange(r1, rr);
                    UPoly ns = up::sub(s0, up::mul(qd, s1));
                    s0 = std::exchange(s1, ns);
                    UPoly nt = up::sub(t0, up::mul(qd, t1));
                    t0 = std::exchange(t1, nt);
                }
                if (up::deg(r0) != 0) continue;  // fiber factors not coprime
                Rat inv = Rat(1) / r0[0];
                a = up::scale(s0, inv);
                bz = up::scale(t0, inv);
            }
            // series coefficients of Q (deg 2, monic) and S (deg d-2, monic)
            USeries Qs(3), Ss(static_cast<size_t>(d) - 1);
            Qs[0] = UPoly{q0};
            Qs[1] = UPoly{p0};
            Qs[2] = UPoly{Rat(1)};
            for (int i = 0; i <= d - 2; ++i)
                Ss[i] = (i <= up::deg(s_start) && s_start[i] != 0) ? UPoly{s_start[i]} : UPoly{};
            for (int k = 1; k < N; ++k) {
                // E_k = coefficient of w^k in hat - Q*S, a u-polynomial
                UPoly Ek(static_cast<size_t>(d) + 1, Rat(0));
                for (int i = 0; i <= d; ++i) {
                    Rat acc = (k <= up::deg(hat[i])) ? hat[i][k] : Rat(0);
                    for (int iq = 0; iq <= 2 && iq <= i; ++iq) {
                        int is = i - iq;
                        if (is > d - 2) continue;
                        // sum over w-split of Q_iq * S_is at order k
                        const UPoly& qs = Qs[iq];
                        const UPoly& ss = Ss[is];
                        for (int kq = 0; kq <= k && kq <= up::deg(qs); ++kq) {
                            int ks = k - kq;
                            if (ks <= up::deg(ss)) acc -= qs[kq] * ss[ks];
                        }
                    }
                    Ek[i] = acc;
                }
                up::trim(Ek);
                if (up::is_zero(Ek)) continue;
                // solve dQ*s0 + dS*q0 = Ek with deg dQ <= 1
                auto [junk, bE] = up::divmod(up::mul(bz, Ek), q_start);
                UPoly dQ = bE;  // deg <= 1
                UPoly num = up::sub(Ek, up::mul(s_start, dQ));
                auto [dS, r2] = up::divmod(num, q_start);
                if (!up::is_zero(r2)) { dQ.clear(); dS.clear(); }
                for (int i = 0; i <= 1; ++i) {
                    Rat cdq = (i <= up::deg(dQ)) ? dQ[i] : Rat(0);
                    if (cdq == 0) continue;
                    if (static_cast<int>(Qs[i].size()) <= k) Qs[i].resize(static_cast<size_t>(k) + 1, Rat(0));
                    Qs[i][k] = cdq;
                }
                for (int i = 0; i <= d - 2; ++i) {
                    Rat cds = (i <= up::deg(dS)) ? dS[i] : Rat(0);
                    if (cds == 0) continue;
                    if (static_cast<int>(Ss[i].size()) <= k) Ss[i].resize(static_cast<size_t>(k) + 1, Rat(0));
                    Ss[i][k] = cds;
                }
            }
            // reconstruct the two non-monic coefficients as rational functions
            UPoly bseries = Qs[1], cseries = Qs[0];
            bseries.resize(static_cast<size_t>(N), Rat(0));
            cseries.resize(static_cast<size_t>(N), Rat(0));
            auto pb = up::pade(bseries, N, B, B);
            auto pc = up::pade(cseries, N, B, B);
            if (!pb || !pc) continue;
            // back to v and undo the monicization: factor candidate is
            // lc^2 u^2 + lc * b * u + c, denominators cleared
            const VarSet& vs = R.vars();
            auto upoly_to_mpoly = [&](const UPoly& pp) {
                MPoly m(vs);
                for (size_t i = 0; i < pp.size(); ++i) {
                    if (pp[i] == 0) continue;
                    Mono mo(vs.arity(), 0);
                    mo[v] = static_cast<int>(i);
                    m.add_term(mo, pp[i]);
                }
                return m;
            };
            MPoly bn = upoly_to_mpoly(up::shift(pb->num, -beta));
            MPoly bd = upoly_to_mpoly(up::shift(pb->den, -beta));
            MPoly cn = upoly_to_mpoly(up::shift(pc->num, -beta));
            MPoly cd = upoly_to_mpoly(up::shift(pc->den, -beta));
            MPoly lcv = upoly_to_mpoly(coeffs.back());
            MPoly uu = MPoly::variable(vs, u);
            MPoly cand = lcv * lcv * bd * cd * uu * uu + lcv * bn * cd * uu + cn * bd;
            if (cand.is_zero()) continue;
            // strip the content in v and normalize
            MPoly cont = single_var_content(cand, v);
            if (!cont.is_constant() && !cont.is_zero()) cand = divide_exact(cand, cont);
            cand = cand.normalized();
            if (cand.degree(u) != 2) continue;
            if (!try_divide(R, cand)) continue;
            if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        }
        break;  // first usable expansion point decides
    }
    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.compare(b) < 0;
    });
    return out;
}

} // namespace tsurf
