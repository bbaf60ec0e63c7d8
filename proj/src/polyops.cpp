#include "tsurf/polyops.hpp"

#include <algorithm>
#include <map>

#include "tsurf/upoly.hpp"

namespace tsurf {

namespace {

// multivariate long division by a single divisor under grlex; remainder
// nonzero means "not divisible" for our callers
std::optional<MPoly> divide_impl(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) return std::nullopt;
    const VarSet& vs = p.vars();
    const int n = vs.arity();
    MPoly rem = p, quot(vs);
    const Mono& qm = q.leading_mono();
    const Rat& qc = q.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        Mono d(n);
        bool div = true;
        for (int i = 0; i < n; ++i) {
            d[i] = rm[i] - qm[i];
            if (d[i] < 0) { div = false; break; }
        }
        if (!div) return std::nullopt;  // leading term not divisible: no exact quotient
        Rat c = rem.leading_coeff() / qc;
        MPoly t = MPoly::monomial(vs, d, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

// dense view in one variable: cs[k] = coefficient of v^k (never trailing zero)
struct VPoly {
    std::vector<MPoly> cs;
    int deg() const { return static_cast<int>(cs.size()) - 1; }
    bool zero() const { return cs.empty(); }
    const MPoly& lc() const { return cs.back(); }
    void trim() {
        while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    }
};

VPoly vview(const MPoly& p, int v) {
    VPoly r;
    r.cs = p.coeffs_in(v);
    r.trim();
    return r;
}

MPoly vcollapse(const VPoly& p, const VarSet& vs, int v) {
    return MPoly::from_coeffs_in(vs, v, p.cs);
}

VPoly vmul_coeff(const VPoly& p, const MPoly& c) {
    VPoly r;
    r.cs.reserve(p.cs.size());
    for (const auto& x : p.cs) r.cs.push_back(x * c);
    r.trim();
    return r;
}

VPoly vdiv_coeff(const VPoly& p, const MPoly& c) {
    VPoly r;
    r.cs.reserve(p.cs.size());
    for (const auto& x : p.cs) r.cs.push_back(divide_exact(x, c));
    r.trim();
    return r;
}

VPoly vsub(const VPoly& a, const VPoly& b) {
    VPoly r;
    size_t n = std::max(a.cs.size(), b.cs.size());
    if (n == 0) return r;
    const VarSet& vs = (a.cs.empty() ? b.cs : a.cs).front().vars();
    r.cs.assign(n, MPoly(vs));
    for (size_t i = 0; i < a.cs.size(); ++i) r.cs[i] += a.cs[i];
    for (size_t i = 0; i < b.cs.size(); ++i) r.cs[i] -= b.cs[i];
    r.trim();
    return r;
}

// shift by v^k and scale: r = p * c * v^k
VPoly vshift_scale(const VPoly& p, int k, const MPoly& c) {
    VPoly r;
    if (p.zero()) return r;
    const VarSet& vs = p.cs.front().vars();
    r.cs.assign(p.cs.size() + static_cast<size_t>(k), MPoly(vs));
    for (size_t i = 0; i < p.cs.size(); ++i) r.cs[i + k] = p.cs[i] * c;
    r.trim();
    return r;
}

// pseudo-remainder: lc(B)^(degA-degB+1) * A  mod  B, computed densely in v
VPoly vprem(VPoly A, const VPoly& B) {
    int delta = A.deg() - B.deg();
    if (delta < 0) return A;
    const MPoly& b = B.lc();
    int steps = 0;
    while (!A.zero() && A.deg() >= B.deg()) {
        MPoly a = A.lc();
        int k = A.deg() - B.deg();
        A = vsub(vmul_coeff(A, b), vshift_scale(B, k, a));
        ++steps;
    }
    // keep the exact lc(B)^(delta+1) scaling contract
    for (; steps < delta + 1; ++steps) A = vmul_coeff(A, b);
    return A;
}

// rescale to integer coefficients with trivial integer content and positive
// leading coefficient; a unit multiple, used to keep PRS steps small
MPoly int_primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    Int l(1), g(0);
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        Int n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (p.leading_coeff() < 0) scale = -scale;
    return p * scale;
}

// gcd of the list of v-coefficients of p (the content as defined here)
MPoly coeff_gcd(const std::vector<MPoly>& cs, const VarSet& vs) {
    MPoly g(vs);
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

} // namespace

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
    if (p.vars() != q.vars()) throw VarMismatch("try_divide: mismatched VarSet");
    if (p.is_zero()) return MPoly::zero(p.vars());
    return divide_impl(p, q);
}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw std::domain_error("divide_exact: not divisible");
    return *r;
}

namespace {

UPoly to_upoly(const MPoly& p, int v) {
    UPoly u(static_cast<size_t>(std::max(p.degree(v), 0)) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) u[m[v]] += c;
    up::trim(u);
    return u;
}

MPoly from_upoly(const VarSet& vs, const UPoly& u, int v) {
    MPoly r(vs);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Mono m(vs.arity(), 0);
        m[v] = static_cast<int>(i);
        r.add_term(m, u[i]);
    }
    return r;
}

MPoly eval_var(const MPoly& p, int v, const Rat& e) {
    MPoly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        int k = mm[v];
        mm[v] = 0;
        r.add_term(mm, c * rat_pow(e, k));
    }
    return r;
}

// terms grouped by the monomial with v zeroed; each group is univariate in v
std::map<Mono, UPoly, GrlexLess> vblock_groups(const MPoly& p, int v) {
    std::map<Mono, UPoly, GrlexLess> groups;
    for (const auto& [m, c] : p.terms()) {
        Mono key = m;
        int k = key[v];
        key[v] = 0;
        UPoly& u = groups[key];
        if (static_cast<int>(u.size()) <= k) u.resize(static_cast<size_t>(k) + 1, Rat(0));
        u[k] += c;
    }
    for (auto& [k, u] : groups) up::trim(u);
    return groups;
}

// content of p w.r.t. the block of all variables except v (univariate in v)
UPoly vblock_content(const MPoly& p, int v) {
    UPoly g;
    for (const auto& [k, u] : vblock_groups(p, v)) {
        g = up::gcd(g, u);
        if (up::deg(g) == 0) break;
    }
    return g;
}

// coefficient (as UPoly in v) of the grlex-greatest monomial in the other variables
UPoly vblock_lead(const MPoly& p, int v) {
    auto groups = vblock_groups(p, v);
    return groups.empty() ? UPoly{} : groups.rbegin()->second;
}

MPoly newton_interpolate(const VarSet& vs, int y, const std::vector<Rat>& es,
                         const std::vector<MPoly>& vals) {
    // divided differences with MPoly values (y-free)
    std::vector<MPoly> coef = vals;
    size_t n = es.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (es[i] - es[i - j]);
            if (i == j) break;
        }
    // horner on (y - e_i)
    MPoly yv = MPoly::variable(vs, y);
    MPoly acc(vs);
    for (size_t i = n; i-- > 0;) {
        acc = acc * (yv - MPoly::constant(vs, es[i])) + coef[i];
    }
    return acc;
}

MPoly poly_gcd_prs(const MPoly& p, const MPoly& q);

// Brown-style evaluation/interpolation gcd over Q; exact because the
// interpolated candidate is accepted only after dividing both inputs
std::optional<MPoly> gcd_eval_interp(const MPoly& p, const MPoly& q) {
    const VarSet& vs = p.vars();
    std::vector<int> present;
    for (int i = 0; i < vs.arity(); ++i)
        if (p.degree(i) > 0 || q.degree(i) > 0) present.push_back(i);
    if (present.size() == 1) {
        int v = present[0];
        return from_upoly(vs, up::gcd(to_upoly(p, v), to_upoly(q, v)), v);
    }
    int y = present.back();
    // a y-free divisor must divide every y-power coefficient of the other side
    if (p.degree(y) == 0) return poly_gcd(p, content_primitive(q, y).first);
    if (q.degree(y) == 0) return poly_gcd(content_primitive(p, y).first, q);

    UPoly cp = vblock_content(p, y), cq = vblock_content(q, y);
    MPoly P = p, Q = q;
    if (up::deg(cp) > 0) P = divide_exact(p, from_upoly(vs, cp, y));
    if (up::deg(cq) > 0) Q = divide_exact(q, from_upoly(vs, cq, y));
    MPoly c = from_upoly(vs, up::gcd(cp, cq), y);

    UPoly leadP = vblock_lead(P, y), leadQ = vblock_lead(Q, y);
    UPoly lhat = up::gcd(leadP, leadQ);
    int D = std::min(P.degree(y), Q.degree(y)) + up::deg(lhat);

    std::vector<Rat> es;
    std::vector<MPoly> gs;
    Mono best_lead;
    bool have_best = false;
    int spoiled = 0;
    for (long e_i = 0; e_i < 120; ++e_i) {
        long mag = (e_i + 1) / 2;
        Rat e((e_i & 1) ? mag : -mag);
        if (up::eval(leadP, e) == 0 || up::eval(leadQ, e) == 0) continue;
        MPoly ge = poly_gcd(eval_var(P, y, e), eval_var(Q, y, e));
        if (ge.is_constant()) return (c).normalized();  // primitive parts are coprime
        const Mono& lead = ge.leading_mono();
        GrlexLess less;
        if (!have_best || less(lead, best_lead)) {
            best_lead = lead;
            have_best = true;
            es.clear();
            gs.clear();
        } else if (less(best_lead, lead)) {
            continue;  // unlucky point, gcd too big
        }
        es.push_back(e);
        gs.push_back(ge.normalized() * up::eval(lhat, e));
        if (static_cast<int>(es.size()) >= D + 1) {
            MPoly cand = newton_interpolate(vs, y, es, gs);
            if (!cand.is_zero()) {
                UPoly cc = vblock_content(cand, y);
                if (up::deg(cc) > 0 || (up::deg(cc) == 0 && !cc.empty() && cc[0] != 1))
                    cand = divide_exact(cand, from_upoly(vs, cc, y));
                if (try_divide(P, cand) && try_divide(Q, cand))
                    return (c * cand).normalized();
            }
            if (++spoiled > 3) return std::nullopt;  // let the PRS handle it
            // extend with more points and retry
            D += 1;
        }
    }
    return std::nullopt;
}

} // namespace

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
    if (p.vars() != q.vars()) throw VarMismatch("poly_gcd: mismatched VarSet");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    if (p.is_constant() || q.is_constant())
        return MPoly::constant(p.vars(), Rat(1));
    if (auto g = gcd_eval_interp(p, q)) return g->normalized();
    return poly_gcd_prs(p, q);
}

namespace {

MPoly poly_gcd_prs(const MPoly& p, const MPoly& q) {
    // main variable: first one either depends on
    int v = -1;
    for (int i = 0; i < p.vars().arity(); ++i)
        if (p.degree(i) > 0 || q.degree(i) > 0) { v = i; break; }

    auto [cp, pp] = content_primitive(p, v);
    auto [cq, pq] = content_primitive(q, v);
    MPoly cont = poly_gcd(cp, cq);

    // primitive PRS in v
    VPoly A = vview(int_primitive(pp), v), B = vview(int_primitive(pq), v);
    if (A.deg() < B.deg()) std::swap(A, B);
    while (!B.zero() && B.deg() > 0) {
        VPoly R = vprem(A, B);
        A = B;
        if (R.zero()) {
            B = R;
            break;
        }
        MPoly r = vcollapse(R, p.vars(), v);
        auto [cr, pr] = content_primitive(r, v);
        B = vview(int_primitive(pr), v);
    }
    MPoly g;
    if (B.zero()) {
        g = vcollapse(A, p.vars(), v);
        g = content_primitive(g, v).second;
    } else {
        // last remainder has degree 0 in v: primitive parts are coprime
        g = MPoly::constant(p.vars(), Rat(1));
    }
    return (cont * g).normalized();
}

} // namespace

std::pair<MPoly, MPoly> content_primitive(const MPoly& p, int v) {
    if (p.is_zero()) return {p, p};
    auto cs = p.coeffs_in(v);
    MPoly cont = coeff_gcd(cs, p.vars());
    MPoly prim = divide_exact(p, cont);  // content is lc-1 normalized, divides every coefficient
    return {cont, prim};
}

MPoly single_var_content(const MPoly& p, int v) {
    if (p.is_zero()) return p;
    return from_upoly(p.vars(), vblock_content(p, v), v);
}

MPoly resultant(const MPoly& p, const MPoly& q, int v) {
    if (p.vars() != q.vars()) throw VarMismatch("resultant: mismatched VarSet");
    if (v < 0 || v >= p.vars().arity()) throw std::out_of_range("resultant: variable index");
    int dp = p.degree(v), dq = q.degree(v);
    if (dp <= 0 && dq <= 0)
        throw std::domain_error("resultant: both arguments constant in the variable");
    if (p.is_zero() || q.is_zero()) return MPoly::zero(p.vars());
    if (dp <= 0) return p.pow(dq);
    if (dq <= 0) return q.pow(dp);

    VPoly A = vview(p, v), B = vview(q, v);
    bool negate = false;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) negate = !negate;
        std::swap(A, B);
    }
    if (B.deg() == 1) {
        // res(A, b1*v + b0) = (-1)^degA * sum a_k (-b0)^k b1^(degA-k)
        const MPoly &b0 = B.cs[0], &b1 = B.cs[1];
        int da = A.deg();
        MPoly acc(p.vars());
        MPoly mb0 = -b0;
        std::vector<MPoly> npow{MPoly::constant(p.vars(), Rat(1))};
        for (int k = 1; k <= da; ++k) npow.push_back(npow.back() * mb0);
        std::vector<MPoly> dpow{MPoly::constant(p.vars(), Rat(1))};
        for (int k = 1; k <= da; ++k) dpow.push_back(dpow.back() * b1);
        for (int k = 0; k <= da; ++k)
            if (!A.cs[k].is_zero()) acc += A.cs[k] * npow[k] * dpow[da - k];
        if (da & 1) acc = -acc;
        return negate ? -acc : acc;
    }
    const VarSet& vs = p.vars();
    MPoly g = MPoly::constant(vs, Rat(1));
    MPoly h = MPoly::constant(vs, Rat(1));
    while (true) {
        int da = A.deg(), db = B.deg();
        int delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        VPoly R = vprem(A, B);
        A = B;
        if (R.zero()) return MPoly::zero(vs);
        // B = R / (g * h^delta)
        MPoly denom = g * h.pow(delta);
        B = vdiv_coeff(R, denom);
        g = A.lc();
        if (delta > 0) h = divide_exact(g.pow(delta), h.pow(delta - 1));
        if (B.deg() <= 0) break;
    }
    // final: resultant = h^(1-dA) * lc(B)^dA, with sign
    int da = A.deg();
    MPoly res = divide_exact(B.lc().pow(da), h.pow(da - 1));
    return negate ? -res : res;
}

bool is_squarefree(const MPoly& p) {
    if (p.is_zero()) return false;
    MPoly d(p.vars());
    for (int v = 0; v < p.vars().arity(); ++v)
        if (p.depends_on(v)) d = poly_gcd(d, p.diff(v));
    if (d.is_zero()) return true;  // p constant
    MPoly g = poly_gcd(p, d);
    return g.is_constant();
}

MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero input");
    MPoly d(p.vars());
    for (int v = 0; v < p.vars().arity(); ++v)
        if (p.depends_on(v)) d = poly_gcd(d, p.diff(v));
    if (d.is_zero()) return p.normalized();  // constant
    MPoly g = poly_gcd(p, d);
    return divide_exact(p, g).normalized();
}

PsiCore psi_decompose_core(const MPoly& H, int t_var) {
    if (H.is_zero()) throw std::domain_error("psi_decompose_core: zero input");
    const VarSet& vs = H.vars();
    // content w.r.t. the x-block = gcd of the coefficients of all x-monomials,
    // i.e. content when H is viewed with t_var as the retained variable
    std::vector<MPoly> xcoeffs;
    {
        // group terms by the exponents of every variable except t_var
        std::map<Mono, MPoly, GrlexLess> groups;
        for (const auto& [m, c] : H.terms()) {
            Mono key = m;
            int tk = key[t_var];
            key[t_var] = 0;
            Mono tm(vs.arity(), 0);
            tm[t_var] = tk;
            auto [it, ins] = groups.emplace(key, MPoly(vs));
            it->second.add_term(tm, c);
        }
        for (auto& [k, g] : groups) xcoeffs.push_back(std::move(g));
    }
    MPoly p_hat(vs);
    for (const auto& c : xcoeffs) {
        p_hat = poly_gcd(p_hat, c);
        if (p_hat.is_constant() && !p_hat.is_zero()) break;
    }
    MPoly H1 = divide_exact(H, p_hat);
    auto [h_tilde, psi] = content_primitive(H1, t_var);
    return {h_tilde, psi, p_hat};
}

} // namespace tsurf
