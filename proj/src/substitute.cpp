#include "tsurf/substitute.hpp"

#include <vector>

namespace tsurf {

namespace {

struct Bound {
    MPoly num, den;     // over target
    bool trivial_den;   // den == 1
};

// powers cache: pw[k] = b^k
const MPoly& power_of(std::vector<MPoly>& cache, const MPoly& base, int k) {
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(cache.empty() ? MPoly::constant(base.vars(), Rat(1))
                                      : cache.back() * base);
    return cache[k];
}

} // namespace

std::pair<MPoly, MPoly> substitute_cleared(const MPoly& p, const VarSet& target,
                                           const Bindings& bindings) {
    const VarSet& src = p.vars();
    const int n = src.arity();

    std::vector<Bound> bound(n);
    for (int v = 0; v < n; ++v) {
        auto it = bindings.find(v);
        if (it != bindings.end()) {
            if (it->second.vars() != target) throw VarMismatch("substitute: binding over wrong VarSet");
            if (it->second.den().is_zero()) throw std::domain_error("substitute: zero denominator binding");
            bound[v] = {it->second.num(), it->second.den(), it->second.den().is_constant()};
        } else {
            auto idx = target.index_of(src.name(v));
            if (!idx) {
                if (p.depends_on(v))
                    throw std::invalid_argument("substitute: unbound variable " + src.name(v) +
                                                " not present in target VarSet");
                bound[v] = {MPoly(target), MPoly::constant(target, Rat(1)), true};
                continue;
            }
            bound[v] = {MPoly::variable(target, *idx), MPoly::constant(target, Rat(1)), true};
        }
    }

    std::vector<int> dmax(n, 0);
    for (const auto& [m, c] : p.terms())
        for (int v = 0; v < n; ++v) dmax[v] = std::max(dmax[v], m[v]);

    MPoly D = MPoly::constant(target, Rat(1));
    for (int v = 0; v < n; ++v)
        if (!bound[v].trivial_den) D *= bound[v].den.pow(dmax[v]);

    // per-variable caches of numerator and denominator powers
    std::vector<std::vector<MPoly>> npow(n), dpow(n);
    MPoly H(target);
    for (const auto& [m, c] : p.terms()) {
        MPoly term = MPoly::constant(target, c);
        for (int v = 0; v < n; ++v) {
            if (m[v]) term *= power_of(npow[v], bound[v].num, m[v]);
            if (!bound[v].trivial_den)
                term *= power_of(dpow[v], bound[v].den, dmax[v] - m[v]);
        }
        H += term;
    }
    return {H, D};
}

RatFn substitute(const MPoly& p, const VarSet& target, const Bindings& bindings) {
    auto [H, D] = substitute_cleared(p, target, bindings);
    return RatFn(H, D);
}

RatFn substitute(const RatFn& f, const VarSet& target, const Bindings& bindings) {
    RatFn n = substitute(f.num(), target, bindings);
    RatFn d = substitute(f.den(), target, bindings);
    if (d.is_zero()) throw std::domain_error("substitute: denominator vanishes identically");
    return n / d;
}

namespace {

MPoly widen(const MPoly& p, const VarSet& target, int pos) {
    MPoly r(target);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(target.arity(), 0);
        mm[pos] = m[0];
        r.add_term(mm, c);
    }
    return r;
}

} // namespace

RatFn remap_curve_coord(const RatFn& f, const VarSet& target, int pos) {
    if (f.vars().arity() != 1) throw std::invalid_argument("remap_curve_coord: not univariate");
    return RatFn(widen(f.num(), target, pos), widen(f.den(), target, pos));
}

MPoly shift_poly(const MPoly& f, const std::array<Rat, 3>& q) {
    const VarSet& vs = f.vars();
    Bindings b;
    for (int i = 0; i < 3; ++i)
        b.emplace(i, RatFn(MPoly::variable(vs, i) + MPoly::constant(vs, q[i])));
    return substitute_cleared(f, vs, b).first;
}

} // namespace tsurf
