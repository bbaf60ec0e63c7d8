#ifndef TSURF_TEST_HELPERS_HPP
#define TSURF_TEST_HELPERS_HPP

#include <random>

#include "tsurf/expr.hpp"
#include "tsurf/polyops.hpp"

namespace tsurf::test {

inline const VarSet& X() {
    static const VarSet vs = VarSet::surface();
    return vs;
}

inline MPoly P(const std::string& s) { return parse_poly(s, X()); }
inline MPoly P(const std::string& s, const VarSet& vs) { return parse_poly(s, vs); }

inline bool equal_up_to_constant(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.normalized() == b.normalized();
}

// Example 1/2 surface
inline MPoly f_ex1() { return P("x3+5*x1^2-6*x1*x2+2*x2^2"); }

// Example 4/5 quartic
inline MPoly f_ex4() {
    return P("x1^4-2*x3+7*x3*x1+2*x2^2-5*x2*x3+x3^2+2*x1^3-10*x1^2*x2-2*x3*x1^2+7*x1*x2^2-x2^3");
}

// Example 3 degree-7 surface
inline MPoly f_ex3() {
    return P("2*x1*x3^3*x2-2*x1*x3^2*x2-3*x1*x3*x2+4*x1^2*x3*x2+10*x3^2*x2+5*x1*x2"
             "+2*x1*x3^5-x3^3*x2^2+x3^3*x1^3+2*x3^5*x2-x1^3*x2-4*x1^2*x3^4-x3^7"
             "-6*x2^2+x1^3-x1^2-8*x3^4-2*x3^5-15*x3^2-x3^3+x2^3+12*x2"
             "+5*x1*x3^2+9*x3^3*x1-4*x1^2*x3+2*x3^3*x2-2*x1*x2^2+x1^2*x2+6*x3*x1"
             "+4*x3*x2-x3^3*x1^2-11*x3-2*x1-3*x1^2*x3^2+x3^4*x2-2*x3^2*x2^2-9");
}

// deterministic random polynomials for property tests
struct PolyGen {
    std::mt19937_64 rng;
    explicit PolyGen(unsigned long seed) : rng(seed) {}

    long pick(long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); }

    MPoly random_poly(const VarSet& vs, int max_deg, int terms, long height = 4) {
        MPoly p(vs);
        for (int t = 0; t < terms; ++t) {
            Mono m(vs.arity(), 0);
            int budget = static_cast<int>(pick(0, max_deg));
            for (int i = 0; i < vs.arity() && budget > 0; ++i) {
                int e = static_cast<int>(pick(0, budget));
                m[i] = e;
                budget -= e;
            }
            long c = pick(-height, height);
            if (c != 0) p.add_term(m, Rat(c));
        }
        return p;
    }

    MPoly random_nonzero(const VarSet& vs, int max_deg, int terms, long height = 4) {
        for (;;) {
            MPoly p = random_poly(vs, max_deg, terms, height);
            if (!p.is_zero()) return p;
        }
    }
};

// A(t) reinterpreted as A(x1) over the surface variables
inline MPoly graph_as_x1(const MPoly& a) {
    MPoly r(X());
    for (const auto& [m, c] : a.terms()) r.add_term(Mono{m[0], 0, 0}, c);
    return r;
}

// independent resultant oracle: Bareiss fraction-free elimination on the
// Sylvester matrix, entries in the remaining variables
inline MPoly sylvester_resultant(const MPoly& p, const MPoly& q, int v) {
    auto pc = p.coeffs_in(v), qc = q.coeffs_in(v);
    int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
    const VarSet& vs = p.vars();
    int dim = m + n;
    if (dim == 0) return MPoly::constant(vs, Rat(1));
    std::vector<std::vector<MPoly>> a(dim, std::vector<MPoly>(dim, MPoly(vs)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + (m - k)] = pc[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + (n - k)] = qc[k];
    // Bareiss
    MPoly prev = MPoly::constant(vs, Rat(1));
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < dim; ++r)
                if (!a[r][k].is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return MPoly::zero(vs);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i)
            for (int j = k + 1; j < dim; ++j)
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    MPoly det = a[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

} // namespace tsurf::test

#endif
