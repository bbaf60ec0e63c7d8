#include "tsurf/upoly.hpp"

#include <algorithm>
#include <set>

namespace tsurf {
namespace up {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly mul_trunc(const UPoly& a, const UPoly& b, int n) {
    if (a.empty() || b.empty() || n <= 0) return {};
    UPoly r(std::min<size_t>(a.size() + b.size() - 1, n), Rat(0));
    for (size_t i = 0; i < a.size() && i < static_cast<size_t>(n); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < static_cast<size_t>(n); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly scale(const UPoly& a, const Rat& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly truncate(const UPoly& a, int n) {
    UPoly r(a.begin(), a.begin() + std::min<size_t>(a.size(), std::max(n, 0)));
    trim(r);
    return r;
}

Rat eval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    trim(r);
    return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly divmod: zero divisor");
    UPoly rem = a, quot;
    if (deg(a) >= deg(b)) quot.assign(a.size() - b.size() + 1, Rat(0));
    while (!rem.empty() && deg(rem) >= deg(b)) {
        Rat c = rem.back() / b.back();
        int k = deg(rem) - deg(b);
        quot[k] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[i + k] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

UPoly series_inverse(const UPoly& a, int n) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series_inverse: zero constant term");
    UPoly r{Rat(1) / a[0]};
    int k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        // r <- r*(2 - a*r) mod x^k
        UPoly ar = mul_trunc(a, r, k);
        UPoly two_minus{Rat(2)};
        two_minus = sub(two_minus, ar);
        r = mul_trunc(r, two_minus, k);
    }
    return r;
}

UPoly shift(const UPoly& p, const Rat& c) {
    // Horner: p(x+c)
    UPoly r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = mul(r, UPoly{c, Rat(1)});
        if (*it != 0) {
            if (r.empty()) r.push_back(*it);
            else r[0] += *it;
        }
        trim(r);
    }
    return r;
}

namespace {

std::vector<Int> bounded_divisors(const Int& n, long bound) {
    std::vector<Int> ds;
    Int a = abs(n);
    if (a == 0) return ds;
    for (long d = 1; d <= bound; ++d) {
        if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d))) ds.emplace_back(d);
        if (Int(d) * d > a) break;
    }
    // cofactors of the small divisors, when they fit the bound
    std::set<Int> all(ds.begin(), ds.end());
    for (const auto& d : ds) {
        Int co = a / d;
        if (co <= bound) all.insert(co);
    }
    if (a <= bound) all.insert(a);
    return {all.begin(), all.end()};
}

} // namespace

std::vector<Rat> rational_roots(const UPoly& p, long height_bound) {
    std::vector<Rat> roots;
    if (p.empty()) return roots;
    UPoly q = p;
    // strip x^k: zero root
    size_t shift0 = 0;
    while (shift0 < q.size() && q[shift0] == 0) ++shift0;
    if (shift0 > 0) {
        roots.emplace_back(0);
        q.erase(q.begin(), q.begin() + shift0);
    }
    if (deg(q) < 1) return roots;
    // scale to integers
    Int L(1);
    for (const auto& c : q) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> ic(q.size());
    for (size_t i = 0; i < q.size(); ++i) ic[i] = q[i].get_num() * (L / q[i].get_den());
    auto nums = bounded_divisors(ic.front(), height_bound);
    auto dens = bounded_divisors(ic.back(), height_bound);
    std::set<Rat> found;
    for (const auto& n : nums)
        for (const auto& d : dens)
            for (int s : {1, -1}) {
                Rat r(s * n, d);
                r.canonicalize();
                if (found.count(r)) continue;
                if (eval(q, r) == 0) found.insert(r);
            }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<PadeResult> pade(const UPoly& series, int n, int dn, int dd) {
    // extended Euclid on (x^n, series): stop when remainder degree <= dn
    UPoly r0(static_cast<size_t>(n) + 1, Rat(0));
    r0[n] = 1;
    UPoly r1 = truncate(series, n);
    UPoly s0, s1{Rat(1)};
    while (!r1.empty() && deg(r1) > dn) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (s1.empty() || deg(s1) > dd) return std::nullopt;
    if (s1[0] == 0) return std::nullopt;
    return PadeResult{r1, s1};
}

} // namespace up
} // namespace tsurf
