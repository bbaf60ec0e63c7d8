#ifndef TSURF_UPOLY_HPP
#define TSURF_UPOLY_HPP

#include <vector>

#include "tsurf/rational.hpp"

namespace tsurf {

/// Dense univariate polynomial over the rationals, coefficient of x^i at
/// index i, no trailing zeros. Internal workhorse for series lifting and
/// fiber computations; MPoly stays the public carrier.
using UPoly = std::vector<Rat>;

namespace up {

void trim(UPoly& p);
inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const UPoly& p) { return p.empty(); }

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly mul_trunc(const UPoly& a, const UPoly& b, int n);  // mod x^n
UPoly scale(const UPoly& a, const Rat& c);
UPoly truncate(const UPoly& a, int n);

Rat eval(const UPoly& p, const Rat& x);
UPoly derivative(const UPoly& p);

/// Quotient and remainder over Q.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd over Q (Euclid).
UPoly gcd(UPoly a, UPoly b);

/// Power series inverse mod x^n (constant term nonzero).
UPoly series_inverse(const UPoly& a, int n);

/// Composition p(x + c).
UPoly shift(const UPoly& p, const Rat& c);

/// All rational roots, using the integer rational-root theorem with divisor
/// enumeration bounded by height_bound (numerator and denominator searched
/// among divisors up to the bound, plus the full values when they fit).
std::vector<Rat> rational_roots(const UPoly& p, long height_bound);

/// Rational reconstruction: find num/den == series mod x^n with
/// deg num <= dn, deg den <= dd, den(0) != 0. Nullopt when impossible.
struct PadeResult {
    UPoly num, den;
};
std::optional<PadeResult> pade(const UPoly& series, int n, int dn, int dd);

} // namespace up

} // namespace tsurf

#endif
