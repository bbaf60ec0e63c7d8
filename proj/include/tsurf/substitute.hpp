#ifndef TSURF_SUBSTITUTE_HPP
#define TSURF_SUBSTITUTE_HPP

#include <array>
#include <map>

#include "tsurf/ratfn.hpp"

namespace tsurf {

/// Bindings from source-variable index to a rational function over a target
/// VarSet. Variables without an explicit binding pass through: a variable of
/// the same name must exist in the target VarSet.
using Bindings = std::map<int, RatFn>;

/// Exact composition p(bindings), reduced. Works with cleared denominators
/// (one division at the end) rather than chained RatFn arithmetic.
RatFn substitute(const MPoly& p, const VarSet& target, const Bindings& bindings);

/// Same composition, but keeps the cleared form: returns the expanded
/// numerator H and the denominator D = prod den_i^{deg_i p} actually
/// multiplied through (no reduction). H / D equals p(bindings).
std::pair<MPoly, MPoly> substitute_cleared(const MPoly& p, const VarSet& target,
                                           const Bindings& bindings);

RatFn substitute(const RatFn& f, const VarSet& target, const Bindings& bindings);

/// Re-express a univariate rational function over a wider VarSet, placing
/// its variable at index pos.
RatFn remap_curve_coord(const RatFn& f, const VarSet& target, int pos);

/// f(x + q) for a constant shift q; exact polynomial result.
MPoly shift_poly(const MPoly& f, const std::array<Rat, 3>& q);

} // namespace tsurf

#endif
