#ifndef TSURF_RATFN_HPP
#define TSURF_RATFN_HPP

#include <optional>

#include "tsurf/polyops.hpp"

namespace tsurf {

/// Reduced multivariate rational function. Invariants: den != 0,
/// gcd(num, den) constant, den's grlex leading coefficient is 1.
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(MPoly num);  // denominator 1
    RatFn(MPoly num, MPoly den);  // reduces

    static RatFn constant(const VarSet& vs, const Rat& c) { return RatFn(MPoly::constant(vs, c)); }
    static RatFn variable(const VarSet& vs, int v) { return RatFn(MPoly::variable(vs, v)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;  // throws on zero divisor
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn diff(int v) const;  // quotient rule, reduced

    /// Evaluate at a full rational point; nullopt when the denominator vanishes.
    std::optional<Rat> eval(const std::vector<Rat>& point) const;

private:
    void reduce();

    MPoly num_, den_;
};

} // namespace tsurf

#endif
