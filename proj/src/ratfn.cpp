#include "tsurf/ratfn.hpp"

namespace tsurf {

RatFn::RatFn(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), Rat(1))) {}

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw VarMismatch("RatFn: mismatched VarSet");
    if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.vars(), Rat(1));
        return;
    }
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rat lc = den_.leading_coeff();
    num_ = num_ / lc;
    den_ = den_ / lc;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::diff(int v) const {
    return RatFn(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

std::optional<Rat> RatFn::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) return std::nullopt;
    return num_.eval(point) / d;
}

} // namespace tsurf
