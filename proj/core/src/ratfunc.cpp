#include "hesspoly/ratfunc.hpp"

namespace hesspoly {

RatFunc::RatFunc(MPoly num)
    : num_(std::move(num)), den_(MPoly::constant(num_.space(), Cyclo(1))) {
    den_ = den_.with_conductor(num_.conductor());
}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.space() != den_.space()) throw space_mismatch("RatFunc: num/den space mismatch");
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::optional<Cyclo> RatFunc::eval(std::span<const Cyclo> point) const {
    Cyclo d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) * d.inverse();
}

std::string RatFunc::str() const {
    if (den_.term_count() == 1 && den_.terms().begin()->second.is_one() &&
        den_.terms().begin()->first.deg(space()->size()) == 0)
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace hesspoly
