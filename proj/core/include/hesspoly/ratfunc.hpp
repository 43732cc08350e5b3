#pragma once

#include "hesspoly/mpoly.hpp"

namespace hesspoly {

/// Fraction of two polynomials.  No gcd normalization is performed; equality
/// is decided by cross-multiplication, which stays exact and cheap for every
/// identity in scope.
class RatFunc {
  public:
    explicit RatFunc(MPoly num);
    RatFunc(MPoly num, MPoly den);

    static RatFunc constant(const VariableSpace* sp, const Rational& r) {
        return RatFunc(MPoly::constant(sp, r));
    }
    static RatFunc var(const VariableSpace* sp, const std::string& name, int conductor = 1) {
        return RatFunc(MPoly::var(sp, name, conductor));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VariableSpace* space() const { return num_.space(); }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc scaled_by(const Rational& r) const { return RatFunc(num_.scaled(r), den_); }

    /// num1*den2 == num2*den1.
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact value; empty when the denominator vanishes at the point.
    std::optional<Cyclo> eval(std::span<const Cyclo> point) const;

    std::string str() const;

  private:
    MPoly num_, den_;
};

inline bool ratfunc_eq(const RatFunc& a, const RatFunc& b) { return a == b; }

}  // namespace hesspoly
