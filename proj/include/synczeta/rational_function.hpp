#pragma once

/**
 * @file rational_function.hpp
 * @brief Ratios of integer polynomials in Fatou normal form.
 *
 * Normal form: numerator and denominator coprime over the rationals and
 * denominator(0) = 1. Every zeta form handled here expands to an integer
 * power series, which guarantees the normal form exists (Fatou); inputs
 * that cannot be normalized this way are rejected with NotFatouNormal.
 */

#include <complex>
#include <string>
#include <utility>

#include "synczeta/power_series.hpp"

namespace synczeta {

class RationalFunction {
  public:
    /// The constant function 1.
    RationalFunction() : num_(IntPoly::one()), den_(IntPoly::one()) {}

    RationalFunction(const IntPoly& num, const IntPoly& den) { normalize(to_rat(num), to_rat(den)); }
    RationalFunction(const RatPoly& num, const RatPoly& den) { normalize(num, den); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error("division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    PowerSeries expand(std::size_t order) const {
        return expand_fraction(to_rat(num_), to_rat(den_), order);
    }

    /// Exact evaluation; throws TorsionUndefined-agnostic Error on a pole.
    BigRat evaluate(const BigRat& z) const {
        const BigRat d = to_rat(den_).evaluate(z);
        if (d == 0) throw Error("evaluation at a pole");
        return to_rat(num_).evaluate(z) / d;
    }

    std::complex<double> evaluate_complex(const std::complex<double>& z) const {
        return num_.evaluate_complex(z) / den_.evaluate_complex(z);
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

  private:
    void normalize(const RatPoly& num, const RatPoly& den) {
        if (den.is_zero()) throw Error("rational function with zero denominator");
        RatPoly n = num, d = den;
        if (n.is_zero()) {
            d = RatPoly::one();
        } else {
            const RatPoly g = gcd_poly(n, d);
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
        const BigRat d0 = d[0];
        if (d0 == 0) throw NotFatouNormal("denominator vanishes at z = 0");
        n = n * (BigRat(1) / d0);
        d = d * (BigRat(1) / d0);
        if (!is_integral(n) || !is_integral(d))
            throw NotFatouNormal("no integer-coefficient form with denominator(0) = 1");
        num_ = to_int(n);
        den_ = to_int(d);
    }

    IntPoly num_;
    IntPoly den_;
};

}  // namespace synczeta
