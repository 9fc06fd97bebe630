#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over exact coefficient rings.
 *
 * Coefficients are stored ascending by degree with trailing zeros stripped,
 * so the zero polynomial has an empty coefficient vector and degree() < 0.
 */

#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "synczeta/numbers.hpp"

namespace synczeta {

template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> cs) : coeffs_(cs) { strip(); }
    explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { strip(); }
    explicit Poly(const T& c) : coeffs_{c} { strip(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{T(1)}; }
    /// z^k with the given coefficient.
    static Poly monomial(std::size_t k, const T& c = T(1)) {
        std::vector<T> cs(k + 1, T(0));
        cs[k] = c;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<T>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k (zero beyond the stored length).
    const T& operator[](std::size_t k) const {
        static const T kZero(0);
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }

    const T& leading() const {
        if (is_zero()) throw Error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        std::vector<T> cs(coeffs_);
        for (auto& c : cs) c = -c;
        return Poly(std::move(cs));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
        return Poly(std::move(cs));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> cs(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(cs));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        if (s == T(0)) return Poly();
        std::vector<T> cs(a.coeffs_);
        for (auto& c : cs) c *= s;
        return Poly(std::move(cs));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    template <class X>
    X evaluate(const X& z) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + X(*it);
        return acc;
    }

    std::complex<double> evaluate_complex(const std::complex<double>& z) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + std::complex<double>(static_cast<double>(*it), 0.0);
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<T> cs(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Poly(std::move(cs));
    }

    /// z^degree * p(1/z).
    Poly reciprocal() const {
        std::vector<T> cs(coeffs_.rbegin(), coeffs_.rend());
        return Poly(std::move(cs));
    }

    /// p(z) * z^k.
    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> cs(coeffs_.size() + k, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
        return Poly(std::move(cs));
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == T(0)) continue;
            if (!first) os << (coeffs_[i] > T(0) ? " + " : " - ");
            else if (coeffs_[i] < T(0)) os << "-";
            T a = coeffs_[i] < T(0) ? T(-coeffs_[i]) : coeffs_[i];
            if (i == 0 || a != T(1)) os << a.str();
            if (i > 0) {
                if (a != T(1)) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<BigRat> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

inline bool is_integral(const RatPoly& p) {
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

/// Requires all coefficients integral; throws otherwise.
inline IntPoly to_int(const RatPoly& p) {
    std::vector<BigInt> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(to_integer(c));
    return IntPoly(std::move(cs));
}

/// gcd of coefficients, positive; content of the zero polynomial is 0.
inline BigInt content(const IntPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

/// Content-free copy with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c / g);
    return IntPoly(std::move(cs));
}

/// Clear denominators and strip content: the unique primitive integer
/// polynomial with positive leading coefficient proportional to p.
inline IntPoly primitive_from_rat(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, denominator(c));
    std::vector<BigInt> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(numerator(c) * (l / denominator(c)));
    return primitive_part(IntPoly(std::move(cs)));
}

/// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    RatPoly r = a;
    std::vector<BigRat> q;
    if (a.degree() >= b.degree()) q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRat(0));
    const BigRat lead_inv = BigRat(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        const BigRat c = r.leading() * lead_inv;
        q[k] = c;
        r = r - (b * c).shifted_up(k);
    }
    return {RatPoly(std::move(q)), r};
}

/// True iff b divides a exactly over the rationals.
inline bool divides(const RatPoly& b, const RatPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
}

inline bool divides(const IntPoly& b, const IntPoly& a) { return divides(to_rat(b), to_rat(a)); }

/// Exact quotient; throws if the division leaves a remainder.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

/// Monic gcd over the rationals (gcd of zero polynomials is zero).
inline RatPoly gcd_poly(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (BigRat(1) / a.leading());
}

/// Squarefree (Yun) decomposition over the rationals: returns monic factors
/// f_m with multiplicity m (index 0 -> multiplicity 1), product of f_m^m
/// proportional to the input.
inline std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
    std::vector<RatPoly> out;
    if (f.degree() <= 0) return out;
    RatPoly a = f * (BigRat(1) / f.leading());
    RatPoly g = gcd_poly(a, a.derivative());
    RatPoly w = exact_div(a, g);
    RatPoly y = exact_div(a.derivative(), g);
    RatPoly h = y - w.derivative();
    while (!w.is_zero() && w.degree() > 0) {
        RatPoly fac = gcd_poly(w, h);
        out.push_back(fac);
        w = exact_div(w, fac);
        h = exact_div(h, fac) - w.derivative();
    }
    return out;
}

/// Product of the distinct irreducible factors (monic squarefree radical).
inline RatPoly radical(const RatPoly& f) {
    RatPoly out = RatPoly::one();
    for (const auto& fac : squarefree_decomposition(f)) out = out * fac;
    return out;
}

/// z^n - 1.
inline IntPoly cyclotomic_span(std::size_t n) {
    std::vector<BigInt> cs(n + 1, BigInt(0));
    cs[0] = -1;
    cs[n] = 1;
    return IntPoly(std::move(cs));
}

}  // namespace synczeta
