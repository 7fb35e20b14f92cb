#pragma once

#include <map>
#include <string>

#include "kf/mpoly.hpp"

namespace kf {

/**
 * Reduced quotient of two MPolys. The denominator is nonzero, coprime to the
 * numerator, and scaled to integer coefficients with content 1 and a positive
 * grlex-leading coefficient, so equal functions have identical representations.
 */
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const MPoly& p) : num_(p), den_(Rat(1)) { canonicalize(); }
    RatFunc(const Rat& c) : RatFunc(MPoly(c)) {}
    RatFunc(long c) : RatFunc(MPoly(Rat(c))) {}
    /// Reduces by the polynomial gcd; throws Domain when den is zero.
    RatFunc(const MPoly& num, const MPoly& den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Throws Pole when the denominator vanishes at the point.
    Rat eval(const std::map<Var, Rat>& at) const;
    RatFunc subs(Var v, const RatFunc& value) const;
    RatFunc pow(unsigned e) const;
    RatFunc inverse() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// Machine form "(num)/(den)" using MPoly::str.
    std::string str() const;
    /**
     * Display form: sign chosen so the numerator leads positively, terms ordered
     * positive-first, and a monomial factor of the denominator written in front:
     * "(du^6-b)/(u^2(a-cu^4))". With `latex`, fractions render as \frac{..}{..}.
     */
    std::string display(bool latex = false) const;

private:
    void canonicalize();
    MPoly num_;
    MPoly den_;
};

/// True iff num(f)·den(g) − num(g)·den(f) is the zero polynomial.
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace kf
