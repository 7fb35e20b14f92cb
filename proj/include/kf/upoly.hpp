#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * zero polynomial has an empty coefficient vector and degree -1.
 */

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kf/rational.hpp"

namespace kf {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    UPoly(std::initializer_list<Rat> coeffs) : UPoly(std::vector<Rat>(coeffs)) {}
    static UPoly constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }
    static UPoly monomial(const Rat& c, std::size_t deg);
    static UPoly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(std::size_t i) const;
    const Rat& lead() const;
    std::span<const Rat> coeffs() const { return c_; }

    Rat eval(const Rat& v) const;
    int sign_at(const Rat& v) const { return eval(v).sign(); }
    UPoly derivative() const;
    UPoly monic() const;
    /// Scaled to integer coefficients with content 1 and positive leading coefficient.
    UPoly primitive() const;
    /// p(x) -> p(s·x + t)
    UPoly compose_affine(const Rat& s, const Rat& t) const;
    UPoly compose(const UPoly& inner) const;
    UPoly pow(unsigned e) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rat& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
    friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division; throws on zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
/// p / gcd(p, p'), made primitive.
UPoly squarefree_part(const UPoly& p);
/// Resultant over the rationals by the Euclidean recurrence.
Rat resultant(const UPoly& a, const UPoly& b);

/// Lagrange interpolation through (xs[i], ys[i]); the xs must be distinct.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Res_x(p'(x), p(x) - v) as a polynomial in v: its roots are the critical values of p.
UPoly critical_value_poly(const UPoly& p);

}  // namespace kf
