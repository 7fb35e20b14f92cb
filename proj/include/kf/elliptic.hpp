#pragma once

/**
 * @file elliptic.hpp
 * @brief Short Weierstrass curves y^2 = x^3 + Ax + B over the rationals.
 *
 * Group law, integral models, quadratic twists and torsion certification.
 * The point at infinity is the identity.
 */

#include <optional>
#include <string>

#include "kf/rational.hpp"

namespace kf {

struct WeierstrassCurve {
    Rat A;
    Rat B;

    /// Throws Singular when 4A^3 + 27B^2 = 0.
    WeierstrassCurve(Rat a, Rat b);

    /// -16(4A^3 + 27B^2)
    Rat discriminant() const;
    bool contains(const Rat& x, const Rat& y) const;
    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

class ECPoint {
public:
    static ECPoint infinity() { return ECPoint(); }
    ECPoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }
    const Rat& x() const;
    const Rat& y() const;
    ECPoint negated() const { return inf_ ? *this : ECPoint(x_, -y_); }
    bool is_integral() const { return inf_ || (x_.is_integer() && y_.is_integer()); }
    friend bool operator==(const ECPoint&, const ECPoint&) = default;

private:
    ECPoint() = default;
    bool inf_ = true;
    Rat x_, y_;
};

/// Throws NotOnCurve unless both points lie on E.
ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P);

struct IntegralModel {
    WeierstrassCurve curve;
    ECPoint point;
    Rat scale;            // lambda: (x, y) -> (lambda^2 x, lambda^3 y)
    bool minimal = true;  // false when a denominator could not be fully factored
};

/**
 * Smallest positive integer lambda with lambda^4 A and lambda^6 B integral. When a
 * denominator has a composite cofactor beyond the factorization bit bound, that
 * cofactor is treated as prime: the model stays integral but may not be minimal.
 */
IntegralModel to_integral_model(const WeierstrassCurve& E, const ECPoint& P);

struct Twist {
    WeierstrassCurve curve;  // Y^2 = X^3 + q^2 A X + q^3 B
    Rat q;

    /// Carries a solution of q y^2 = x^3 + Ax + B to (q x, q^2 y) on the twist.
    ECPoint forward(const Rat& x, const Rat& y) const { return ECPoint(q * x, q * q * y); }
    /// Inverse of forward on affine points.
    std::pair<Rat, Rat> backward(const ECPoint& P) const { return {P.x() / q, P.y() / (q * q)}; }
};

/// Throws Domain when q = 0.
Twist quadratic_twist(const WeierstrassCurve& E, const Rat& q);

enum class NonTorsionMethod { LutzNagellNonIntegral, MazurMultiples };
const char* method_name(NonTorsionMethod m);

struct TorsionVerdict {
    bool torsion = false;
    int order = 0;  // when torsion: the exact order, in 1..10 or 12
    NonTorsionMethod method = NonTorsionMethod::MazurMultiples;
    std::string evidence;

    static TorsionVerdict torsion_of(int order, std::string evidence);
    static TorsionVerdict non_torsion(NonTorsionMethod m, std::string evidence);
};

/**
 * Rigorous order test over the rationals. On an integral model, a non-integral P or
 * 2P, or y^2 not dividing 4A^3 + 27B^2, certifies infinite order (Lutz-Nagell).
 * Otherwise multiples up to 12 are computed; Mazur's bound makes a miss a proof of
 * infinite order. The search depth is fixed.
 */
TorsionVerdict torsion_test(const WeierstrassCurve& E, const ECPoint& P);

/// Largest order a rational torsion point can have.
inline constexpr int kMazurBound = 12;

}  // namespace kf
