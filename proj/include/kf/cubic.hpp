#pragma once

/**
 * @file cubic.hpp
 * @brief Projective plane cubics F(X,Y,Z) = 0 and the chord-tangent process.
 *
 * Coefficients are stored in the order X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z,
 * YZ^2, Z^3.
 */

#include <array>
#include <string>
#include <vector>

#include "kf/elliptic.hpp"
#include "kf/mpoly.hpp"

namespace kf {

/// A point of the projective plane, scaled so its last nonzero coordinate is 1.
class ProjPoint {
public:
    /// Throws Domain when all coordinates vanish.
    ProjPoint(const Rat& X, const Rat& Y, const Rat& Z);
    static ProjPoint affine(const Rat& x, const Rat& y) { return ProjPoint(x, y, Rat(1)); }

    const Rat& X() const { return c_[0]; }
    const Rat& Y() const { return c_[1]; }
    const Rat& Z() const { return c_[2]; }
    const std::array<Rat, 3>& coords() const { return c_; }
    bool at_infinity() const { return c_[2].is_zero(); }
    std::string str() const;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    std::array<Rat, 3> c_;
};

class PlaneCubic {
public:
    /// Throws Domain when every coefficient is zero.
    explicit PlaneCubic(const std::array<Rat, 10>& coeffs);
    /// From a homogeneous cubic in X, Y, Z.
    static PlaneCubic from_mpoly(const MPoly& F);

    const std::array<Rat, 10>& coeffs() const { return c_; }
    MPoly to_mpoly() const;

    Rat eval(const std::array<Rat, 3>& p) const;
    std::array<Rat, 3> gradient(const std::array<Rat, 3>& p) const;
    bool contains(const ProjPoint& p) const { return eval(p.coords()).is_zero(); }
    friend bool operator==(const PlaneCubic&, const PlaneCubic&) = default;

private:
    std::array<Rat, 10> c_;
};

/// Exponents (X, Y, Z) of the i-th stored monomial.
std::array<unsigned, 3> cubic_monomial(std::size_t i);

/// Y^2 Z - X^3 - A X Z^2 - B Z^3, with its flex (0:1:0).
PlaneCubic weierstrass_cubic(const WeierstrassCurve& E);
/// (x, y) -> (x : y : 1), infinity -> (0 : 1 : 0).
ProjPoint to_proj(const ECPoint& P);

/**
 * True iff F_X, F_Y, F_Z have no common zero over the algebraic closure. Decided by
 * the resultant of the three partials, computed as the 6x6 determinant of their
 * coefficients together with the partials of their Jacobian determinant.
 */
bool cubic_is_smooth(const PlaneCubic& C);

/**
 * Third intersection of the line AB with C (the tangent when A = B). Throws NotOnCurve
 * for points off C, Singular when the tangent is undefined, Internal when the line
 * lies in C.
 */
ProjPoint chord(const PlaneCubic& C, const ProjPoint& A, const ProjPoint& B);

/**
 * Q_0 = P and Q_{n+1} = chord(chord(Q_n, P), T) with T = chord(P, P). For N < 0 the
 * list runs backwards, Q_0, Q_{-1}, ..., Q_N, using Q_n = chord(chord(Q_{n+1}, T), P).
 * Throws Singular when C is not smooth.
 */
std::vector<ProjPoint> chord_sequence(const PlaneCubic& C, const ProjPoint& P, long N);

/// One step of the sequence in either direction; T = chord(P, P).
ProjPoint chord_next(const PlaneCubic& C, const ProjPoint& Q, const ProjPoint& P, const ProjPoint& T);
ProjPoint chord_prev(const PlaneCubic& C, const ProjPoint& Q, const ProjPoint& P, const ProjPoint& T);

struct ChordTorsionVerdict {
    bool torsion = false;
    int period = 0;                  // first n > 0 with Q_n = Q_0, when torsion
    std::vector<ProjPoint> points;   // Q_0 .. Q_12, or up to the period
};

/// Fixed depth: Q_0..Q_12 pairwise distinct certifies that 3[P] - H has infinite order.
ChordTorsionVerdict chord_torsion_test(const PlaneCubic& C, const ProjPoint& P);

inline constexpr int kChordDepth = 12;

}  // namespace kf
