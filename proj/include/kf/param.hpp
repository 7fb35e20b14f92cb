#pragma once

/**
 * @file param.hpp
 * @brief Rational parametrizations u -> (x(u), y(u), t(u)) of curves on the surfaces.
 *
 * GeneralKN(k, n) lies on (t^n + ct + d) y^k = x^n + ax + b inside the curve
 * (ct + d) y^k = ax + b. Quartic1728 lies on (t^4 + ct + d) y^2 = x^3 + ax and
 * Sextic0 on (t^6 + ct + d) y^2 = x^3 + b.
 */

#include <map>
#include <string>
#include <vector>

#include "kf/ratfunc.hpp"
#include "kf/surface.hpp"

namespace kf {

enum class FamilyKind { GeneralKN, Quartic1728, Sextic0 };
const char* family_name(FamilyKind k);
/// "general", "quartic", "sextic"; throws Parse otherwise.
FamilyKind family_from_name(const std::string& s);

using Coeffs = std::map<Var, Rat>;

struct ParamFamily {
    FamilyKind kind = FamilyKind::GeneralKN;
    int k = 2;  // exponent of y on the surface
    int n = 3;  // degree of the x-side (and of the t-side for GeneralKN)
    RatFunc x, y, t;

    /// Degree of f(t) on the surface: n for GeneralKN, 4 or 6 otherwise.
    int t_degree() const;
    /// Coefficient symbols the family depends on.
    std::vector<Var> symbols() const;
};

/// Throws Domain when GeneralKN has k or n < 2.
ParamFamily build_family(FamilyKind kind, int k = 2, int n = 3);

struct IdentityReport {
    bool verified = false;
    MPoly curve_residual;    // numerator of lhs - rhs of the curve equation
    MPoly surface_residual;  // numerator of lhs - rhs of the surface equation
    MPoly plane_residual;    // GeneralKN only: t r (c r^(n-1) - a) - (b - d r^n) with r = x/t
};

/// Symbolic check over Q(a, b, c, d, u): every residual must be the zero polynomial.
IdentityReport verify_family_identities(const ParamFamily& F);

struct ParamPoint {
    Rat x, y, t;
};

/**
 * Throws Domain for missing coefficients or violated constraints (the surface
 * conditions for GeneralKN; a, c, d != 0 for Quartic1728; b, c != 0 for Sextic0), and
 * Pole naming the vanishing denominator when u is a pole or u = 0.
 */
ParamPoint eval_family(const ParamFamily& F, const Coeffs& coeffs, const Rat& u);

/// Whether (x, y, t) satisfies the family's surface equation with these coefficients.
bool family_surface_contains(const ParamFamily& F, const Coeffs& coeffs, const ParamPoint& p);
/// Whether (x, y, t) satisfies the family's curve equation.
bool family_curve_contains(const ParamFamily& F, const Coeffs& coeffs, const ParamPoint& p);

/// The surface of a GeneralKN family, or the twist pencil of a quartic or sextic one.
QuotientSurface family_surface(const ParamFamily& F, const Coeffs& coeffs);
TwistPencil family_pencil(const ParamFamily& F, const Coeffs& coeffs);

}  // namespace kf
