#pragma once

/**
 * @file census.hpp
 * @brief Connected components of real curves in separated form g(x) = w h(s).
 *
 * Covers the fibers of a Kummer surface: K_t is g(x) = f(t0) s^2 and K_y is
 * g(x) = y0^2 f(t).
 */

#include <functional>
#include <optional>
#include <vector>

#include "kf/roots.hpp"
#include "kf/surface.hpp"

namespace kf {

/// An end of an x-range: -infinity, +infinity, or the root of poly isolated by box.
struct XBound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    UPoly poly;
    RootBox box;

    static XBound neg_inf() { return {Kind::NegInf, {}, {}}; }
    static XBound pos_inf() { return {Kind::PosInf, {}, {}}; }
    /// Sign of v minus this bound.
    int compare(const Rat& v) const;
};

struct Component {
    XBound x_low, x_high;  // closed x-range of the component
    bool bounded = false;
};

struct ComponentCensus {
    int count = 0;
    std::vector<Component> components;  // ordered by x_low
    std::optional<std::size_t> oval;    // the bounded component, when count = 2 and exactly one is bounded
};

/**
 * Exact census of {(x, s) real : g(x) = w h(s)}. The x-line and s-line are cut at the
 * critical points of g and h into monotone pieces; each pair of pieces with overlapping
 * value ranges carries one arc, and arcs are glued at shared critical points. Critical
 * values are compared exactly as roots of resultants. Throws Singular when g and h/w share
 * a critical value (a singular point), Domain for constant g or h or w = 0.
 */
ComponentCensus real_component_census(const UPoly& g, const Rat& w, const UPoly& h);

/// K_t fiber f(t0) y^2 = g(x).
ComponentCensus census_fiber_t(const UPoly& g, const UPoly& f, const Rat& t0);
/// K_y fiber g(x) = y0^2 f(t).
ComponentCensus census_fiber_y(const QuotientSurface& S, const Rat& y0);

/// True iff x lies in the closed x-range of the oval. Throws Domain unless count = 2 with an oval.
bool oval_contains(const ComponentCensus& census, const Rat& x);

/**
 * For g with three distinct real roots, whether v = f(t1) y0^2 lies strictly between the
 * local minimum and local maximum of g; vacuously true otherwise. Decided by locating v
 * among the real roots of the critical-value resultant of g.
 */
bool assumption_bounds_check(const UPoly& g, const UPoly& f, const Rat& t1, const Rat& y0);

/// A box [-R, R]^2 holding every critical point, fold point and crossing of the curve.
Rat census_box_radius(const UPoly& g, const Rat& w, const UPoly& h);

/**
 * Components of the marked cells of a sign grid: vertices (i/N, j/N) with |i|, |j| <= R N,
 * a cell marked when its corner signs of g(x) - w h(s) are not all equal and nonzero, and
 * marked cells joined across shared edges. `visit` is called with each marked cell's
 * lower-left vertex when given.
 */
int sign_grid_components(const UPoly& g, const Rat& w, const UPoly& h, long R, long N,
                         const std::function<void(const Rat&, const Rat&)>& visit = {});

}  // namespace kf
