#pragma once

/**
 * @file roots.hpp
 * @brief Exact real-root isolation by Sturm sequences.
 *
 * Root boxes are half-open (low, high] with rational endpoints that are never roots,
 * and contain exactly one distinct real root of the polynomial they were built for.
 */

#include <optional>
#include <vector>

#include "kf/mpoly.hpp"
#include "kf/upoly.hpp"

namespace kf {

struct RootBox {
    Rat low;
    Rat high;
    bool multiplicity_free = true;  // the root is simple in the original polynomial

    Rat width() const { return high - low; }
    Rat midpoint() const { return (low + high) / Rat(2); }
    friend bool operator==(const RootBox&, const RootBox&) = default;
};

class SturmSequence {
public:
    /// Built from the squarefree part of p; p must be nonzero.
    explicit SturmSequence(const UPoly& p);

    const UPoly& base() const { return seq_.front(); }
    int variations(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;
    /// Distinct real roots in (lo, hi]; any lo < hi is allowed, roots included.
    int count(const Rat& lo, const Rat& hi) const;
    /// Distinct real roots in [lo, hi].
    int count_closed(const Rat& lo, const Rat& hi) const;
    /// Distinct real roots strictly below x.
    int count_below(const Rat& x) const;
    int count_total() const { return variations_neg_inf() - variations_pos_inf(); }

private:
    std::vector<UPoly> seq_;
};

/// Cauchy bound: every complex root z satisfies |z| < bound.
Rat cauchy_bound(const UPoly& p);

/// Boxes in increasing order, one per distinct real root. Throws Domain on zero input.
std::vector<RootBox> isolate_real_roots(const UPoly& p);
std::vector<RootBox> isolate_real_roots(const MPoly& p);

int poly_sign_at(const UPoly& p, const Rat& q);
int poly_sign_at(const MPoly& p, const Rat& q);

/// Bisects `box` until high - low < width; returns the box unchanged when it is already narrower.
RootBox refine_box(const UPoly& p, const RootBox& box, const Rat& width);
RootBox refine_box(const MPoly& p, const RootBox& box, const Rat& width);

/// Sign of x - r, where r is the root of p isolated by box.
int compare_with_root(const UPoly& p, const RootBox& box, const Rat& x);

struct RatInterval {
    Rat lo, hi;
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

/// An enclosure of {p(x) : lo <= x <= hi} by interval Horner evaluation.
RatInterval eval_interval(const UPoly& p, const Rat& lo, const Rat& hi);

/// Simplest rational strictly inside (lo, hi); a Stern-Brocot mediant search.
inline Rat sample_between(const Rat& lo, const Rat& hi) { return simplest_between(lo, hi); }

}  // namespace kf
