#include "kf/roots.hpp"

#include <algorithm>

namespace kf {

namespace {

// Integer coefficients with content 1, multiplied by a positive factor only.
UPoly positive_scale(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly q = p.primitive();
    if ((q.lead().sign() > 0) != (p.lead().sign() > 0)) q = -q;
    return q;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p) {
    if (p.is_zero()) throw Error(Errc::Domain, "Sturm sequence of the zero polynomial");
    UPoly q = squarefree_part(p);
    seq_.push_back(q);
    if (q.degree() <= 0) return;
    seq_.push_back(positive_scale(q.derivative()));
    while (seq_.back().degree() > 0) {
        UPoly r = seq_[seq_.size() - 2] % seq_.back();
        if (r.is_zero()) break;
        seq_.push_back(positive_scale(-r));
    }
}

int SturmSequence::variations(const Rat& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return sign_variations(s);
}

int SturmSequence::variations_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(p.degree() % 2 == 0 ? p.lead().sign() : -p.lead().sign());
    return sign_variations(s);
}

int SturmSequence::variations_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(p.lead().sign());
    return sign_variations(s);
}

int SturmSequence::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) return 0;
    return variations(lo) - variations(hi);
}

int SturmSequence::count_closed(const Rat& lo, const Rat& hi) const {
    if (hi < lo) return 0;
    int at_lo = base().sign_at(lo) == 0 ? 1 : 0;
    if (lo == hi) return at_lo;
    return count(lo, hi) + at_lo;
}

int SturmSequence::count_below(const Rat& x) const {
    int at = base().sign_at(x) == 0 ? 1 : 0;
    return variations_neg_inf() - variations(x) - at;
}

Rat cauchy_bound(const UPoly& p) {
    if (p.degree() <= 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeff(static_cast<std::size_t>(i)) / p.lead()).abs());
    // Round up to an integer so box endpoints stay small.
    Int c;
    Rat b = Rat(1) + m;
    mpz_cdiv_q(c.get_mpz_t(), b.num().get_mpz_t(), b.den().get_mpz_t());
    return Rat(Int(c + 1));
}

namespace {

// A point strictly inside (lo, hi) that is not a root of q.
Rat split_point(const UPoly& q, const Rat& lo, const Rat& hi) {
    Rat m = (lo + hi) / Rat(2);
    for (long k = 3; q.sign_at(m) == 0; ++k) m = lo + (hi - lo) / Rat(k);
    return m;
}

void multiplicity_flags(const UPoly& p, std::vector<RootBox>& boxes) {
    UPoly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return;
    SturmSequence sg(g);
    for (auto& b : boxes) b.multiplicity_free = sg.count(b.low, b.high) == 0;
}

}  // namespace

std::vector<RootBox> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw Error(Errc::Domain, "isolate_real_roots: zero polynomial");
    SturmSequence sturm(p);
    const UPoly& q = sturm.base();
    std::vector<RootBox> out;
    if (q.degree() <= 0) return out;
    Rat b = cauchy_bound(q);
    struct Job { Rat lo, hi; int n; };
    std::vector<Job> stack{{-b, b, sturm.count(-b, b)}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        if (j.n == 0) continue;
        if (j.n == 1) {
            out.push_back({j.lo, j.hi, true});
            continue;
        }
        Rat m = split_point(q, j.lo, j.hi);
        int left = sturm.count(j.lo, m);
        stack.push_back({m, j.hi, j.n - left});
        stack.push_back({j.lo, m, left});
    }
    std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) { return x.low < y.low; });
    multiplicity_flags(p, out);
    return out;
}

std::vector<RootBox> isolate_real_roots(const MPoly& p) {
    if (p.is_zero()) throw Error(Errc::Domain, "isolate_real_roots: zero polynomial");
    return isolate_real_roots(p.to_upoly(p.main_var()));
}

int poly_sign_at(const UPoly& p, const Rat& q) { return p.sign_at(q); }

int poly_sign_at(const MPoly& p, const Rat& q) {
    if (p.is_zero()) return 0;
    return p.to_upoly(p.main_var()).sign_at(q);
}

RootBox refine_box(const UPoly& p, const RootBox& box, const Rat& width) {
    if (box.width() < width) return box;
    UPoly q = squarefree_part(p);
    Rat lo = box.low, hi = box.high;
    int s_hi = q.sign_at(hi);
    while (!(hi - lo < width)) {
        Rat m = (lo + hi) / Rat(2);
        int s = q.sign_at(m);
        if (s == 0) {
            // The root is m itself; shrink symmetrically without touching it.
            Rat delta = std::min({width / Rat(4), (m - lo) / Rat(2), (hi - m) / Rat(2)});
            return {m - delta, m + delta, box.multiplicity_free};
        }
        // Exactly one sign change of q across (lo, hi]; keep the half that holds it.
        if (s == s_hi) hi = m;
        else lo = m;
    }
    return {lo, hi, box.multiplicity_free};
}

RootBox refine_box(const MPoly& p, const RootBox& box, const Rat& width) {
    return refine_box(p.to_upoly(p.main_var()), box, width);
}

int compare_with_root(const UPoly& p, const RootBox& box, const Rat& x) {
    if (x <= box.low) return -1;
    if (x > box.high) return 1;
    if (p.sign_at(x) == 0) return 0;
    return SturmSequence(p).count(box.low, x) > 0 ? 1 : -1;
}

RatInterval eval_interval(const UPoly& p, const Rat& lo, const Rat& hi) {
    RatInterval acc{Rat(0), Rat(0)};
    for (int i = p.degree(); i >= 0; --i) {
        // acc * [lo, hi]
        Rat c[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
        Rat mn = *std::min_element(c, c + 4), mx = *std::max_element(c, c + 4);
        const Rat& k = p.coeff(static_cast<std::size_t>(i));
        acc = {mn + k, mx + k};
    }
    return acc;
}

}  // namespace kf
