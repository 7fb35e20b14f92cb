#include "kf/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kf {

int XBound::compare(const Rat& v) const {
    if (kind == Kind::NegInf) return 1;
    if (kind == Kind::PosInf) return -1;
    return compare_with_root(poly, box, v);
}

namespace {

// Values live in a "rank space": the r-th real root of Q is 2r + 1, infinities are +-kInf.
constexpr long kInf = 1L << 40;

struct Ranker {
    UPoly Q;
    std::vector<RootBox> boxes;

    // Index of the Q-root whose open box contains the whole interval, if any.
    std::optional<long> locate(const Rat& lo, const Rat& hi) const {
        for (std::size_t r = 0; r < boxes.size(); ++r)
            if (boxes[r].low < lo && hi <= boxes[r].high) return static_cast<long>(r);
        return std::nullopt;
    }
    // Sign of v minus the r-th root.
    int cmp(const Rat& v, long r) const { return compare_with_root(Q, boxes[static_cast<std::size_t>(r)], v); }
};

// Monotone pieces of a polynomial P, cut at the real roots of P'.
struct Side {
    UPoly P, dP;
    std::vector<RootBox> crit;
    std::vector<long> bval;  // rank-space value at each boundary, -inf end first

    std::size_t pieces() const { return crit.size() + 1; }
    long lo(std::size_t i) const { return std::min(bval[i], bval[i + 1]); }
    long hi(std::size_t i) const { return std::max(bval[i], bval[i + 1]); }
    bool increasing(std::size_t i) const { return bval[i + 1] > bval[i]; }
};

Side make_side(const UPoly& P, const Ranker& rk) {
    Side s;
    s.P = P;
    s.dP = P.derivative();
    if (s.dP.degree() >= 1) s.crit = isolate_real_roots(s.dP);
    const int neg_sign = (P.degree() % 2 == 0) ? P.lead().sign() : -P.lead().sign();
    s.bval.push_back(neg_sign > 0 ? kInf : -kInf);
    for (auto& box : s.crit) {
        for (;;) {
            RatInterval iv = eval_interval(P, box.low, box.high);
            if (auto r = rk.locate(iv.lo, iv.hi)) {
                s.bval.push_back(2 * *r + 1);
                break;
            }
            box = refine_box(s.dP, box, box.width() / Rat(2));
        }
    }
    s.bval.push_back(P.lead().sign() > 0 ? kInf : -kInf);
    return s;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Position of an arc end along the x-line: (boundary, 0) or (piece, offset) for an
// interior fold. Sorting keys sorts x.
struct XKey {
    long piece;
    long offset;
    long value;  // rank-space value for folds
    auto operator<=>(const XKey& o) const { return std::pair(piece, offset) <=> std::pair(o.piece, o.offset); }
    bool operator==(const XKey& o) const { return piece == o.piece && offset == o.offset; }
};

// The unique x in piece i of G with G(x) equal to the r-th root of Q.
RootBox fold_box(const Side& G, std::size_t i, long r, const Ranker& rk) {
    const bool inc = G.increasing(i);
    // want_side: sign of G(x) - v needed at the left end of the bracket.
    const int left_sign = inc ? -1 : 1;
    auto side_ok = [&](const Rat& x, int want) { return rk.cmp(G.P.eval(x), r) == want; };
    Rat xl, xr;
    if (i == 0) {
        Rat start = G.crit.empty() ? Rat(0) : G.crit.front().low;
        Rat step(1);
        xl = start - step;
        while (!side_ok(xl, left_sign)) {
            step *= Rat(2);
            xl = start - step;
        }
    } else {
        xl = G.crit[i - 1].high;
    }
    if (i + 1 == G.pieces()) {
        Rat start = G.crit.empty() ? Rat(0) : G.crit.back().high;
        Rat step(1);
        xr = start + step;
        while (!side_ok(xr, -left_sign)) {
            step *= Rat(2);
            xr = start + step;
        }
    } else {
        xr = G.crit[i].low;
    }
    const RootBox& qb = rk.boxes[static_cast<std::size_t>(r)];
    auto inside = [&](const Rat& a, const Rat& b) {
        Rat ga = G.P.eval(a), gb = G.P.eval(b);
        Rat lo = std::min(ga, gb), hi = std::max(ga, gb);
        return qb.low < lo && hi <= qb.high;
    };
    while (!inside(xl, xr)) {
        Rat m = (xl + xr) / Rat(2);
        int c = rk.cmp(G.P.eval(m), r);
        if (c == 0) {
            Rat delta = (m - xl) / Rat(2);
            while (!inside(m - delta, m)) delta /= Rat(2);
            return {m - delta, m, true};
        }
        if (c == left_sign) xl = m;
        else xr = m;
    }
    return {xl, xr, true};
}

}  // namespace

ComponentCensus real_component_census(const UPoly& g, const Rat& w, const UPoly& h) {
    if (w.is_zero()) throw Error(Errc::Domain, "census needs w != 0");
    if (g.degree() < 1 || h.degree() < 1) throw Error(Errc::Domain, "census needs nonconstant g and h");
    const UPoly G = g * w.inverse();
    const UPoly RG = critical_value_poly(G), Rh = critical_value_poly(h);
    if (gcd(RG, Rh).degree() >= 1) throw Error(Errc::Singular, "curve g(x) = w h(s) is singular");

    Ranker rk;
    rk.Q = squarefree_part(RG * Rh);
    if (rk.Q.degree() >= 1) rk.boxes = isolate_real_roots(rk.Q);

    Side sg = make_side(G, rk), sh = make_side(h, rk);
    const std::size_t ng = sg.pieces(), nh = sh.pieces();
    auto id = [&](std::size_t i, std::size_t j) { return i * nh + j; };

    std::vector<char> arc(ng * nh, 0);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            arc[id(i, j)] = std::max(sg.lo(i), sh.lo(j)) < std::min(sg.hi(i), sh.hi(j));

    UnionFind uf(ng * nh);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j + 1 < nh; ++j) {
            long v = sh.bval[j + 1];
            if (arc[id(i, j)] && arc[id(i, j + 1)] && sg.lo(i) <= v && v <= sg.hi(i)) uf.unite(id(i, j), id(i, j + 1));
        }
    for (std::size_t j = 0; j < nh; ++j)
        for (std::size_t i = 0; i + 1 < ng; ++i) {
            long v = sg.bval[i + 1];
            if (arc[id(i, j)] && arc[id(i + 1, j)] && sh.lo(j) <= v && v <= sh.hi(j)) uf.unite(id(i, j), id(i + 1, j));
        }

    const long span = 4 * static_cast<long>(rk.boxes.size()) + 8;
    auto end_key = [&](std::size_t i, long value, bool low_end) -> XKey {
        // The boundary on the requested x-side of piece i, and its value.
        std::size_t b = low_end ? i : i + 1;
        if (value == sg.bval[b]) return {static_cast<long>(b), 0, value};
        long off = sg.increasing(i) ? value + span : 2 * span - value;
        return {static_cast<long>(i), off, value};
    };

    struct Acc {
        XKey lo, hi;
        bool bounded = true;
    };
    std::map<std::size_t, Acc> comps;
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            if (!arc[id(i, j)]) continue;
            long vlo = std::max(sg.lo(i), sh.lo(j)), vhi = std::min(sg.hi(i), sh.hi(j));
            bool inc = sg.increasing(i);
            XKey klo = end_key(i, inc ? vlo : vhi, true);
            XKey khi = end_key(i, inc ? vhi : vlo, false);
            bool bounded = vlo > -kInf && vhi < kInf;
            auto [it, fresh] = comps.try_emplace(uf.find(id(i, j)), Acc{klo, khi, bounded});
            if (!fresh) {
                it->second.lo = std::min(it->second.lo, klo);
                it->second.hi = std::max(it->second.hi, khi);
                it->second.bounded = it->second.bounded && bounded;
            }
        }

    UPoly fold_poly;
    if (Rh.degree() >= 1) fold_poly = squarefree_part(Rh.compose(G));
    auto materialize = [&](const XKey& k) -> XBound {
        if (k.offset == 0) {
            if (k.piece == 0) return XBound::neg_inf();
            if (k.piece == static_cast<long>(ng)) return XBound::pos_inf();
            return {XBound::Kind::Finite, squarefree_part(sg.dP), sg.crit[static_cast<std::size_t>(k.piece - 1)]};
        }
        RootBox box = fold_box(sg, static_cast<std::size_t>(k.piece), (k.value - 1) / 2, rk);
        return {XBound::Kind::Finite, fold_poly, box};
    };

    std::vector<Acc> ordered;
    for (auto& [root, acc] : comps) ordered.push_back(acc);
    std::sort(ordered.begin(), ordered.end(), [](const Acc& a, const Acc& b) { return a.lo < b.lo; });

    ComponentCensus out;
    out.count = static_cast<int>(ordered.size());
    std::vector<std::size_t> bounded_ids;
    for (const auto& acc : ordered) {
        out.components.push_back({materialize(acc.lo), materialize(acc.hi), acc.bounded});
        if (acc.bounded) bounded_ids.push_back(out.components.size() - 1);
    }
    if (out.count == 2 && bounded_ids.size() == 1) out.oval = bounded_ids.front();
    return out;
}

ComponentCensus census_fiber_t(const UPoly& g, const UPoly& f, const Rat& t0) {
    Rat w = f.eval(t0);
    if (w.is_zero()) throw Error(Errc::DegenerateFiber, "f(t0) = 0 at t0 = " + t0.str());
    return real_component_census(g, w, UPoly::monomial(Rat(1), 2));
}

ComponentCensus census_fiber_y(const QuotientSurface& S, const Rat& y0) {
    if (!S.is_kummer()) throw Error(Errc::Domain, "census_fiber_y needs k = 2, n = 3");
    if (y0.is_zero()) throw Error(Errc::Domain, "census_fiber_y needs y0 != 0");
    return real_component_census(S.g(), y0 * y0, S.f());
}

bool oval_contains(const ComponentCensus& census, const Rat& x) {
    if (census.count != 2 || !census.oval) throw Error(Errc::Domain, "oval_contains needs a two-component census with an oval");
    const Component& c = census.components[*census.oval];
    return c.x_low.compare(x) >= 0 && c.x_high.compare(x) <= 0;
}

bool assumption_bounds_check(const UPoly& g, const UPoly& f, const Rat& t1, const Rat& y0) {
    if (SturmSequence(g).count_total() < 3 || squarefree_part(g).degree() < g.degree()) return true;
    Rat v = f.eval(t1) * y0 * y0;
    UPoly R = critical_value_poly(g);
    if (R.sign_at(v) == 0) return false;
    // The two real roots of R are m < M; v is strictly between them iff one lies below.
    return SturmSequence(R).count_below(v) == 1;
}

Rat census_box_radius(const UPoly& g, const Rat& w, const UPoly& h) {
    const UPoly G = g * w.inverse();
    Rat r(1);
    auto take = [&](const UPoly& p) {
        if (p.degree() >= 1) r = std::max(r, cauchy_bound(p));
    };
    take(G.derivative());
    take(h.derivative());
    take(critical_value_poly(h).compose(G));
    take(critical_value_poly(G).compose(h));
    return r + Rat(1);
}

int sign_grid_components(const UPoly& g, const Rat& w, const UPoly& h, long R, long N,
                         const std::function<void(const Rat&, const Rat&)>& visit) {
    const long M = 2 * R * N + 1;
    std::vector<Rat> A, B;
    A.reserve(static_cast<std::size_t>(M));
    B.reserve(static_cast<std::size_t>(M));
    Int L = 1;
    for (long i = -R * N; i <= R * N; ++i) {
        Rat v{Int(i), Int(N)};
        A.push_back(g.eval(v));
        B.push_back(w * h.eval(v));
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), A.back().den().get_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), B.back().den().get_mpz_t());
    }
    // Common integer scale; comparisons then run on machine words when they fit.
    std::vector<Int> ai, bi;
    bool fits = true;
    for (auto* src : {&A, &B}) {
        auto& dst = src == &A ? ai : bi;
        for (const Rat& v : *src) {
            Int s = v.num() * (L / v.den());
            fits = fits && s.fits_slong_p();
            dst.push_back(std::move(s));
        }
    }
    std::vector<long> a64, b64;
    if (fits) {
        for (auto& v : ai) a64.push_back(v.get_si());
        for (auto& v : bi) b64.push_back(v.get_si());
    }
    auto row_signs = [&](long i, std::vector<signed char>& out) {
        for (long j = 0; j < M; ++j) {
            int s;
            if (fits) {
                long d1 = a64[static_cast<std::size_t>(i)], d2 = b64[static_cast<std::size_t>(j)];
                s = (d1 > d2) - (d1 < d2);
            } else {
                s = cmp(ai[static_cast<std::size_t>(i)], bi[static_cast<std::size_t>(j)]);
                s = (s > 0) - (s < 0);
            }
            out[static_cast<std::size_t>(j)] = static_cast<signed char>(s);
        }
    };

    std::vector<std::size_t> parent;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<signed char> top(static_cast<std::size_t>(M)), bottom(static_cast<std::size_t>(M));
    std::vector<std::size_t> prev(static_cast<std::size_t>(M - 1), none), cur(static_cast<std::size_t>(M - 1), none);
    row_signs(0, bottom);
    for (long i = 0; i + 1 < M; ++i) {
        row_signs(i + 1, top);
        for (long j = 0; j + 1 < M; ++j) {
            auto ju = static_cast<std::size_t>(j);
            int s0 = bottom[ju], s1 = bottom[ju + 1], s2 = top[ju], s3 = top[ju + 1];
            bool marked = !((s0 > 0 && s1 > 0 && s2 > 0 && s3 > 0) || (s0 < 0 && s1 < 0 && s2 < 0 && s3 < 0));
            if (!marked) {
                cur[ju] = none;
                continue;
            }
            if (visit) visit(Rat(Int(i - R * N), Int(N)), Rat(Int(j - R * N), Int(N)));
            std::size_t left = j > 0 ? cur[ju - 1] : none, up = prev[ju];
            if (left == none && up == none) {
                parent.push_back(parent.size());
                cur[ju] = parent.size() - 1;
            } else if (left != none && up != none) {
                std::size_t a = find(left), b = find(up);
                if (a != b) parent[a] = b;
                cur[ju] = b;
            } else {
                cur[ju] = find(left != none ? left : up);
            }
        }
        std::swap(prev, cur);
        std::swap(bottom, top);
    }
    int roots = 0;
    for (std::size_t x = 0; x < parent.size(); ++x)
        if (parent[x] == x) ++roots;
    return roots;
}

}  // namespace kf
