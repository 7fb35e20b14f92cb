#include "kf/cubic.hpp"

namespace kf {

namespace {

constexpr std::array<std::array<unsigned, 3>, 10> kMonomials{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

const Var kXYZ[3] = {Var::X, Var::Y, Var::Z};

Monomial mono(unsigned i, unsigned j, unsigned k) {
    Monomial m{};
    m[static_cast<std::size_t>(Var::X)] = i;
    m[static_cast<std::size_t>(Var::Y)] = j;
    m[static_cast<std::size_t>(Var::Z)] = k;
    return m;
}

std::array<Rat, 3> cross(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_null(const std::array<Rat, 3>& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Rat dot(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::array<Rat, 3> combine(const Rat& s, const std::array<Rat, 3>& a, const Rat& t, const std::array<Rat, 3>& b) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

// Coefficient row of a ternary quadric in the basis X^2, Y^2, Z^2, XY, XZ, YZ.
std::vector<Rat> quadric_row(const MPoly& q) {
    const Monomial basis[6] = {mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2), mono(1, 1, 0), mono(1, 0, 1), mono(0, 1, 1)};
    std::vector<Rat> row(6, Rat(0));
    for (const auto& [m, c] : q.terms()) {
        bool placed = false;
        for (std::size_t i = 0; i < 6; ++i)
            if (m == basis[i]) {
                row[i] = c;
                placed = true;
            }
        if (!placed) throw Error(Errc::Internal, "quadric_row: not a ternary quadric");
    }
    return row;
}

void require_on(const PlaneCubic& C, const ProjPoint& P) {
    if (!C.contains(P)) throw Error(Errc::NotOnCurve, "point " + P.str() + " is not on the cubic");
}

}  // namespace

ProjPoint::ProjPoint(const Rat& X, const Rat& Y, const Rat& Z) : c_{X, Y, Z} {
    int last = 2;
    while (last >= 0 && c_[static_cast<std::size_t>(last)].is_zero()) --last;
    if (last < 0) throw Error(Errc::Domain, "projective point with all coordinates zero");
    Rat s = c_[static_cast<std::size_t>(last)];
    for (auto& v : c_) v /= s;
}

std::string ProjPoint::str() const { return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")"; }

std::array<unsigned, 3> cubic_monomial(std::size_t i) { return kMonomials.at(i); }

PlaneCubic::PlaneCubic(const std::array<Rat, 10>& coeffs) : c_(coeffs) {
    bool zero = true;
    for (const auto& v : c_) zero = zero && v.is_zero();
    if (zero) throw Error(Errc::Domain, "the zero cubic form");
}

PlaneCubic PlaneCubic::from_mpoly(const MPoly& F) {
    std::array<Rat, 10> c;
    for (const auto& [m, v] : F.terms()) {
        bool placed = false;
        for (std::size_t i = 0; i < 10; ++i) {
            const auto& e = kMonomials[i];
            if (m == mono(e[0], e[1], e[2])) {
                c[i] = v;
                placed = true;
            }
        }
        if (!placed) throw Error(Errc::Domain, "not a homogeneous cubic in X, Y, Z: " + F.str());
    }
    return PlaneCubic(c);
}

MPoly PlaneCubic::to_mpoly() const {
    std::vector<MPoly::Term> terms;
    for (std::size_t i = 0; i < 10; ++i)
        if (!c_[i].is_zero()) terms.emplace_back(mono(kMonomials[i][0], kMonomials[i][1], kMonomials[i][2]), c_[i]);
    return MPoly::from_terms(std::move(terms));
}

Rat PlaneCubic::eval(const std::array<Rat, 3>& p) const {
    Rat s(0);
    for (std::size_t i = 0; i < 10; ++i) {
        if (c_[i].is_zero()) continue;
        const auto& e = kMonomials[i];
        s += c_[i] * p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]);
    }
    return s;
}

std::array<Rat, 3> PlaneCubic::gradient(const std::array<Rat, 3>& p) const {
    std::array<Rat, 3> g{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < 10; ++i) {
        if (c_[i].is_zero()) continue;
        const auto& e = kMonomials[i];
        for (std::size_t v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            auto f = e;
            --f[v];
            g[v] += c_[i] * Rat(static_cast<long>(e[v])) * p[0].pow(f[0]) * p[1].pow(f[1]) * p[2].pow(f[2]);
        }
    }
    return g;
}

PlaneCubic weierstrass_cubic(const WeierstrassCurve& E) {
    std::array<Rat, 10> c;
    c[0] = Rat(-1);   // X^3
    c[5] = -E.A;      // XZ^2
    c[7] = Rat(1);    // Y^2 Z
    c[9] = -E.B;      // Z^3
    return PlaneCubic(c);
}

ProjPoint to_proj(const ECPoint& P) {
    if (P.is_infinity()) return ProjPoint(Rat(0), Rat(1), Rat(0));
    return ProjPoint::affine(P.x(), P.y());
}

bool cubic_is_smooth(const PlaneCubic& C) {
    MPoly F = C.to_mpoly();
    MPoly d[3];
    for (int i = 0; i < 3; ++i) d[i] = F.partial(kXYZ[i]);
    // Jacobian determinant of (F_X, F_Y, F_Z): the Hessian of F.
    MPoly h[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = d[i].partial(kXYZ[j]);
    MPoly J = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
              h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(quadric_row(d[i]));
    for (int i = 0; i < 3; ++i) rows.push_back(quadric_row(J.partial(kXYZ[i])));
    return !determinant(rows).is_zero();
}

ProjPoint chord(const PlaneCubic& C, const ProjPoint& A, const ProjPoint& B) {
    require_on(C, A);
    require_on(C, B);
    const auto& a = A.coords();
    const auto& b = B.coords();
    if (A != B) {
        // F(sA + tB) = st(alpha s + beta t) since F(A) = F(B) = 0.
        Rat alpha = dot(b, C.gradient(a)), beta = dot(a, C.gradient(b));
        if (alpha.is_zero() && beta.is_zero())
            throw Error(Errc::Internal, "line through " + A.str() + " and " + B.str() + " lies in the cubic");
        auto r = combine(beta, a, -alpha, b);
        return ProjPoint(r[0], r[1], r[2]);
    }
    auto g = C.gradient(a);
    if (is_null(g)) throw Error(Errc::Singular, "gradient vanishes at " + A.str());
    // A second point D on the tangent line g . v = 0.
    std::array<Rat, 3> dpt;
    for (std::size_t i = 0; i < 3; ++i) {
        std::array<Rat, 3> e{Rat(0), Rat(0), Rat(0)};
        e[i] = Rat(1);
        dpt = cross(g, e);
        if (!is_null(dpt) && !is_null(cross(dpt, a))) break;
    }
    // F(sA + tD) = t^2 (gamma s + F(D) t).
    Rat gamma = dot(a, C.gradient(dpt)), fd = C.eval(dpt);
    if (gamma.is_zero() && fd.is_zero()) throw Error(Errc::Internal, "tangent at " + A.str() + " lies in the cubic");
    auto r = combine(fd, a, -gamma, dpt);
    return ProjPoint(r[0], r[1], r[2]);
}

ProjPoint chord_next(const PlaneCubic& C, const ProjPoint& Q, const ProjPoint& P, const ProjPoint& T) {
    return chord(C, chord(C, Q, P), T);
}

ProjPoint chord_prev(const PlaneCubic& C, const ProjPoint& Q, const ProjPoint& P, const ProjPoint& T) {
    return chord(C, chord(C, Q, T), P);
}

std::vector<ProjPoint> chord_sequence(const PlaneCubic& C, const ProjPoint& P, long N) {
    require_on(C, P);
    if (!cubic_is_smooth(C)) throw Error(Errc::Singular, "chord_sequence: cubic is singular");
    std::vector<ProjPoint> out{P};
    if (N == 0) return out;
    ProjPoint T = chord(C, P, P);
    const long steps = N < 0 ? -N : N;
    for (long i = 0; i < steps; ++i)
        out.push_back(N > 0 ? chord_next(C, out.back(), P, T) : chord_prev(C, out.back(), P, T));
    return out;
}

ChordTorsionVerdict chord_torsion_test(const PlaneCubic& C, const ProjPoint& P) {
    auto seq = chord_sequence(C, P, kChordDepth);
    ChordTorsionVerdict v;
    for (std::size_t n = 1; n < seq.size(); ++n) {
        if (seq[n] == seq[0]) {
            v.torsion = true;
            v.period = static_cast<int>(n);
            seq.erase(seq.begin() + static_cast<long>(n) + 1, seq.end());
            break;
        }
    }
    if (!v.torsion) {
        // Pairwise distinctness of Q_0..Q_12.
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[i] == seq[j]) throw Error(Errc::Internal, "chord sequence repeats without returning to Q_0");
    }
    v.points = std::move(seq);
    return v;
}

}  // namespace kf
