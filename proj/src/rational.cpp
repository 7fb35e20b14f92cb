#include "kf/rational.hpp"

#include <cctype>

namespace kf {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::Parse: return "parse";
        case Errc::Domain: return "domain";
        case Errc::NotOnCurve: return "not-on-curve";
        case Errc::Pole: return "pole";
        case Errc::DegenerateFiber: return "degenerate-fiber";
        case Errc::Singular: return "singular";
        case Errc::FactorLimit: return "factor-limit";
        case Errc::SeedTorsion: return "seed-torsion";
        case Errc::CapExceeded: return "cap-exceeded";
        case Errc::Internal: return "internal";
    }
    return "internal";
}

Rat::Rat(const Int& n, const Int& d) {
    if (d == 0) throw Error(Errc::Domain, "rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(std::string_view s) {
    if (!valid_integer(s)) throw Error(Errc::Parse, "malformed rational '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    std::string_view ds = s.substr(slash + 1);
    if (!ds.empty() && (ds[0] == '-' || ds[0] == '+'))
        throw Error(Errc::Parse, "malformed rational '" + std::string(s) + "'");
    Int d = parse_int(ds);
    if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(s) + "'");
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(Errc::Domain, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error(Errc::Domain, "inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return Rat(ipow(num(), static_cast<unsigned long>(e)), ipow(den(), static_cast<unsigned long>(e)));
}

Int Rat::height() const {
    Int n = ::abs(q_.get_num());
    return n > q_.get_den() ? n : Int(q_.get_den());
}

std::size_t Rat::bits() const {
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi via continued fractions.
Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    Rat next(Int(fl + 1));
    if (next < hi) return next;
    // fl < lo < hi <= fl + 1
    Rat flr(fl);
    Rat l = lo - flr;
    Rat h = hi - flr;
    if (l.is_zero()) {
        // (0, h): simplest is 1/m with m the least integer > 1/h
        Rat inv = h.inverse();
        Int m;
        mpz_fdiv_q(m.get_mpz_t(), inv.num().get_mpz_t(), inv.den().get_mpz_t());
        return flr + Rat(Int(1), Int(m + 1));
    }
    return flr + simplest_nonneg(h.inverse(), l.inverse()).inverse();
}

}  // namespace

Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error(Errc::Domain, "simplest_between: empty interval");
    if (lo.sign() < 0 && hi.sign() > 0) return Rat(0);
    if (hi.sign() <= 0) return -simplest_nonneg(-hi, -lo);
    return simplest_nonneg(lo, hi);
}

Rat simplest_positive(const std::function<Where(const Rat&)>& where) {
    // Bounds L = ln/ld (left of the target) and R = rn/rd (right of it; 1/0 is +inf).
    Int ln = 0, ld = 1, rn = 1, rd = 0;
    for (;;) {
        Int mn = ln + rn, md = ld + rd;
        Rat m(mn, md);
        Where w = where(m);
        if (w == Where::Inside) return m;
        // Gallop: apply the same move k times while the answer stays on the same side.
        auto probe = [&](const Int& k) {
            return w == Where::Left ? Rat(Int(ln + k * rn), Int(ld + k * rd))
                                    : Rat(Int(rn + k * ln), Int(rd + k * ld));
        };
        Int lo = 1, hi = 2;
        while (where(probe(hi)) == w) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            if (where(probe(mid)) == w) lo = mid;
            else hi = mid;
        }
        if (w == Where::Left) {
            ln += lo * rn;
            ld += lo * rd;
        } else {
            rn += lo * ln;
            rd += lo * ld;
        }
    }
}

}  // namespace kf

std::size_t std::hash<kf::Rat>::operator()(const kf::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
