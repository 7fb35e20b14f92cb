#include "kf/upoly.hpp"

#include <sstream>

namespace kf {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, std::size_t deg) {
    std::vector<Rat> v(deg + 1);
    v[deg] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UPoly::coeff(std::size_t i) const {
    static const Rat zero;
    return i < c_.size() ? c_[i] : zero;
}

const Rat& UPoly::lead() const {
    if (c_.empty()) throw Error(Errc::Domain, "leading coefficient of zero polynomial");
    return c_.back();
}

Rat UPoly::eval(const Rat& v) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v.raw() + it->raw();
    return Rat(acc);
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * lead().inverse();
}

UPoly UPoly::primitive() const {
    if (is_zero()) return {};
    Int l = 1, g = 0;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) {
        Int n = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.emplace_back(n);
    }
    if (v.back().sign() < 0) g = -g;
    Rat inv(Int(1), g);
    for (auto& c : v) c *= inv;
    return UPoly(std::move(v));
}

UPoly UPoly::compose_affine(const Rat& s, const Rat& t) const {
    UPoly inner{t, s};
    return compose(inner);
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = constant(Rat(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rat> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(q);
    return UPoly(std::move(out));
}

std::string UPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rat mag = c.abs();
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        bool unit = mag == Rat(1);
        if (!unit || i == 0) os << mag;
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(Errc::Domain, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<mpq_class> r;
    for (const auto& c : a.coeffs()) r.push_back(c.raw());
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<mpq_class> q(r.size() - db, mpq_class(0));
    mpq_class inv = 1 / b.lead().raw();
    for (std::size_t k = r.size(); k-- > db;) {
        if (sgn(r[k]) == 0) continue;
        mpq_class f = r[k] * inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j].raw();
    }
    std::vector<Rat> qv, rv;
    for (auto& v : q) qv.emplace_back(v);
    for (std::size_t i = 0; i < db; ++i) rv.emplace_back(r[i]);
    return {UPoly(std::move(qv)), UPoly(std::move(rv))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(UPoly a, UPoly b) {
    // Primitive parts keep coefficient growth in check.
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        UPoly r = (a % b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    UPoly g = gcd(p, p.derivative());
    return (p / g).primitive();
}

Rat resultant(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    if (a.degree() == 0) return a.lead().pow(b.degree());
    if (b.degree() == 0) return b.lead().pow(a.degree());
    // res(a, b) = (-1)^(deg a · deg b) · lc(b)^(deg a - deg r) · res(b, r), r = a mod b
    UPoly r = a % b;
    if (r.is_zero()) return Rat(0);
    Rat sign = ((a.degree() * b.degree()) % 2) ? Rat(-1) : Rat(1);
    return sign * b.lead().pow(a.degree() - r.degree()) * resultant(b, r);
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw Error(Errc::Internal, "interpolate: size mismatch");
    UPoly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis = UPoly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly{-xs[j], Rat(1)};
            denom *= xs[i] - xs[j];
        }
        out += basis * (ys[i] / denom);
    }
    return out;
}

UPoly critical_value_poly(const UPoly& p) {
    if (p.degree() < 1) throw Error(Errc::Domain, "critical values of a constant polynomial");
    const int n = p.degree();
    UPoly dp = p.derivative();
    std::vector<Rat> xs, ys;
    for (int i = 0; i < n; ++i) {
        xs.emplace_back(i);
        ys.push_back(resultant(dp, p - UPoly::constant(Rat(i))));
    }
    return interpolate(xs, ys);
}

}  // namespace kf
