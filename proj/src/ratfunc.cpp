#include "kf/ratfunc.hpp"

namespace kf {

namespace {

MPoly quo(const MPoly& a, const MPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(Errc::Internal, "gcd does not divide operand");
    return *q;
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw Error(Errc::Domain, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    MPoly g = gcd(num, den);
    num_ = quo(num, g);
    den_ = quo(den, g);
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    auto [scale, prim] = den_.content_split();
    den_ = std::move(prim);
    num_ *= scale.inverse();
}

Rat RatFunc::eval(const std::map<Var, Rat>& at) const {
    Rat d = den_.eval(at);
    if (d.is_zero()) throw Error(Errc::Pole, "denominator " + den_.str() + " vanishes");
    return num_.eval(at) / d;
}

RatFunc RatFunc::subs(Var v, const RatFunc& value) const {
    auto substitute = [&](const MPoly& p) {
        auto cs = p.coefficients_in(v);
        RatFunc acc;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + RatFunc(*it);
        return acc;
    };
    return substitute(num_) / substitute(den_);
}

RatFunc RatFunc::pow(unsigned e) const {
    // Coprime num/den stay coprime under powers.
    RatFunc r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    r.canonicalize();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw Error(Errc::Domain, "inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_ == b.den_) {
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }
    MPoly da = quo(a.den_, g), db = quo(b.den_, g);
    MPoly t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return RatFunc();
    MPoly g2 = gcd(t, g);
    r.num_ = quo(t, g2);
    r.den_ = da * quo(b.den_, g2);
    r.canonicalize();
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = quo(a.num_, g1) * quo(b.num_, g2);
    r.den_ = quo(a.den_, g2) * quo(b.den_, g1);
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_ == MPoly(Rat(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

bool single_term(const MPoly& p) { return p.terms().size() == 1; }

std::string mono_display(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        s += var_name(static_cast<Var>(i));
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string RatFunc::display(bool latex) const {
    MPoly n = num_, d = den_;
    if (!n.is_zero() && n.lead().second.sign() < 0) {
        n = -n;
        d = -d;
    }
    if (d.is_constant()) {
        Rat c = d.constant_term();
        n *= c.inverse();
        return n.display();
    }
    // Pull a monomial factor out of the denominator: u^2(a-cu^4).
    Monomial mc = d.monomial_content();
    std::string den_s;
    if (total_degree(mc) > 0 && !single_term(d)) {
        MPoly rest = *divide_exact(d, MPoly::term(mc, Rat(1)));
        den_s = mono_display(mc) + "(" + rest.display() + ")";
    } else {
        den_s = d.display();
    }
    std::string num_s = n.display();
    if (latex) return "\\frac{" + num_s + "}{" + den_s + "}";
    auto wrap = [](const std::string& s, bool needed) { return needed ? "(" + s + ")" : s; };
    bool den_plain = single_term(d) && d.lead().second == Rat(1);
    return wrap(num_s, !single_term(n)) + "/" + wrap(den_s, !den_plain);
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

}  // namespace kf
