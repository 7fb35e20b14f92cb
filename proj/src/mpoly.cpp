#include "kf/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace kf {

namespace {

constexpr char kNames[kNumVars] = {'a', 'b', 'c', 'd', 'u', 'x', 'y', 't', 'X', 'Y', 'Z'};

struct MonoHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m) h = (h ^ e) * 1099511628211ull;
        return h;
    }
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

char var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

Var var_from_name(char c) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kNames[i] == c) return static_cast<Var>(i);
    throw Error(Errc::Parse, std::string("unknown variable '") + c + "'");
}

unsigned total_degree(const Monomial& m) {
    unsigned s = 0;
    for (auto e : m) s += e;
    return s;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(Var v, unsigned e) {
    Monomial m{};
    m[static_cast<std::size_t>(v)] = e;
    return term(m, Rat(1));
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

MPoly MPoly::from_upoly(const UPoly& p, Var v) {
    std::vector<Term> ts;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        Monomial m{};
        m[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(i);
        ts.emplace_back(m, c);
    }
    MPoly r;
    r.terms_ = std::move(ts);
    return r;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    MPoly r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
        else out.push_back(std::move(t));
        if (out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && kf::total_degree(terms_[0].first) == 0);
}

const MPoly::Term& MPoly::lead() const {
    if (terms_.empty()) throw Error(Errc::Domain, "leading term of zero polynomial");
    return terms_.front();
}

Rat MPoly::constant_term() const {
    if (!terms_.empty() && kf::total_degree(terms_.back().first) == 0) return terms_.back().second;
    return Rat(0);
}

unsigned MPoly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(v)]);
    return d;
}

unsigned MPoly::total_degree() const {
    return terms_.empty() ? 0 : kf::total_degree(terms_.front().first);
}

std::vector<Var> MPoly::vars() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (degree_in(static_cast<Var>(i)) > 0) out.push_back(static_cast<Var>(i));
    return out;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
    const auto vi = static_cast<std::size_t>(v);
    std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[vi] = 0;
        buckets[m[vi]].emplace_back(r, c);
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

MPoly MPoly::from_coefficients(const std::vector<MPoly>& cs, Var v) {
    std::vector<Term> ts;
    const auto vi = static_cast<std::size_t>(v);
    for (std::size_t e = 0; e < cs.size(); ++e)
        for (const auto& [m, c] : cs[e].terms_) {
            Monomial r = m;
            r[vi] += static_cast<std::uint32_t>(e);
            ts.emplace_back(r, c);
        }
    return from_terms(std::move(ts));
}

Var MPoly::main_var() const {
    auto vs = vars();
    if (vs.size() > 1) throw Error(Errc::Domain, "polynomial is not univariate: " + str());
    return vs.empty() ? Var::x : vs.front();
}

UPoly MPoly::to_upoly(Var v) const {
    const auto vi = static_cast<std::size_t>(v);
    std::vector<Rat> cs(degree_in(v) + 1);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (i != vi && m[i] != 0)
                throw Error(Errc::Domain, "polynomial is not univariate in " + std::string(1, var_name(v)));
        cs[m[vi]] += c;
    }
    return UPoly(std::move(cs));
}

Rat MPoly::eval(const std::map<Var, Rat>& at) const {
    mpq_class acc = 0;
    std::array<std::vector<mpq_class>, kNumVars> powers;
    for (const auto& [m, c] : terms_) {
        mpq_class tv = c.raw();
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            auto it = at.find(static_cast<Var>(i));
            if (it == at.end())
                throw Error(Errc::Domain, std::string("no value for variable ") + kNames[i]);
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(mpq_class(1));
            while (pw.size() <= m[i]) pw.push_back(pw.back() * it->second.raw());
            tv *= pw[m[i]];
        }
        acc += tv;
    }
    return Rat(acc);
}

MPoly MPoly::subs(Var v, const Rat& value) const {
    const auto vi = static_cast<std::size_t>(v);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[vi] = 0;
        ts.emplace_back(r, c * value.pow(m[vi]));
    }
    return from_terms(std::move(ts));
}

MPoly MPoly::subs(Var v, const MPoly& value) const {
    auto cs = coefficients_in(v);
    MPoly acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + *it;
    return acc;
}

MPoly MPoly::partial(Var v) const {
    const auto vi = static_cast<std::size_t>(v);
    std::vector<Term> ts;
    for (const auto& [m, c] : terms_) {
        if (m[vi] == 0) continue;
        Monomial r = m;
        r[vi] -= 1;
        ts.emplace_back(r, c * Rat(static_cast<long>(m[vi])));
    }
    return from_terms(std::move(ts));
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(Rat(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size() ? -1
              : j == o.terms_.size() ? 1
                                     : grlex_cmp(terms_[i].first, o.terms_[j].first);
        if (c > 0) out.push_back(std::move(terms_[i++]));
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) out.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rat& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& t : terms_) t.second *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<Monomial, mpq_class, MonoHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[mono_mul(ma, mb)] += ca.raw() * cb.raw();
    std::vector<MPoly::Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) ts.emplace_back(m, Rat(c));
    MPoly r;
    r.terms_ = std::move(ts);
    r.normalize();
    return r;
}

std::pair<Rat, MPoly> MPoly::content_split() const {
    if (is_zero()) return {Rat(0), MPoly{}};
    Int l = 1, g = 0;
    for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& [m, c] : terms_) {
        Int n = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (terms_.front().second.sign() < 0) g = -g;
    Rat scale(g, l);  // *this == scale · primitive
    return {scale, *this * scale.inverse()};
}

MPoly MPoly::primitive() const { return content_split().second; }

Monomial MPoly::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial r = terms_.front().first;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i) r[i] = std::min(r[i], m[i]);
    return r;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c.abs();
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        bool unit = mag == Rat(1);
        bool any = false;
        if (!unit || kf::total_degree(m) == 0) {
            os << mag;
            any = true;
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (any) os << "*";
            os << kNames[i];
            if (m[i] > 1) os << "^" << m[i];
            any = true;
        }
    }
    return os.str();
}

std::string MPoly::display() const {
    if (is_zero()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_)
        if (t.second.sign() > 0) order.push_back(&t);
    for (const auto& t : terms_)
        if (t.second.sign() < 0) order.push_back(&t);
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        const auto& [m, c] = *t;
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        Rat mag = c.abs();
        if (mag != Rat(1) || kf::total_degree(m) == 0) {
            if (mag.is_integer() || kf::total_degree(m) == 0) os << mag;
            else os << "(" << mag << ")";
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            os << kNames[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(Errc::Domain, "polynomial division by zero");
    if (a.is_zero()) return MPoly{};
    const auto& [lb, cb] = b.lead();
    mpq_class inv = 1 / cb.raw();
    std::map<Monomial, mpq_class, GrlexGreater> rem;
    for (const auto& [m, c] : a.terms()) rem.emplace(m, c.raw());
    std::vector<MPoly::Term> quo;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!mono_divides(lb, it->first)) return std::nullopt;
        Monomial qm = mono_div(it->first, lb);
        mpq_class qc = it->second * inv;
        quo.emplace_back(qm, Rat(qc));
        for (const auto& [m, c] : b.terms()) {
            Monomial pm = mono_mul(qm, m);
            auto [pos, inserted] = rem.try_emplace(pm, 0);
            pos->second -= qc * c.raw();
            if (sgn(pos->second) == 0) rem.erase(pos);
        }
    }
    return MPoly::from_terms(std::move(quo));
}

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(Errc::Internal, "expected exact division");
    return *q;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, Var v) {
    MPoly g;
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() : gcd_rec(g, c);
        if (g.is_constant()) return MPoly(Rat(1));
    }
    return g;
}

// lc(b)^(deg a - deg b + 1) · a mod b, in the variable v.
MPoly pseudo_rem(MPoly a, const MPoly& b, Var v) {
    auto bc = b.coefficients_in(v);
    const unsigned db = static_cast<unsigned>(bc.size() - 1);
    const MPoly& lb = bc.back();
    while (!a.is_zero() && a.degree_in(v) >= db) {
        unsigned da = a.degree_in(v);
        MPoly la = a.coefficients_in(v).back();
        a = a * lb - la * MPoly::var(v, da - db) * b;
    }
    return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
    if (divide_exact(a, b)) return b.primitive();
    if (divide_exact(b, a)) return a.primitive();

    Monomial ma = a.monomial_content(), mb = b.monomial_content(), mg{};
    bool has_mono = false;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        mg[i] = std::min(ma[i], mb[i]);
        has_mono = has_mono || ma[i] || mb[i];
    }
    if (has_mono) {
        MPoly ar = exact(a, MPoly::term(ma, Rat(1)));
        MPoly br = exact(b, MPoly::term(mb, Rat(1)));
        return (MPoly::term(mg, Rat(1)) * gcd_rec(ar, br)).primitive();
    }

    // Main variable: shared, with the smallest degree.
    std::optional<Var> main;
    unsigned best = ~0u;
    for (Var v : a.vars()) {
        unsigned db = b.degree_in(v);
        if (db == 0) continue;
        unsigned d = std::max(a.degree_in(v), db);
        if (d < best) {
            best = d;
            main = v;
        }
    }
    // Disjoint variable sets: a common divisor lives in neither ring, so it is a unit.
    if (!main) return MPoly(Rat(1));
    Var v = *main;
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly g_cont = gcd_rec(ca, cb);
    MPoly pa = exact(a, ca), pb = exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (pb.degree_in(v) > 0) {
        MPoly r = pseudo_rem(pa, pb, v);
        if (r.is_zero()) break;
        pa = std::move(pb);
        pb = r.degree_in(v) == 0 ? MPoly(Rat(1)) : exact(r, content_in(r, v));
    }
    MPoly pp = pb.degree_in(v) == 0 ? MPoly(Rat(1)) : pb;
    return (g_cont * pp).primitive();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return gcd_rec(a, b); }

}  // namespace kf
