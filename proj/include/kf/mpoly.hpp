#pragma once

/**
 * @file mpoly.hpp
 * @brief Sparse multivariate polynomials over the rationals.
 *
 * Variables come from one fixed alphabet (a, b, c, d, u, x, y, t, X, Y, Z) and that
 * order is also the lex tie-break of the graded lexicographic monomial order. Terms
 * are kept sorted, largest monomial first, with no zero coefficients, so structural
 * equality is polynomial equality.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kf/rational.hpp"
#include "kf/upoly.hpp"

namespace kf {

enum class Var : std::uint8_t { a, b, c, d, u, x, y, t, X, Y, Z };
inline constexpr std::size_t kNumVars = 11;

char var_name(Var v);
Var var_from_name(char c);

using Monomial = std::array<std::uint32_t, kNumVars>;

unsigned total_degree(const Monomial& m);
/// Graded lex comparison: negative when a < b.
int grlex_cmp(const Monomial& a, const Monomial& b);

class MPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MPoly() = default;
    MPoly(const Rat& c);
    MPoly(long c) : MPoly(Rat(c)) {}
    static MPoly var(Var v, unsigned e = 1);
    static MPoly term(const Monomial& m, const Rat& c);
    static MPoly from_upoly(const UPoly& p, Var v);
    /// Takes arbitrary terms; sorts and merges them.
    static MPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const;
    Rat constant_term() const;

    unsigned degree_in(Var v) const;
    unsigned total_degree() const;
    /// Variables that occur, in alphabet order.
    std::vector<Var> vars() const;
    bool uses(Var v) const { return degree_in(v) > 0; }

    /// Coefficients in powers of v (index = exponent), each free of v.
    std::vector<MPoly> coefficients_in(Var v) const;
    static MPoly from_coefficients(const std::vector<MPoly>& cs, Var v);

    UPoly to_upoly(Var v) const;
    /// The single variable of a univariate polynomial (Var::x for constants).
    Var main_var() const;

    Rat eval(const std::map<Var, Rat>& at) const;
    MPoly subs(Var v, const Rat& value) const;
    MPoly subs(Var v, const MPoly& value) const;
    MPoly partial(Var v) const;
    MPoly pow(unsigned e) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Rescaled to integer coefficients with content 1 and positive leading coefficient.
    MPoly primitive() const;
    /// The rational c > 0 with *this == c · primitive() up to sign: returns primitive() and c·sign.
    std::pair<Rat, MPoly> content_split() const;
    /// Largest monomial dividing every term.
    Monomial monomial_content() const;

    /// Canonical machine form, e.g. "3*a*u^2 - 1/2*b".
    std::string str() const;
    /// Compact display form: juxtaposed symbols, positive terms first ("du^6-b", "a-cu^4").
    std::string display() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Greatest common divisor, normalized by primitive() (zero iff both are zero).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace kf
