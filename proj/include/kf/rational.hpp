#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals backed by GMP.
 *
 * Rat is always in lowest terms with a positive denominator, and zero is 0/1.
 * Serialized as "p/q", or "n" when the denominator is one.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "kf/error.hpp"

namespace kf {

using Int = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}
    Rat(int v) : q_(static_cast<long>(v)) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& n, const Int& d);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n", "-n", "p/q". Throws ParseError on malformed input or zero denominator.
    static Rat parse(std::string_view s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const;
    Rat pow(long e) const;

    /// max(|num|, den); the naive height used to order rationals.
    Int height() const;
    /// Bit size of num·den; a cheap size measure for logging and caps.
    std::size_t bits() const;

    std::string str() const;
    double approx() const { return q_.get_d(); }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Int ipow(const Int& base, unsigned long e);

/// Simplest rational (least denominator, then least |numerator|) in the open interval (lo, hi).
Rat simplest_between(const Rat& lo, const Rat& hi);

/// Direction of a candidate relative to a target set on the rational line.
enum class Where { Left, Inside, Right };

/**
 * Stern-Brocot descent for the simplest positive rational accepted by `where`.
 * `where` must describe an open interval (possibly unbounded above) of the positive
 * reals: Left for candidates below it, Right above. Runs of equal moves are galloped,
 * so the cost is logarithmic in the partial quotients.
 */
Rat simplest_positive(const std::function<Where(const Rat&)>& where);

}  // namespace kf

template <>
struct std::hash<kf::Rat> {
    std::size_t operator()(const kf::Rat& r) const noexcept;
};
