#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * Values are always kept in canonical form: the denominator is positive and
 * coprime to the numerator, zero is 0/1. Text form is "p/q" or "p" for
 * integers.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace pk {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;

    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

} // namespace pk
