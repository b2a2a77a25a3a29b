#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genus {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit on purpose
    Rational(long num, long den);

    /// Parses "p" or "p/q" (optional leading '-'); throws InputError.
    static Rational parse(std::string_view text);

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;

    [[nodiscard]] std::string numerator() const;
    [[nodiscard]] std::string denominator() const;

    /// Integer value; throws InputError if not an integer or out of range.
    [[nodiscard]] std::int64_t to_int64() const;

    /// Canonical "p/q" form, "p" when q = 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] static Rational binomial(long n, long k);
    [[nodiscard]] static Rational factorial(long n);
    [[nodiscard]] static Rational pow(const Rational &base, unsigned exp);

    /// Least common multiple of the denominators of a and b (as integer).
    [[nodiscard]] static Rational lcm_den(const Rational &a, const Rational &b);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

}  // namespace genus
