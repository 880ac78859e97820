#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace combquad {

/**
 * Arbitrary-size rational number, always held in lowest terms with a
 * positive denominator. Zero is 0/1.
 *
 * Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
 * so structural equality is numeric equality.
 */
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& num) : q_(num) {}
    explicit Rational(mpq_class q);

    /// Accepts "p/q", "p", and exact decimals "-1.25", "3e-4", "0.5E2".
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(q_)); }
    Rational inverse() const;
    Rational pow(unsigned long exponent) const;

    double to_double() const { return q_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(Reduced{}, mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct Reduced {};
    // Caller guarantees q is already canonical.
    Rational(Reduced, mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace combquad
