#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "combquad/rational.hpp"

namespace combquad {

/// Binary precision (bits) needed to carry `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(long digits);

/**
 * Owning arbitrary-precision binary float (MPFR), round-to-nearest-even.
 *
 * Each value carries its own precision; binary operations produce a result
 * at the larger of the operand precisions.
 */
class Real {
public:
    explicit Real(mpfr_prec_t bits = 64);
    Real(long value, mpfr_prec_t bits);
    Real(const Rational& value, mpfr_prec_t bits);
    /// Decimal literal, rounded to `bits`.
    Real(const std::string& decimal, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Copy rounded to `bits`.
    Real rounded(mpfr_prec_t bits) const;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// The exact dyadic rational this float represents. Requires a finite value.
    Rational to_rational() const;
    /// Scientific notation with `digits` significant digits, e.g. "-1.2400e-61".
    std::string to_scientific(int digits) const;
    /// Positional notation with `digits` significant digits, e.g. "3.14159".
    std::string to_fixed(int digits) const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real atan(const Real& x);
Real pow(const Real& x, long exponent);
Real floor(const Real& x);

/// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239), series summed with guard bits.
Real machin_pi(mpfr_prec_t bits);

/**
 * Working precision for float evaluation. Computation runs at
 * precisionDigits + guardDigits; results are rounded back to precisionDigits.
 */
struct NumericContext {
    static constexpr long guardDigits = 10;

    long precisionDigits = 30;

    mpfr_prec_t result_bits() const { return bits_for_digits(precisionDigits); }
    mpfr_prec_t working_bits() const { return bits_for_digits(precisionDigits + guardDigits); }
    Real round(const Real& x) const { return x.rounded(result_bits()); }
};

}  // namespace combquad
