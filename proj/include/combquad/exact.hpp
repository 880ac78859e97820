#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <map>
#include <string>

#include <gmpxx.h>

#include "combquad/rational.hpp"
#include "combquad/real.hpp"

namespace combquad {

/// Largest integer surd_canonicalize will factor by trial division.
mpz_class default_factorization_bound();

/**
 * Exact number r + sum_d c_d * sqrt(d) with rational r, c_d and squarefree d >= 2.
 *
 * Always canonical: keys are squarefree, no stored coefficient is zero, so two
 * values are equal exactly when their parts are equal. The set is closed under
 * +, -, * and division by nonzero values (sqrt(a)*sqrt(b) reduces to g*sqrt(ab/g^2)).
 * Sign and ordering are decided exactly.
 */
class ExactScalar {
public:
    using SurdMap = std::map<mpz_class, Rational>;

    ExactScalar() = default;
    ExactScalar(Rational r) : rational_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    ExactScalar(T v) : rational_(v) {}  // NOLINT(google-explicit-constructor)

    /// coefficient * sqrt(d); d must already be squarefree (>= 1).
    static ExactScalar surd(Rational coefficient, const mpz_class& squarefree);

    const Rational& rational_part() const noexcept { return rational_; }
    const SurdMap& surd_terms() const noexcept { return surds_; }

    bool is_rational() const noexcept { return surds_.empty(); }
    bool is_zero() const noexcept { return surds_.empty() && rational_.is_zero(); }
    /// The rational value; RepresentationError when surd terms are present.
    const Rational& as_rational() const;

    int sign() const;
    ExactScalar inverse() const;
    ExactScalar pow(unsigned long exponent) const;

    Real to_real(mpfr_prec_t bits) const;
    /// Readable form such as "1/2 + 1/3*sqrt(3)".
    std::string to_string() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.rational_ == b.rational_ && a.surds_ == b.surds_;
    }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

private:
    void add_surd(const mpz_class& key, const Rational& coefficient);

    Rational rational_;
    SurdMap surds_;
};

/// sqrt(s) in canonical form, s > 0. Factors numerator*denominator by trial division up to `bound`.
ExactScalar surd_canonicalize(const Rational& s, const mpz_class& bound = default_factorization_bound());

/// x^j. Named for symmetry with the other module operations.
inline ExactScalar scalar_pow(const ExactScalar& x, unsigned long j) { return x.pow(j); }

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace combquad
