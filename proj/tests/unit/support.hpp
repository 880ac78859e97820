#pragma once

// Shared helpers and independent oracles for the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>
#include <mpfr.h>

#include "combquad/exact.hpp"
#include "combquad/rational.hpp"
#include "combquad/real.hpp"
#include "combquad/rules.hpp"

namespace testing {

using combquad::ExactScalar;
using combquad::QuadPoint;
using combquad::QuadRule;
using combquad::Rational;
using combquad::Real;

inline Rational R(const char* text) { return Rational::parse(text); }

inline ExactScalar sqrt_of(const char* radicand) { return combquad::surd_canonicalize(R(radicand)); }

/// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

    /// Random p/q with |p| <= maxNum, 1 <= q <= maxDen.
    Rational rational(long maxNum, long maxDen) {
        return Rational(mpz_class(integer(-maxNum, maxNum)), mpz_class(integer(1, maxDen)));
    }

    /// Random rational strictly inside (lo, hi).
    Rational rational_in(const Rational& lo, const Rational& hi, long den = 997) {
        const long k = integer(1, den - 1);
        return lo + (hi - lo) * Rational(mpz_class(k), mpz_class(den));
    }

    /// Distinct rationals in [-1,1].
    std::vector<Rational> distinct_nodes(std::size_t n, long den = 64) {
        std::vector<Rational> out;
        while (out.size() < n) {
            const Rational x(mpz_class(integer(-den, den)), mpz_class(den));
            bool fresh = true;
            for (const Rational& y : out) fresh = fresh && !(x == y);
            if (fresh) out.push_back(x);
        }
        return out;
    }

    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

/// Q(t^j) through MPFR floats at `bits`, independent of the exact moment code.
inline Real float_monomial(const QuadRule& rule, unsigned j, mpfr_prec_t bits = 512) {
    Real sum(0L, bits);
    for (const QuadPoint& p : rule.points()) {
        Real x = p.node.to_real(bits);
        Real power(1L, bits);
        for (unsigned i = 0; i < j; ++i) power *= x;
        sum += Real(p.weight, bits) * power;
    }
    return sum;
}

/// Q(t^j) for rational nodes through plain GMP loops.
inline mpq_class gmp_monomial(const std::vector<std::pair<mpq_class, mpq_class>>& pointsNodeWeight, unsigned j) {
    mpq_class sum = 0;
    for (const auto& [x, w] : pointsNodeWeight) {
        mpq_class power = 1;
        for (unsigned i = 0; i < j; ++i) power *= x;
        sum += w * power;
    }
    return sum;
}

inline std::vector<std::pair<mpq_class, mpq_class>> gmp_points(const QuadRule& rule) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    for (const QuadPoint& p : rule.points()) out.emplace_back(p.node.as_rational().value(), p.weight.value());
    return out;
}

/// Integral of t^j over [-1,1] written out directly.
inline mpq_class gmp_moment(unsigned j) { return j % 2 == 1 ? mpq_class(0) : mpq_class(2, j + 1); }

/// Degree of a rational-node rule by the GMP oracle.
inline int gmp_degree(const QuadRule& rule) {
    const auto pts = gmp_points(rule);
    int m = -1;
    for (unsigned j = 0; j < 4 * rule.size() + 4; ++j) {
        if (gmp_monomial(pts, j) != gmp_moment(j)) return m;
        m = static_cast<int>(j);
    }
    return m;
}

/// |a - b| <= tol, through doubles.
inline bool close(double a, double b, double tol) { return (a > b ? a - b : b - a) <= tol; }

inline Real mpfr_pi(mpfr_prec_t bits) {
    Real p(bits);
    mpfr_const_pi(p.get(), MPFR_RNDN);
    return p;
}

}  // namespace testing
