#include "combquad/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "combquad/error.hpp"

namespace combquad {

mpfr_prec_t bits_for_digits(long digits) {
    // log2(10) = 3.3219...; two spare bits so decimal rounding of the binary value is faithful.
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(std::max(1L, digits)) * 3.321928094887362)) + 2;
}

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

Real::Real(const Rational& value, mpfr_prec_t bits) : Real(bits) {
    mpfr_set_q(v_, value.value().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t bits) : Real(bits) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("real: malformed decimal '" + decimal + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(mpfr_prec_t bits) const {
    Real r(*this);
    mpfr_prec_round(r.v_, bits, MPFR_RNDN);
    return r;
}

Rational Real::to_rational() const {
    if (!is_finite()) {
        throw NumericError("real: non-finite value has no rational form");
    }
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return Rational(q);
}

namespace {

struct MpfrString {
    char* p;
    ~MpfrString() { mpfr_free_str(p); }
};

}  // namespace

std::string Real::to_scientific(int digits) const {
    if (!is_finite()) {
        return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    }
    digits = std::max(1, digits);
    if (is_zero()) {
        return digits == 1 ? "0e+00" : "0." + std::string(static_cast<size_t>(digits - 1), '0') + "e+00";
    }
    mpfr_exp_t exp10 = 0;
    MpfrString s{mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN)};
    std::string m(s.p);
    std::string out;
    if (m.front() == '-') {
        out.push_back('-');
        m.erase(0, 1);
    }
    out.push_back(m[0]);
    if (m.size() > 1) {
        out.push_back('.');
        out.append(m, 1);
    }
    const long e = static_cast<long>(exp10) - 1;
    out.push_back('e');
    out.push_back(e < 0 ? '-' : '+');
    const std::string es = std::to_string(std::labs(e));
    if (es.size() < 2) {
        out.push_back('0');
    }
    out += es;
    return out;
}

std::string Real::to_fixed(int digits) const {
    if (!is_finite()) {
        return to_scientific(digits);
    }
    digits = std::max(1, digits);
    if (is_zero()) {
        return "0";
    }
    mpfr_exp_t exp10 = 0;
    MpfrString s{mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN)};
    std::string m(s.p);
    std::string out;
    if (m.front() == '-') {
        out.push_back('-');
        m.erase(0, 1);
    }
    const long e = static_cast<long>(exp10);
    if (e <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-e), '0');
        out += m;
    } else if (e >= static_cast<long>(m.size())) {
        out += m;
        out.append(static_cast<size_t>(e) - m.size(), '0');
    } else {
        out.append(m, 0, static_cast<size_t>(e));
        out.push_back('.');
        out.append(m, static_cast<size_t>(e));
    }
    return out;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

namespace {

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

template <typename Op>
Real unary(const Real& x, Op op) {
    Real r(x.precision());
    op(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }

Real floor(const Real& x) {
    Real r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

Real pow(const Real& x, long exponent) {
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), exponent, MPFR_RNDN);
    return r;
}

namespace {

/// atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1)), summed until terms fall below 2^-bits.
Real atan_inverse(long x, mpfr_prec_t bits) {
    const Real x2(x * x, bits);
    Real power = Real(1, bits) / Real(x, bits);  // 1/x^(2k+1)
    Real sum = power;
    for (long k = 1;; ++k) {
        power /= x2;
        Real term = power / Real(2 * k + 1, bits);
        if (term.is_zero() || mpfr_get_exp(term.get()) < -bits) {
            break;
        }
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace

Real machin_pi(mpfr_prec_t bits) {
    thread_local std::map<mpfr_prec_t, Real> cache;
    if (auto it = cache.find(bits); it != cache.end()) {
        return it->second;
    }
    const mpfr_prec_t guard = bits + 32;
    Real pi = Real(16, guard) * atan_inverse(5, guard) - Real(4, guard) * atan_inverse(239, guard);
    Real out = pi.rounded(bits);
    cache.emplace(bits, out);
    return out;
}

}  // namespace combquad
