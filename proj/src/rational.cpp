#include "combquad/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "combquad/error.hpp"

namespace combquad {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw DomainError("exact: malformed rational '" + std::string(whole) + "'");
    }
    mpz_class v(std::string(body), 10);
    return negative ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) {
        throw DomainError("exact: zero denominator");
    }
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) {
        throw DomainError("exact: zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw DomainError("exact: empty rational");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash), text);
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw DomainError("exact: malformed rational '" + std::string(text) + "'");
        }
        return Rational(num, mpz_class(std::string(den_text), 10));
    }

    // Decimal form: [sign] digits [. digits] [e [sign] digits]
    std::string_view mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        const mpz_class ev = parse_integer(text.substr(e + 1), text);
        if (!ev.fits_slong_p() || ::abs(ev) > 100000) {
            throw DomainError("exact: exponent out of range in '" + std::string(text) + "'");
        }
        exponent = ev.get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long scale = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = mantissa.substr(0, dot);
        const std::string_view fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            throw DomainError("exact: malformed number '" + std::string(text) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        scale = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) {
            throw DomainError("exact: malformed number '" + std::string(text) + "'");
        }
        digits = std::string(mantissa);
    }
    mpz_class num(digits, 10);
    if (negative) {
        num = -num;
    }
    const long shift = exponent - scale;
    if (shift >= 0) {
        return Rational(mpz_class(num * pow10(static_cast<unsigned long>(shift))));
    }
    return Rational(num, pow10(static_cast<unsigned long>(-shift)));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DomainError("exact: division by zero");
    }
    return Rational(Reduced{}, mpq_class(1 / q_));
}

Rational Rational::pow(unsigned long exponent) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), exponent);
    // Powers of a reduced fraction stay reduced.
    if (sgn(r.get_den()) < 0) {
        r = -r;
    }
    return Rational(Reduced{}, std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("exact: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace combquad
