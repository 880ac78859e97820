#include "combquad/exact.hpp"

#include <ostream>
#include <utility>

#include "combquad/error.hpp"

namespace combquad {

mpz_class default_factorization_bound() { return mpz_class(1000000000000UL); }

namespace {

/// n = square^2 * core with core squarefree.
struct SquareSplit {
    mpz_class square;
    mpz_class core;
};

SquareSplit split_square(mpz_class n, const mpz_class& bound) {
    if (n > bound) {
        throw RepresentationError("exact: " + n.get_str() + " exceeds the factorization bound " +
                                  bound.get_str());
    }
    SquareSplit out{1, 1};
    auto strip = [&](const mpz_class& p) {
        unsigned count = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            n /= p;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) {
            out.square *= p;
        }
        if (count % 2 == 1) {
            out.core *= p;
        }
    };
    strip(2);
    for (mpz_class p = 3; p * p <= n; p += 2) {
        strip(p);
    }
    if (n > 1) {
        out.core *= n;
    }
    return out;
}

mpz_class smallest_prime_factor(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t()) != 0) {
        return 2;
    }
    for (mpz_class p = 3; p * p <= n; p += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            return p;
        }
    }
    return n;
}

/// x = a + b*sqrt(p), where neither a nor b has a surd key divisible by the prime p.
struct TowerSplit {
    ExactScalar a;
    ExactScalar b;
    mpz_class p;
};

TowerSplit tower_split(const ExactScalar& x) {
    TowerSplit out;
    out.p = smallest_prime_factor(x.surd_terms().begin()->first);
    out.a = ExactScalar(x.rational_part());
    for (const auto& [key, coefficient] : x.surd_terms()) {
        if (mpz_divisible_p(key.get_mpz_t(), out.p.get_mpz_t()) != 0) {
            out.b += ExactScalar::surd(coefficient, mpz_class(key / out.p));
        } else {
            out.a += ExactScalar::surd(coefficient, key);
        }
    }
    return out;
}

}  // namespace

ExactScalar ExactScalar::surd(Rational coefficient, const mpz_class& squarefree) {
    ExactScalar out;
    if (squarefree < 1) {
        throw DomainError("exact: surd key must be positive");
    }
    if (squarefree == 1) {
        out.rational_ = std::move(coefficient);
    } else {
        out.add_surd(squarefree, coefficient);
    }
    return out;
}

void ExactScalar::add_surd(const mpz_class& key, const Rational& coefficient) {
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = surds_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            surds_.erase(it);
        }
    }
}

const Rational& ExactScalar::as_rational() const {
    if (!is_rational()) {
        throw RepresentationError("exact: " + to_string() + " is not rational");
    }
    return rational_;
}

int ExactScalar::sign() const {
    if (surds_.empty()) {
        return rational_.sign();
    }
    const TowerSplit t = tower_split(*this);
    const int sa = t.a.sign();
    const int sb = t.b.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: compare a^2 against p*b^2, both free of sqrt(p).
    const int d = (t.a * t.a - ExactScalar(Rational(t.p)) * t.b * t.b).sign();
    return d > 0 ? sa : (d < 0 ? sb : 0);
}

ExactScalar ExactScalar::inverse() const {
    if (surds_.empty()) {
        return ExactScalar(rational_.inverse());
    }
    // 1/(a + b sqrt p) = (a - b sqrt p)/(a^2 - p b^2); the norm has fewer primes under the roots.
    const TowerSplit t = tower_split(*this);
    const ExactScalar root_p = surd(Rational(1), t.p);
    const ExactScalar norm = t.a * t.a - ExactScalar(Rational(t.p)) * t.b * t.b;
    if (norm.is_zero()) {
        throw DomainError("exact: division by zero");
    }
    return (t.a - t.b * root_p) * norm.inverse();
}

ExactScalar ExactScalar::pow(unsigned long exponent) const {
    if (surds_.empty()) {
        return ExactScalar(rational_.pow(exponent));
    }
    if (rational_.is_zero() && surds_.size() == 1) {
        // (c sqrt d)^j = c^j d^(j/2) [sqrt d]
        const auto& [d, c] = *surds_.begin();
        mpz_class dk;
        mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), exponent / 2);
        Rational v = c.pow(exponent) * Rational(dk);
        return exponent % 2 == 0 ? ExactScalar(std::move(v)) : surd(std::move(v), d);
    }
    ExactScalar result(1);
    ExactScalar base = *this;
    while (exponent > 0) {
        if ((exponent & 1UL) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Real ExactScalar::to_real(mpfr_prec_t bits) const {
    Real out(rational_, bits + 16);
    for (const auto& [key, coefficient] : surds_) {
        Real root(Rational(key), bits + 16);
        out += Real(coefficient, bits + 16) * sqrt(root);
    }
    return out.rounded(bits);
}

std::string ExactScalar::to_string() const {
    std::string out;
    if (!rational_.is_zero() || surds_.empty()) {
        out = rational_.to_string();
    }
    for (const auto& [key, coefficient] : surds_) {
        std::string term;
        if (coefficient == Rational(1)) {
            term = "sqrt(" + key.get_str() + ")";
        } else if (coefficient == Rational(-1)) {
            term = "-sqrt(" + key.get_str() + ")";
        } else {
            term = coefficient.to_string() + "*sqrt(" + key.get_str() + ")";
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar out;
    out.rational_ = -rational_;
    for (const auto& [key, coefficient] : surds_) {
        out.surds_.emplace(key, -coefficient);
    }
    return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    rational_ += o.rational_;
    for (const auto& [key, coefficient] : o.surds_) {
        add_surd(key, coefficient);
    }
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    rational_ -= o.rational_;
    for (const auto& [key, coefficient] : o.surds_) {
        add_surd(key, -coefficient);
    }
    return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar out(a.rational_ * b.rational_);
    if (!a.rational_.is_zero()) {
        for (const auto& [key, coefficient] : b.surds_) {
            out.add_surd(key, a.rational_ * coefficient);
        }
    }
    if (!b.rational_.is_zero()) {
        for (const auto& [key, coefficient] : a.surds_) {
            out.add_surd(key, b.rational_ * coefficient);
        }
    }
    for (const auto& [ka, ca] : a.surds_) {
        for (const auto& [kb, cb] : b.surds_) {
            // sqrt(ka) sqrt(kb) = g sqrt((ka/g)(kb/g)); the cofactors are coprime and squarefree.
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), ka.get_mpz_t(), kb.get_mpz_t());
            const mpz_class core = (ka / g) * (kb / g);
            const Rational c = ca * cb * Rational(g);
            if (core == 1) {
                out.rational_ += c;
            } else {
                out.add_surd(core, c);
            }
        }
    }
    return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    if (a.surds_.empty() && b.surds_.empty()) {
        return a.rational_ <=> b.rational_;
    }
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExactScalar surd_canonicalize(const Rational& s, const mpz_class& bound) {
    if (s.sign() <= 0) {
        throw DomainError("exact: square root of non-positive value " + s.to_string());
    }
    // sqrt(p/q) = sqrt(p q)/q
    const mpz_class q = s.denominator();
    const SquareSplit split = split_square(mpz_class(s.numerator() * q), bound);
    return ExactScalar::surd(Rational(split.square, q), split.core);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

}  // namespace combquad
