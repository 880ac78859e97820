#include "combquad/builder.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "combquad/combine.hpp"
#include "combquad/error.hpp"
#include "combquad/linalg.hpp"

namespace combquad {

namespace {

mpz_class floor_of(const Rational& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
    return f;
}

/// Value of the continued fraction [a0; a1, ..., an].
Rational evaluate_continued_fraction(const std::vector<mpz_class>& terms) {
    mpz_class h_prev = 1;
    mpz_class h = terms.front();
    mpz_class k_prev = 0;
    mpz_class k = 1;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        mpz_class h_next = terms[i] * h + h_prev;
        mpz_class k_next = terms[i] * k + k_prev;
        h_prev = std::exchange(h, std::move(h_next));
        k_prev = std::exchange(k, std::move(k_next));
    }
    return Rational(h, k);
}

/// Simplest rational (least denominator, then least numerator) in [lo, hi], 0 < lo <= hi.
Rational simplest_positive(Rational lo, Rational hi) {
    std::vector<mpz_class> terms;
    for (;;) {
        const mpz_class fl = floor_of(lo);
        if (lo.is_integer()) {
            terms.push_back(fl);
            break;
        }
        if (Rational(mpz_class(fl + 1)) <= hi) {
            terms.push_back(fl + 1);
            break;
        }
        terms.push_back(fl);
        const Rational f(fl);
        Rational next_lo = (hi - f).inverse();
        Rational next_hi = (lo - f).inverse();
        lo = std::move(next_lo);
        hi = std::move(next_hi);
    }
    return evaluate_continued_fraction(terms);
}

void check_tolerance(const Rational& tolerance) {
    if (tolerance.sign() <= 0) {
        throw DomainError("builder: rationalization tolerance must be positive");
    }
}

}  // namespace

const char* to_string(BaseRule base) { return base == BaseRule::Midpoint ? "midpoint" : "trapezoid"; }

Rational rationalize(const Rational& x, const Rational& tolerance) {
    check_tolerance(tolerance);
    const Rational lo = x - tolerance;
    const Rational hi = x + tolerance;
    if (lo.sign() <= 0 && hi.sign() >= 0) {
        return Rational(0);
    }
    if (hi.sign() < 0) {
        return -simplest_positive(-hi, -lo);
    }
    return simplest_positive(lo, hi);
}

Rational rationalize(const Real& x, const Rational& tolerance) { return rationalize(x.to_rational(), tolerance); }

Rational rationalize_convergent(const Rational& x, const Rational& tolerance) {
    check_tolerance(tolerance);
    std::vector<mpz_class> terms;
    Rational rest = x;
    for (;;) {
        const mpz_class a = floor_of(rest);
        terms.push_back(a);
        const Rational convergent = evaluate_continued_fraction(terms);
        if ((x - convergent).abs() <= tolerance) {
            return convergent;
        }
        // Terminates: an exact rational's expansion is finite and its last convergent is x.
        rest = (rest - Rational(a)).inverse();
    }
}

Rational rationalize_convergent(const Real& x, const Rational& tolerance) {
    return rationalize_convergent(x.to_rational(), tolerance);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

Rational SplitMix64::unit() {
    const mpz_class top(static_cast<unsigned long>(next() >> 11U));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 53);
    return Rational(top, scale);
}

std::vector<Rational> random_rational_nodes(std::uint64_t seed, int k, const Rational& tolerance) {
    if (k < 1) {
        throw PreconditionError("builder: need at least one random node");
    }
    if (tolerance.sign() <= 0 || tolerance >= Rational(1)) {
        throw PreconditionError("builder: tolerance must lie in (0,1)");
    }
    SplitMix64 rng(seed);
    std::vector<Rational> nodes;
    std::set<Rational> seen;
    const long max_attempts = 1000L * k;
    for (long attempt = 0; attempt < max_attempts && static_cast<int>(nodes.size()) < k; ++attempt) {
        const Rational u = rng.unit();
        if (u.is_zero()) {
            continue;
        }
        Rational r = rationalize(u, tolerance);
        if (r.sign() <= 0 || r >= Rational(1) || seen.contains(r)) {
            continue;
        }
        seen.insert(r);
        nodes.push_back(std::move(r));
    }
    if (static_cast<int>(nodes.size()) < k) {
        throw NumericError("builder: could not draw " + std::to_string(k) + " distinct rationals at tolerance " +
                           tolerance.to_string() + " within " + std::to_string(max_attempts) + " attempts");
    }
    return nodes;
}

BuiltRule build_combined(const BuilderInput& input) {
    const std::vector<Rational>& nodes = input.positiveNodes;
    const std::size_t k = nodes.size();
    if (k == 0) {
        throw PreconditionError("builder: at least one positive node is required");
    }
    for (const Rational& t : nodes) {
        if (t.sign() <= 0 || t >= Rational(1)) {
            throw DomainError("builder: node " + t.to_string() + " is not strictly inside (0,1)");
        }
    }
    {
        std::vector<Rational> sorted = nodes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DegenerateNodesError("builder: duplicate positive nodes");
        }
    }

    // Unknowns a_0..a_k; row i is the moment equation for t^(2i), halved:
    //   a_0 x_0^i + sum_j a_j x_j^i = 1/(2i+1), x_j = t_j^2, x_0 = 0 (midpoint) or 1 (trapezoid).
    std::vector<Rational> squares;
    squares.push_back(input.base == BaseRule::Midpoint ? Rational(0) : Rational(1));
    for (const Rational& t : nodes) {
        squares.push_back(t * t);
    }
    RationalMatrix system(k + 1);
    std::vector<Rational> rhs(k + 1);
    std::vector<Rational> power(k + 1, Rational(1));
    for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j <= k; ++j) {
            system(i, j) = power[j];
            power[j] *= squares[j];
        }
        rhs[i] = Rational(mpz_class(1), mpz_class(2 * i + 1));
    }

    BuiltRule out{solve_exact(std::move(system), std::move(rhs)), catalog::midpoint(), {}, {}};

    LinearCombination combination;
    combination.terms.push_back(
        {out.coefficients[0], input.base == BaseRule::Midpoint ? catalog::midpoint() : catalog::trapezoidal()});
    for (std::size_t j = 0; j < k; ++j) {
        const ExactScalar t(nodes[j]);
        combination.terms.push_back({out.coefficients[j + 1], QuadRule({{-t, Rational(1)}, {t, Rational(1)}})});
    }
    std::string label = input.label;
    if (label.empty()) {
        label = "W" + std::to_string(k) + (input.base == BaseRule::Trapezoid ? "-trapezoid" : "");
    }
    out.flattened = flatten(combination, label);
    out.classification = classify(out.flattened);

    Rational closest;
    bool have_gap = false;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            const Rational gap = (squares[i] - squares[j]).abs();
            if (!have_gap || gap < closest) {
                closest = gap;
                have_gap = true;
            }
        }
    }
    if (have_gap && closest < Rational(mpz_class(1), mpz_class(1000))) {
        out.warnings.push_back("conditioning: min |t_i^2 - t_j^2| = " + std::to_string(closest.to_double()) +
                               " < 1e-3; float evaluation of this rule may lose digits");
    }
    const int expected = static_cast<int>(2 * k + 1);
    if (out.classification.degree != expected) {
        out.warnings.push_back("degree: measured " + std::to_string(out.classification.degree) + ", expected " +
                               std::to_string(expected));
    }
    return out;
}

std::vector<Real> legendre_roots(int n, int precisionDigits) {
    if (n < 1) {
        throw PreconditionError("builder: Legendre degree must be positive");
    }
    if (precisionDigits < 1) {
        throw PreconditionError("builder: precision must be positive");
    }
    const mpfr_prec_t bits = bits_for_digits(precisionDigits + 20);
    Real pi(bits);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    const Real one(1, bits);
    // Newton has converged once the step drops below the working resolution.
    Real resolution(1, bits);
    mpfr_mul_2si(resolution.get(), resolution.get(), -(bits - 4), MPFR_RNDN);

    std::vector<Real> roots;
    for (int i = 1; i <= n; ++i) {
        Real x = cos(pi * Real(Rational(mpz_class(4 * i - 1), mpz_class(4)), bits) /
                     Real(Rational(mpz_class(2 * n + 1), mpz_class(2)), bits));
        bool converged = false;
        for (int step = 0; step < 200 && !converged; ++step) {
            Real p_prev = one;
            Real p = x;
            for (int j = 1; j < n; ++j) {
                // (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
                Real p_next = (Real(2 * j + 1, bits) * x * p - Real(j, bits) * p_prev) / Real(j + 1, bits);
                p_prev = std::exchange(p, std::move(p_next));
            }
            const Real derivative = Real(n, bits) * (x * p - p_prev) / (x * x - one);
            const Real dx = p / derivative;
            x -= dx;
            converged = abs(dx) <= resolution;
        }
        if (!converged) {
            throw NumericError("builder: Newton iteration for root " + std::to_string(i) + " of P_" +
                               std::to_string(n) + " did not converge in 200 steps");
        }
        roots.push_back(x.rounded(bits_for_digits(precisionDigits)));
    }
    std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a < b; });
    return roots;
}

}  // namespace combquad
