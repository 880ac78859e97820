#include "combquad/linalg.hpp"

#include <utility>

#include "combquad/error.hpp"

namespace combquad {

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.n;
    if (b.size() != n) {
        throw PreconditionError("linalg: right-hand side has the wrong length");
    }

    // x_j = colScale_j * z_j makes every column integral.
    std::vector<mpz_class> colScale(n, 1);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            mpz_lcm(colScale[c].get_mpz_t(), colScale[c].get_mpz_t(), a(r, c).denominator().get_mpz_t());
        }
    }
    std::vector<mpz_class> m(n * n);
    std::vector<mpz_class> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class rowScale = b[r].denominator();
        for (std::size_t c = 0; c < n; ++c) {
            m[r * n + c] = a(r, c).numerator() * (colScale[c] / a(r, c).denominator());
        }
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] *= rowScale;
        rhs[r] = b[r].numerator();
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return m[r * n + c]; };

    mpz_class previous = 1;
    mpz_class t;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (mpz_cmpabs(at(r, col).get_mpz_t(), at(pivot, col).get_mpz_t()) > 0) pivot = r;
        }
        if (sgn(at(pivot, col)) == 0) {
            throw InternalError("linalg: singular system at column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(col, c));
            std::swap(rhs[pivot], rhs[col]);
        }
        const mpz_class& p = at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const mpz_class f = at(r, col);
            for (std::size_t c = col + 1; c < n; ++c) {
                mpz_class& e = at(r, c);
                e *= p;
                t = f * at(col, c);
                e -= t;
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), previous.get_mpz_t());
            }
            rhs[r] *= p;
            t = f * rhs[col];
            rhs[r] -= t;
            mpz_divexact(rhs[r].get_mpz_t(), rhs[r].get_mpz_t(), previous.get_mpz_t());
            at(r, col) = 0;
        }
        previous = p;
    }

    // The last pivot is det(M); det * z is integral (Cramer), so back substitution stays in integers.
    const mpz_class det = at(n - 1, n - 1);
    std::vector<mpz_class> scaled(n);
    for (std::size_t i = n; i-- > 0;) {
        mpz_class s = det * rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= at(i, c) * scaled[c];
        mpz_divexact(scaled[i].get_mpz_t(), s.get_mpz_t(), at(i, i).get_mpz_t());
    }
    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(scaled[i] * colScale[i], det);
    return x;
}

}  // namespace combquad
