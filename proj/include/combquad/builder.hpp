#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combquad/rational.hpp"
#include "combquad/real.hpp"
#include "combquad/rules.hpp"

namespace combquad {

enum class BaseRule { Midpoint, Trapezoid };

const char* to_string(BaseRule base);

/// Positive nodes t_1..t_k of the symmetric degree-1 rules g(-t_j) + g(t_j).
struct BuilderInput {
    std::vector<Rational> positiveNodes;
    BaseRule base = BaseRule::Midpoint;
    std::string label;
};

struct BuiltRule {
    /// a_0 (base rule), a_1..a_k (symmetric pairs); sum to 1.
    std::vector<Rational> coefficients;
    QuadRule flattened;
    RuleClassification classification;
    std::vector<std::string> warnings;
};

/**
 * W_k = a_0 Q_0 + sum_j a_j (g(-t_j) + g(t_j)), with the a_j solving the exact
 * moment equations W_k(t^(2i)) = 2/(2i+1), i = 0..k. Q_0 is the midpoint rule
 * 2 g(0) or the trapezoidal rule g(-1) + g(1). The reported degree is the
 * measured one (2k+1 for every instance seen so far).
 */
BuiltRule build_combined(const BuilderInput& input);

/// splitmix64; unit() returns (next() >> 11) / 2^53 exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    Rational unit();

private:
    std::uint64_t state_;
};

/// k distinct rationals in (0,1): uniform draws rationalized at `tolerance`, duplicates and 0/1 redrawn.
std::vector<Rational> random_rational_nodes(std::uint64_t seed, int k, const Rational& tolerance);

/// The rational with the smallest denominator within `tolerance` of x (closed interval).
Rational rationalize(const Rational& x, const Rational& tolerance);
Rational rationalize(const Real& x, const Rational& tolerance);

/// First continued-fraction convergent of x within `tolerance` (no semiconvergents).
Rational rationalize_convergent(const Rational& x, const Rational& tolerance);
Rational rationalize_convergent(const Real& x, const Rational& tolerance);

/// Roots of the degree-n Legendre polynomial, ascending, to `precisionDigits` significant digits.
std::vector<Real> legendre_roots(int n, int precisionDigits);

}  // namespace combquad
