#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combquad/rational.hpp"
#include "combquad/rules.hpp"

namespace combquad {

struct CombinationTerm {
    Rational coefficient;
    QuadRule rule;
};

/// sum_i c_i Q_i(g). Combinations built here always have coefficients summing to 1.
struct LinearCombination {
    std::vector<CombinationTerm> terms;

    Rational coefficient_sum() const;
};

/// Merge a combination into a single rule: coincident nodes add their weights,
/// zero weights are dropped, nodes come out in ascending order.
QuadRule flatten(const LinearCombination& combination, std::string label = {});

struct CombineReport {
    LinearCombination combination;
    QuadRule flattened;
    std::pair<RuleClassification, RuleClassification> inputClass;
    RuleClassification outputClass;
    /// Both coefficients non-negative: the combined value lies between the two inputs.
    bool bracketing = false;

    const Rational& alpha() const { return combination.terms.at(0).coefficient; }
    const Rational& beta() const { return combination.terms.at(1).coefficient; }
};

/**
 * Combined rule Y = alpha A + beta B with alpha + beta = 1 and Y exact on t^(m+1):
 *   alpha = (mu - mu_B)/(mu_A - mu_B),  beta = (mu_A - mu)/(mu_A - mu_B)
 * where m is the common degree, mu the integral of t^(m+1), mu_X = X(t^(m+1)).
 *
 * Throws PreconditionError for unequal degrees or mu_A == mu_B (use mean_rule).
 */
CombineReport combine_pair(const QuadRule& a, const QuadRule& b);

/// Mean rule: (A + B)/2 when mu_A == mu_B, otherwise the combined rule.
CombineReport mean_rule(const QuadRule& a, const QuadRule& b);

/**
 * Best least-squares combination of the moment vectors of A and B against
 * (mu_0, ..., mu_m, mu), solved from the 2x2 normal equations. Independent
 * route to the combine_pair coefficients.
 */
std::pair<Rational, Rational> least_squares_coeffs(const QuadRule& a, const QuadRule& b);

}  // namespace combquad
