#pragma once

#include <string>
#include <vector>

#include "combquad/exact.hpp"
#include "combquad/rational.hpp"

namespace combquad {

struct QuadPoint {
    ExactScalar node;
    Rational weight;

    friend bool operator==(const QuadPoint&, const QuadPoint&) = default;
};

/**
 * Quadrature rule on [-1,1]: Q(g) = sum_i w_i g(t_i).
 *
 * Nodes are exact and pairwise distinct, weights rational. Equality compares
 * the point sets; the label is descriptive only.
 */
class QuadRule {
public:
    /// Validates: nonempty, distinct nodes, every node in [-1,1].
    explicit QuadRule(std::vector<QuadPoint> points, std::string label = {});

    const std::vector<QuadPoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::string& label() const noexcept { return label_; }

    QuadRule with_label(std::string label) const;
    /// Same rule with points in ascending node order.
    QuadRule sorted() const;
    bool all_nodes_rational() const;
    Rational weight_sum() const;

    friend bool operator==(const QuadRule& a, const QuadRule& b);

private:
    std::vector<QuadPoint> points_;
    std::string label_;
};

/// Integral of t^j over [-1,1]: 0 for odd j, 2/(j+1) for even j.
Rational moment(unsigned j);

/// Q(t^j), exact.
ExactScalar apply_monomial(const QuadRule& rule, unsigned j);

enum class RuleSign { Positive, Negative };

struct RuleClassification {
    /// Largest m with Q exact on t^0..t^m; -1 when Q(1) != 2.
    int degree = -1;
    /// Integral of t^(m+1) (the first moment the rule misses); 2/(m+2) for odd m.
    Rational principalMoment;
    ExactScalar ruleMoment;
    /// principalMoment - ruleMoment, never zero.
    ExactScalar defect;
    RuleSign sign = RuleSign::Positive;
    /// Set when the rule is not even exact for constants (degree -1).
    bool notExactForConstants = false;
};

RuleClassification classify(const QuadRule& rule);

/// Same degree and defects of opposite sign.
bool is_companion(const QuadRule& a, const QuadRule& b);

const char* to_string(RuleSign sign);

/// Classical rules used throughout the examples and tests.
namespace catalog {

/// M(g) = 2 g(0)
QuadRule midpoint();
/// T(g) = g(-1) + g(1)
QuadRule trapezoidal();
/// S(g) = (g(-1) + 4 g(0) + g(1)) / 3
QuadRule simpson();
/// g(-sqrt(3)/3) + g(sqrt(3)/3), the unique degree-3 two-point rule.
QuadRule gauss2();
/// Open Newton-Cotes rule with nodes 0, +-2/5, +-4/5.
QuadRule open_newton_cotes5();

}  // namespace catalog

}  // namespace combquad
