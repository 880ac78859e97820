#include "combquad/rules.hpp"

#include <algorithm>
#include <utility>

#include "combquad/error.hpp"

namespace combquad {

namespace {

bool node_in_interval(const ExactScalar& x) {
    return (x - ExactScalar(1)).sign() <= 0 && (x + ExactScalar(1)).sign() >= 0;
}

std::vector<QuadPoint> sorted_points(std::vector<QuadPoint> points) {
    std::sort(points.begin(), points.end(),
              [](const QuadPoint& a, const QuadPoint& b) { return a.node < b.node; });
    return points;
}

}  // namespace

QuadRule::QuadRule(std::vector<QuadPoint> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
    if (points_.empty()) {
        throw PreconditionError("rules: a rule needs at least one point");
    }
    for (const QuadPoint& p : points_) {
        if (!node_in_interval(p.node)) {
            throw DomainError("rules: node " + p.node.to_string() + " lies outside [-1,1]");
        }
    }
    const std::vector<QuadPoint> ordered = sorted_points(points_);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        if (ordered[i - 1].node == ordered[i].node) {
            throw DegenerateNodesError("rules: repeated node " + ordered[i].node.to_string());
        }
    }
}

QuadRule QuadRule::with_label(std::string label) const {
    QuadRule copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

QuadRule QuadRule::sorted() const {
    QuadRule copy = *this;
    copy.points_ = sorted_points(points_);
    return copy;
}

bool QuadRule::all_nodes_rational() const {
    return std::all_of(points_.begin(), points_.end(),
                       [](const QuadPoint& p) { return p.node.is_rational(); });
}

Rational QuadRule::weight_sum() const {
    Rational s;
    for (const QuadPoint& p : points_) {
        s += p.weight;
    }
    return s;
}

bool operator==(const QuadRule& a, const QuadRule& b) {
    if (a.size() != b.size()) {
        return false;
    }
    return sorted_points(a.points_) == sorted_points(b.points_);
}

Rational moment(unsigned j) {
    if (j % 2 == 1) {
        return Rational(0);
    }
    return Rational(mpz_class(2), mpz_class(j + 1));
}

ExactScalar apply_monomial(const QuadRule& rule, unsigned j) {
    if (rule.all_nodes_rational()) {
        Rational s;
        for (const QuadPoint& p : rule.points()) {
            s += p.weight * p.node.rational_part().pow(j);
        }
        return ExactScalar(std::move(s));
    }
    ExactScalar s;
    for (const QuadPoint& p : rule.points()) {
        s += ExactScalar(p.weight) * p.node.pow(j);
    }
    return s;
}

namespace {

/// Running powers w_i * t_i^j, advanced one exponent at a time.
template <typename Scalar>
class MomentWalker {
public:
    MomentWalker(std::vector<Scalar> nodes, std::vector<Scalar> weighted)
        : nodes_(std::move(nodes)), terms_(std::move(weighted)) {}

    Scalar current() const {
        Scalar s{};
        for (const Scalar& t : terms_) {
            s += t;
        }
        return s;
    }

    void advance() {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            terms_[i] *= nodes_[i];
        }
    }

private:
    std::vector<Scalar> nodes_;
    std::vector<Scalar> terms_;
};

template <typename Scalar>
RuleClassification classify_with(MomentWalker<Scalar> walker, std::size_t node_count) {
    const unsigned cap = static_cast<unsigned>(2 * node_count);
    for (unsigned j = 0; j <= cap; ++j) {
        const Scalar q = walker.current();
        const Rational mu = moment(j);
        if (q != Scalar(mu)) {
            RuleClassification c;
            c.degree = static_cast<int>(j) - 1;
            c.principalMoment = mu;
            c.ruleMoment = ExactScalar(q);
            c.defect = ExactScalar(mu) - c.ruleMoment;
            c.sign = c.defect.sign() > 0 ? RuleSign::Positive : RuleSign::Negative;
            c.notExactForConstants = j == 0;
            return c;
        }
        walker.advance();
    }
    throw InternalError("rules: rule with " + std::to_string(node_count) +
                        " nodes is exact beyond degree 2n-1; nodes are not distinct");
}

}  // namespace

RuleClassification classify(const QuadRule& rule) {
    if (rule.all_nodes_rational()) {
        std::vector<Rational> nodes;
        std::vector<Rational> terms;
        for (const QuadPoint& p : rule.points()) {
            nodes.push_back(p.node.rational_part());
            terms.push_back(p.weight);
        }
        return classify_with(MomentWalker<Rational>(std::move(nodes), std::move(terms)), rule.size());
    }
    std::vector<ExactScalar> nodes;
    std::vector<ExactScalar> terms;
    for (const QuadPoint& p : rule.points()) {
        nodes.push_back(p.node);
        terms.emplace_back(p.weight);
    }
    return classify_with(MomentWalker<ExactScalar>(std::move(nodes), std::move(terms)), rule.size());
}

bool is_companion(const QuadRule& a, const QuadRule& b) {
    const RuleClassification ca = classify(a);
    const RuleClassification cb = classify(b);
    return ca.degree == cb.degree && ca.defect.sign() * cb.defect.sign() < 0;
}

const char* to_string(RuleSign sign) { return sign == RuleSign::Positive ? "positive" : "negative"; }

namespace catalog {

namespace {

Rational r(long p, long q = 1) { return Rational(mpz_class(p), mpz_class(q)); }

}  // namespace

QuadRule midpoint() { return QuadRule({{ExactScalar(0), r(2)}}, "midpoint"); }

QuadRule trapezoidal() { return QuadRule({{ExactScalar(-1), r(1)}, {ExactScalar(1), r(1)}}, "trapezoidal"); }

QuadRule simpson() {
    return QuadRule({{ExactScalar(-1), r(1, 3)}, {ExactScalar(0), r(4, 3)}, {ExactScalar(1), r(1, 3)}},
                    "simpson");
}

QuadRule gauss2() {
    const ExactScalar t = surd_canonicalize(r(1, 3));
    return QuadRule({{-t, r(1)}, {t, r(1)}}, "gauss-legendre-2");
}

QuadRule open_newton_cotes5() {
    return QuadRule({{ExactScalar(r(-4, 5)), r(275, 576)},
                     {ExactScalar(r(-2, 5)), r(100, 576)},
                     {ExactScalar(0), r(402, 576)},
                     {ExactScalar(r(2, 5)), r(100, 576)},
                     {ExactScalar(r(4, 5)), r(275, 576)}},
                    "open-newton-cotes-5");
}

}  // namespace catalog

}  // namespace combquad
