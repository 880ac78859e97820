#include "combquad/combine.hpp"

#include <algorithm>

#include "combquad/error.hpp"

namespace combquad {

namespace {

struct PairMoments {
    RuleClassification classA;
    RuleClassification classB;
    int degree = 0;
    Rational mu;
    Rational muA;
    Rational muB;
};

const Rational& rational_moment(const ExactScalar& x, const char* which) {
    if (!x.is_rational()) {
        throw RepresentationError(std::string("combine: moment of rule ") + which + " is irrational (" +
                                  x.to_string() + "); coefficients would not be rational");
    }
    return x.rational_part();
}

PairMoments pair_moments(const QuadRule& a, const QuadRule& b) {
    PairMoments pm{classify(a), classify(b)};
    if (pm.classA.degree != pm.classB.degree) {
        throw PreconditionError("combine: rules have different degrees (" + std::to_string(pm.classA.degree) +
                                " and " + std::to_string(pm.classB.degree) + ")");
    }
    if (pm.classA.degree < 0) {
        throw PreconditionError("combine: rules are not exact for constants");
    }
    pm.degree = pm.classA.degree;
    pm.mu = pm.classA.principalMoment;
    // Degree m means mu_X = X(t^(m+1)) is exactly the stored rule moment.
    pm.muA = rational_moment(pm.classA.ruleMoment, "A");
    pm.muB = rational_moment(pm.classB.ruleMoment, "B");
    return pm;
}

CombineReport make_report(const QuadRule& a, const QuadRule& b, const PairMoments& pm, Rational alpha,
                          Rational beta, const std::string& label) {
    LinearCombination combination{{{std::move(alpha), a}, {std::move(beta), b}}};
    QuadRule flattened = flatten(combination, label);
    RuleClassification output = classify(flattened);
    CombineReport report{std::move(combination), std::move(flattened), {pm.classA, pm.classB},
                         std::move(output)};
    report.bracketing = report.alpha().sign() >= 0 && report.beta().sign() >= 0;
    return report;
}

std::string combined_label(const QuadRule& a, const QuadRule& b, const char* op) {
    return std::string(op) + "(" + (a.label().empty() ? "A" : a.label()) + "," +
           (b.label().empty() ? "B" : b.label()) + ")";
}

}  // namespace

Rational LinearCombination::coefficient_sum() const {
    Rational s;
    for (const CombinationTerm& t : terms) {
        s += t.coefficient;
    }
    return s;
}

QuadRule flatten(const LinearCombination& combination, std::string label) {
    std::vector<QuadPoint> merged;
    for (const CombinationTerm& term : combination.terms) {
        for (const QuadPoint& p : term.rule.points()) {
            merged.push_back({p.node, term.coefficient * p.weight});
        }
    }
    std::stable_sort(merged.begin(), merged.end(),
                     [](const QuadPoint& x, const QuadPoint& y) { return x.node < y.node; });
    std::vector<QuadPoint> out;
    for (QuadPoint& p : merged) {
        if (!out.empty() && out.back().node == p.node) {
            out.back().weight += p.weight;
        } else {
            out.push_back(std::move(p));
        }
    }
    std::erase_if(out, [](const QuadPoint& p) { return p.weight.is_zero(); });
    if (out.empty()) {
        throw PreconditionError("combine: combination cancels to the zero rule");
    }
    return QuadRule(std::move(out), std::move(label));
}

CombineReport combine_pair(const QuadRule& a, const QuadRule& b) {
    const PairMoments pm = pair_moments(a, b);
    if (pm.muA == pm.muB) {
        throw PreconditionError("combine: mu_A == mu_B = " + pm.muA.to_string() +
                                "; the combined rule is undefined, use the mean rule");
    }
    const Rational denom = pm.muA - pm.muB;
    return make_report(a, b, pm, (pm.mu - pm.muB) / denom, (pm.muA - pm.mu) / denom,
                       combined_label(a, b, "combined"));
}

CombineReport mean_rule(const QuadRule& a, const QuadRule& b) {
    const PairMoments pm = pair_moments(a, b);
    if (pm.muA == pm.muB) {
        const Rational half(mpz_class(1), mpz_class(2));
        return make_report(a, b, pm, half, half, combined_label(a, b, "mean"));
    }
    // For odd m this is ((m+2) mu_B - 2)/((m+2)(mu_B - mu_A)), the same coefficients as combine_pair.
    const Rational denom = pm.muB - pm.muA;
    return make_report(a, b, pm, (pm.muB - pm.mu) / denom, (pm.mu - pm.muA) / denom,
                       combined_label(a, b, "mean"));
}

std::pair<Rational, Rational> least_squares_coeffs(const QuadRule& a, const QuadRule& b) {
    const PairMoments pm = pair_moments(a, b);
    Rational s;
    for (int i = 0; i <= pm.degree; ++i) {
        const Rational mi = moment(static_cast<unsigned>(i));
        s += mi * mi;
    }
    // Normal equations G [alpha beta]^T = r, solved by Cramer's rule.
    const Rational g11 = s + pm.muA * pm.muA;
    const Rational g12 = s + pm.muA * pm.muB;
    const Rational g22 = s + pm.muB * pm.muB;
    const Rational r1 = s + pm.muA * pm.mu;
    const Rational r2 = s + pm.muB * pm.mu;
    const Rational det = g11 * g22 - g12 * g12;
    if (det.is_zero()) {
        throw PreconditionError("combine: singular normal equations (mu_A == mu_B)");
    }
    return {(r1 * g22 - g12 * r2) / det, (g11 * r2 - g12 * r1) / det};
}

}  // namespace combquad
