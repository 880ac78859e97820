#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "combquad/expr.hpp"
#include "combquad/rational.hpp"
#include "combquad/real.hpp"
#include "combquad/rules.hpp"

namespace combquad {

/// Rule moved to [a,b] by x = a + (b-a)(t+1)/2; weights scaled by (b-a)/2.
std::vector<QuadPoint> transform(const QuadRule& rule, const Rational& a, const Rational& b);

struct PiReference {};
/// Decimal literal reference, kept as text and read at the context precision.
struct DecimalReference {
    std::string text;
};
using Reference = std::variant<PiReference, Rational, DecimalReference>;

struct CompositeJob {
    QuadRule rule;
    Rational a = Rational(-1);
    Rational b = Rational(1);
    long n = 1;
    Expr integrand;
    NumericContext context;
    std::optional<Reference> reference;
    /// Request an exact result (rational integrand only; surd nodes allowed).
    bool exact = false;
};

struct CompositeValue {
    /// Rounded to the context precision (exactly converted in exact mode).
    Real value;
    std::optional<ExactScalar> exact;
};

/**
 * Composite rule over n equal subintervals of [a,b]. Subinterval sums are
 * independent (evaluated in parallel) and reduced by a fixed balanced pairwise
 * tree over the subinterval index, so float results are reproducible.
 */
CompositeValue composite_apply(const CompositeJob& job);

/// pi to context.precisionDigits digits (Machin series at guard precision).
Real pi_reference(const NumericContext& context);

Real resolve_reference(const Reference& reference, const NumericContext& context);

struct ErrorReport {
    /// reference - value.
    Real signedError;
    /// floor(-log10(|error|/|reference|)), clamped to [0, precisionDigits].
    int significantDigits = 0;
    /// False when the reference is zero and only the absolute error is meaningful.
    bool relativeDefined = true;
};

ErrorReport error_report(const Real& value, const Real& reference, const NumericContext& context);

struct ErrorRow {
    long n = 0;
    CompositeValue value;
    std::optional<ErrorReport> error;
};

/// One composite evaluation per subdivision count; job.n is ignored.
std::vector<ErrorRow> error_table(const CompositeJob& job, const std::vector<long>& counts);

/// CSV with header "n,value,signed_error,significant_digits".
void write_error_csv(std::ostream& os, const std::vector<ErrorRow>& rows, const NumericContext& context);

}  // namespace combquad
