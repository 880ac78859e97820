#include "combquad/composite.hpp"

#include <algorithm>
#include <ostream>

#include "combquad/error.hpp"
#include "combquad/parallel.hpp"

namespace combquad {

namespace {

void check_interval(const Rational& a, const Rational& b) {
    if (!(a < b)) {
        throw PreconditionError("composite: interval endpoints must satisfy a < b (got " + a.to_string() + ", " +
                                b.to_string() + ")");
    }
}

template <typename T>
T pairwise_sum(const std::vector<T>& values, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        return values[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

CompositeValue apply_exact(const CompositeJob& job) {
    if (!job.integrand.is_rational_function()) {
        throw EvaluationError("composite: exact mode needs a rational integrand (no pi or functions)");
    }
    const Rational h = (job.b - job.a) / Rational(job.n);
    const Rational half = h / Rational(2);
    std::vector<ExactScalar> sums(static_cast<std::size_t>(job.n));
    parallel_for(sums.size(), [&](std::size_t i) {
        const ExactScalar mid(job.a + h * Rational(i) + half);
        ExactScalar s;
        for (const QuadPoint& p : job.rule.points()) {
            const ExactScalar x = mid + ExactScalar(half) * p.node;
            try {
                s += ExactScalar(p.weight) * eval_exact(job.integrand, x);
            } catch (const EvaluationError& e) {
                throw EvaluationError("composite: integrand failed at node x = " + x.to_string() + " (" + e.what() +
                                      ")");
            }
        }
        sums[i] = std::move(s);
    });
    ExactScalar total = ExactScalar(half) * pairwise_sum(sums, 0, sums.size());
    return CompositeValue{total.to_real(job.context.result_bits()), std::move(total)};
}

CompositeValue apply_float(const CompositeJob& job) {
    const mpfr_prec_t bits = job.context.working_bits();
    const Rational h = (job.b - job.a) / Rational(job.n);
    const Rational half_exact = h / Rational(2);
    const Real half(half_exact, bits);
    // Nodes and weights are converted once; each subinterval only shifts by its midpoint.
    std::vector<Real> nodes;
    std::vector<Real> weights;
    for (const QuadPoint& p : job.rule.points()) {
        nodes.push_back(p.node.to_real(bits));
        weights.emplace_back(p.weight, bits);
    }
    std::vector<Real> sums(static_cast<std::size_t>(job.n), Real(bits));
    parallel_for(sums.size(), [&](std::size_t i) {
        const Real mid(job.a + h * Rational(i) + half_exact, bits);
        Real s(bits);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const Real x = mid + half * nodes[j];
            try {
                s += weights[j] * eval_real(job.integrand, x, bits);
            } catch (const EvaluationError& e) {
                throw EvaluationError("composite: integrand failed at node x = " + x.to_scientific(20) + " (" +
                                      e.what() + ")");
            }
        }
        sums[i] = std::move(s);
    });
    const Real total = half * pairwise_sum(sums, 0, sums.size());
    return CompositeValue{job.context.round(total), std::nullopt};
}

}  // namespace

std::vector<QuadPoint> transform(const QuadRule& rule, const Rational& a, const Rational& b) {
    check_interval(a, b);
    const Rational half = (b - a) / Rational(2);
    std::vector<QuadPoint> out;
    out.reserve(rule.size());
    for (const QuadPoint& p : rule.points()) {
        out.push_back({ExactScalar(a) + ExactScalar(half) * (p.node + ExactScalar(1)), half * p.weight});
    }
    return out;
}

CompositeValue composite_apply(const CompositeJob& job) {
    check_interval(job.a, job.b);
    if (job.n < 1) {
        throw PreconditionError("composite: subdivision count must be positive");
    }
    if (job.context.precisionDigits < 1) {
        throw PreconditionError("composite: precision must be positive");
    }
    return job.exact ? apply_exact(job) : apply_float(job);
}

Real pi_reference(const NumericContext& context) { return context.round(machin_pi(context.working_bits())); }

Real resolve_reference(const Reference& reference, const NumericContext& context) {
    return std::visit(
        [&](const auto& r) -> Real {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PiReference>) {
                return pi_reference(context);
            } else if constexpr (std::is_same_v<T, Rational>) {
                return Real(r, context.result_bits());
            } else {
                return Real(r.text, context.result_bits());
            }
        },
        reference);
}

ErrorReport error_report(const Real& value, const Real& reference, const NumericContext& context) {
    const mpfr_prec_t bits = std::max({value.precision(), reference.precision(), context.result_bits()});
    ErrorReport out{reference.rounded(bits) - value.rounded(bits)};
    const long cap = context.precisionDigits;
    if (out.signedError.is_zero()) {
        out.significantDigits = static_cast<int>(cap);
        return out;
    }
    if (reference.is_zero()) {
        out.relativeDefined = false;
        out.significantDigits = 0;
        return out;
    }
    const Real relative = abs(out.signedError) / abs(reference.rounded(bits));
    if (!(relative < Real(1, bits))) {
        out.significantDigits = 0;
        return out;
    }
    const Real digits = floor(-log10(relative));
    out.significantDigits = static_cast<int>(std::clamp(static_cast<long>(digits.to_double()), 0L, cap));
    return out;
}

std::vector<ErrorRow> error_table(const CompositeJob& job, const std::vector<long>& counts) {
    std::vector<ErrorRow> rows;
    std::optional<Real> reference;
    if (job.reference) {
        reference = resolve_reference(*job.reference, job.context);
    }
    for (long n : counts) {
        CompositeJob step = job;
        step.n = n;
        ErrorRow row{n, composite_apply(step), std::nullopt};
        if (reference) {
            row.error = error_report(row.value.value, *reference, job.context);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_error_csv(std::ostream& os, const std::vector<ErrorRow>& rows, const NumericContext& context) {
    os << "n,value,signed_error,significant_digits\n";
    for (const ErrorRow& row : rows) {
        os << row.n << ',';
        if (row.value.exact) {
            os << row.value.exact->to_string();
        } else {
            os << row.value.value.to_fixed(static_cast<int>(context.precisionDigits));
        }
        os << ',';
        if (row.error) {
            os << row.error->signedError.to_scientific(6) << ',' << row.error->significantDigits;
        } else {
            os << ',';
        }
        os << '\n';
    }
}

}  // namespace combquad
