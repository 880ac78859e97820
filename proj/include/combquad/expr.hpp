#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "combquad/exact.hpp"
#include "combquad/rational.hpp"
#include "combquad/real.hpp"

namespace combquad {

/// Integrand grammar, also the CLI's --expr contract.
inline constexpr std::string_view kExprGrammar =
    "expr  := term (('+'|'-') term)*\n"
    "term  := unary (('*'|'/') unary)*\n"
    "unary := '-' unary | power\n"
    "power := atom ('^' integer)?\n"
    "atom  := number | 't' | 'pi' | func '(' expr ')' | '(' expr ')'\n"
    "func  := sin | cos | exp | log | sqrt | atan\n"
    "Numbers are integers or decimals (1.25, 3e-4), read exactly. '^' binds tighter than\n"
    "unary minus; +, -, *, / associate to the left. Whitespace is ignored.";

enum class Function { Sin, Cos, Exp, Log, Sqrt, Atan };

const char* to_string(Function f);

class Expr;

namespace ast {

struct Number {
    Rational value;
    /// Source spelling, kept so printing reproduces decimals such as "0.5".
    std::string text;
};
struct Variable {};
struct Pi {};
struct Negate {
    std::shared_ptr<const Expr> operand;
};
struct Binary {
    char op;  // one of + - * /
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
};
struct Power {
    std::shared_ptr<const Expr> base;
    long exponent;
};
struct Call {
    Function function;
    std::shared_ptr<const Expr> argument;
};

using Node = std::variant<Number, Variable, Pi, Negate, Binary, Power, Call>;

}  // namespace ast

/// Immutable expression tree in one variable t.
class Expr {
public:
    explicit Expr(ast::Node node) : node_(std::move(node)) {}

    const ast::Node& node() const noexcept { return node_; }

    /// True when eval_exact can evaluate it: no pi and no function calls.
    bool is_rational_function() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    ast::Node node_;
};

/// Throws SyntaxError carrying the byte offset of the first problem.
Expr parse(std::string_view text);

/// Canonical text with minimal parentheses; parse(unparse(e)) == e.
std::string unparse(const Expr& e);

/// Exact value at rational t. EvaluationError on a pole or a non-rational construct.
Rational eval_exact(const Expr& e, const Rational& t);
/// Exact value at a surd node; rational functions stay inside the surd field.
ExactScalar eval_exact(const Expr& e, const ExactScalar& t);

/// Value at `bits` precision without final rounding (the composite inner loop).
Real eval_real(const Expr& e, const Real& t, mpfr_prec_t bits);

/// Value computed at the context's working precision, rounded to its result precision.
Real eval_float(const Expr& e, const Real& t, const NumericContext& context);

}  // namespace combquad
