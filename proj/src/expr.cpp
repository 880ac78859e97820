#include "combquad/expr.hpp"

#include <cctype>
#include <type_traits>

#include "combquad/error.hpp"

namespace combquad {

const char* to_string(Function f) {
    switch (f) {
        case Function::Sin: return "sin";
        case Function::Cos: return "cos";
        case Function::Exp: return "exp";
        case Function::Log: return "log";
        case Function::Sqrt: return "sqrt";
        case Function::Atan: return "atan";
    }
    return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::shared_ptr<const Expr> share(ast::Node n) { return std::make_shared<const Expr>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all() {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError("expr: " + what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Expr expr() {
        Expr lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            lhs = Expr(ast::Binary{c, share(lhs.node()), share(term().node())});
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            lhs = Expr(ast::Binary{c, share(lhs.node()), share(unary().node())});
        }
        return lhs;
    }

    Expr unary() {
        if (accept('-')) {
            return Expr(ast::Negate{share(unary().node())});
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            bool negative = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                negative = true;
                ++pos_;
            }
            const std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ == digits) {
                pos_ = start;
                fail("expected an integer exponent");
            }
            const std::string_view d = text_.substr(digits, pos_ - digits);
            if (d.size() > 9) {
                pos_ = start;
                fail("exponent too large");
            }
            const long v = std::stol(std::string(d));
            return Expr(ast::Power{share(base.node()), negative ? -v : v});
        }
        return base;
    }

    Expr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return pos_ - from;
        };
        std::size_t count = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) {
            pos_ = start;
            fail("malformed number");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            if (digits() == 0) {
                pos_ = mark;
                fail("malformed exponent");
            }
        }
        std::string spelling(text_.substr(start, pos_ - start));
        return Expr(ast::Number{Rational::parse(spelling), std::move(spelling)});
    }

    Expr atom() {
        const char c = peek();
        if (c == '\0') {
            fail("unexpected end of input");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "t") {
                return Expr(ast::Variable{});
            }
            if (name == "pi") {
                return Expr(ast::Pi{});
            }
            static constexpr Function kFunctions[] = {Function::Sin, Function::Cos,  Function::Exp,
                                                      Function::Log, Function::Sqrt, Function::Atan};
            for (Function f : kFunctions) {
                if (name == to_string(f)) {
                    if (!accept('(')) {
                        fail("expected '(' after " + std::string(name));
                    }
                    Expr arg = expr();
                    if (!accept(')')) {
                        fail("expected ')'");
                    }
                    return Expr(ast::Call{f, share(arg.node())});
                }
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    return std::visit(overloaded{[](const ast::Binary& b) { return (b.op == '+' || b.op == '-') ? 1 : 2; },
                                 [](const ast::Negate&) { return 3; },
                                 [](const ast::Power&) { return 4; },
                                 [](const auto&) { return 5; }},
                      e.node());
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + unparse(e) + ")" : unparse(e); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_.index() != b.node_.index()) {
        return false;
    }
    return std::visit(
        overloaded{
            [&](const ast::Number& x) { return x.value == std::get<ast::Number>(b.node_).value; },
            [](const ast::Variable&) { return true; },
            [](const ast::Pi&) { return true; },
            [&](const ast::Negate& x) { return *x.operand == *std::get<ast::Negate>(b.node_).operand; },
            [&](const ast::Binary& x) {
                const auto& y = std::get<ast::Binary>(b.node_);
                return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            },
            [&](const ast::Power& x) {
                const auto& y = std::get<ast::Power>(b.node_);
                return x.exponent == y.exponent && *x.base == *y.base;
            },
            [&](const ast::Call& x) {
                const auto& y = std::get<ast::Call>(b.node_);
                return x.function == y.function && *x.argument == *y.argument;
            }},
        a.node_);
}

bool Expr::is_rational_function() const {
    return std::visit(overloaded{[](const ast::Number&) { return true; },
                                 [](const ast::Variable&) { return true; },
                                 [](const ast::Pi&) { return false; },
                                 [](const ast::Negate& n) { return n.operand->is_rational_function(); },
                                 [](const ast::Binary& b) {
                                     return b.lhs->is_rational_function() && b.rhs->is_rational_function();
                                 },
                                 [](const ast::Power& p) { return p.base->is_rational_function(); },
                                 [](const ast::Call&) { return false; }},
                      node_);
}

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string unparse(const Expr& e) {
    return std::visit(
        overloaded{[](const ast::Number& n) { return n.text; },
                   [](const ast::Variable&) { return std::string("t"); },
                   [](const ast::Pi&) { return std::string("pi"); },
                   [](const ast::Negate& n) { return "-" + wrap(*n.operand, precedence(*n.operand) < 3); },
                   [&](const ast::Binary& b) {
                       const int p = precedence(e);
                       return wrap(*b.lhs, precedence(*b.lhs) < p) + " " + std::string(1, b.op) + " " +
                              wrap(*b.rhs, precedence(*b.rhs) <= p);
                   },
                   [](const ast::Power& p) {
                       return wrap(*p.base, precedence(*p.base) < 5) + "^" + std::to_string(p.exponent);
                   },
                   [](const ast::Call& c) { return std::string(to_string(c.function)) + "(" + unparse(*c.argument) + ")"; }},
        e.node());
}

namespace {

template <typename Scalar>
Scalar eval_exact_as(const Expr& e, const Scalar& t) {
    return std::visit(
        overloaded{[](const ast::Number& n) { return Scalar(n.value); },
                   [&](const ast::Variable&) { return t; },
                   [](const ast::Pi&) -> Scalar { throw EvaluationError("expr: pi has no exact rational value"); },
                   [&](const ast::Negate& n) { return -eval_exact_as(*n.operand, t); },
                   [&](const ast::Binary& b) {
                       const Scalar l = eval_exact_as(*b.lhs, t);
                       const Scalar r = eval_exact_as(*b.rhs, t);
                       switch (b.op) {
                           case '+': return l + r;
                           case '-': return l - r;
                           case '*': return l * r;
                           default:
                               if (r.is_zero()) {
                                   throw EvaluationError("expr: pole (division by zero) at t = " + t.to_string());
                               }
                               return l / r;
                       }
                   },
                   [&](const ast::Power& p) {
                       const Scalar base = eval_exact_as(*p.base, t);
                       if (p.exponent >= 0) {
                           return base.pow(static_cast<unsigned long>(p.exponent));
                       }
                       if (base.is_zero()) {
                           throw EvaluationError("expr: pole (zero to a negative power) at t = " + t.to_string());
                       }
                       return base.inverse().pow(static_cast<unsigned long>(-p.exponent));
                   },
                   [](const ast::Call& c) -> Scalar {
                       throw EvaluationError(std::string("expr: ") + to_string(c.function) +
                                             " is not supported in exact mode");
                   }},
        e.node());
}

}  // namespace

Rational eval_exact(const Expr& e, const Rational& t) { return eval_exact_as(e, t); }

ExactScalar eval_exact(const Expr& e, const ExactScalar& t) {
    if (t.is_rational()) {
        return ExactScalar(eval_exact_as(e, t.rational_part()));
    }
    return eval_exact_as(e, t);
}

Real eval_real(const Expr& e, const Real& t, mpfr_prec_t bits) {
    return std::visit(
        overloaded{[&](const ast::Number& n) { return Real(n.value, bits); },
                   [&](const ast::Variable&) { return t.rounded(bits); },
                   [&](const ast::Pi&) { return machin_pi(bits); },
                   [&](const ast::Negate& n) { return -eval_real(*n.operand, t, bits); },
                   [&](const ast::Binary& b) {
                       const Real l = eval_real(*b.lhs, t, bits);
                       const Real r = eval_real(*b.rhs, t, bits);
                       switch (b.op) {
                           case '+': return l + r;
                           case '-': return l - r;
                           case '*': return l * r;
                           default:
                               if (r.is_zero()) {
                                   throw EvaluationError("expr: pole (division by zero) at t = " + t.to_scientific(20));
                               }
                               return l / r;
                       }
                   },
                   [&](const ast::Power& p) {
                       const Real base = eval_real(*p.base, t, bits);
                       if (p.exponent < 0 && base.is_zero()) {
                           throw EvaluationError("expr: pole (zero to a negative power) at t = " + t.to_scientific(20));
                       }
                       return pow(base, p.exponent);
                   },
                   [&](const ast::Call& c) {
                       const Real x = eval_real(*c.argument, t, bits);
                       switch (c.function) {
                           case Function::Sin: return sin(x);
                           case Function::Cos: return cos(x);
                           case Function::Exp: return exp(x);
                           case Function::Atan: return atan(x);
                           case Function::Log:
                               if (x.sign() <= 0) {
                                   throw EvaluationError("expr: log of non-positive value at t = " + t.to_scientific(20));
                               }
                               return log(x);
                           case Function::Sqrt:
                               if (x.sign() < 0) {
                                   throw EvaluationError("expr: sqrt of negative value at t = " + t.to_scientific(20));
                               }
                               return sqrt(x);
                       }
                       throw InternalError("expr: unknown function");
                   }},
        e.node());
}

Real eval_float(const Expr& e, const Real& t, const NumericContext& context) {
    return context.round(eval_real(e, t, context.working_bits()));
}

}  // namespace combquad
