#include "combquad/io.hpp"

#include <fstream>
#include <sstream>

#include "combquad/error.hpp"

namespace combquad::io {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (piece.empty()) {
            throw DomainError("io: empty entry in list '" + std::string(text) + "'");
        }
        parts.push_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw DomainError(std::string("io: missing key '") + key + "'");
    }
    return j.at(key);
}

Rational rational_from_json(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw DomainError(std::string("io: ") + what + " must be a rational string");
    }
    return Rational::parse(j.get<std::string>());
}

Json rational_list(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& v : values) out.push_back(v.to_string());
    return out;
}

}  // namespace

Json node_to_json(const ExactScalar& node) {
    if (node.is_rational()) {
        return node.rational_part().to_string();
    }
    if (!node.rational_part().is_zero() || node.surd_terms().size() != 1) {
        throw RepresentationError("io: node " + node.to_string() + " is not of the form +-sqrt(p/q)");
    }
    const auto& [d, c] = *node.surd_terms().begin();
    const Rational square = c * c * Rational(d);
    return Json{{"sqrt", square.to_string()}, {"sign", c.sign()}};
}

ExactScalar node_from_json(const Json& j) {
    if (j.is_string()) {
        return ExactScalar(Rational::parse(j.get<std::string>()));
    }
    if (j.is_object()) {
        const Rational radicand = rational_from_json(require(j, "sqrt"), "sqrt");
        if (radicand.sign() <= 0) {
            throw DomainError("io: sqrt radicand must be positive");
        }
        int sign = 1;
        if (j.contains("sign")) {
            const Json& s = j.at("sign");
            if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
                throw DomainError("io: node sign must be 1 or -1");
            }
            sign = s.get<int>();
        }
        const ExactScalar root = surd_canonicalize(radicand);
        return sign < 0 ? -root : root;
    }
    throw DomainError("io: node must be a rational string or a {\"sqrt\", \"sign\"} object");
}

Json rule_to_json(const QuadRule& rule) {
    Json points = Json::array();
    for (const QuadPoint& p : rule.points()) {
        points.push_back(Json{{"node", node_to_json(p.node)}, {"weight", p.weight.to_string()}});
    }
    return Json{{"label", rule.label()}, {"points", std::move(points)}};
}

QuadRule rule_from_json(const Json& j) {
    const Json& points = require(j, "points");
    if (!points.is_array()) {
        throw DomainError("io: 'points' must be an array");
    }
    std::vector<QuadPoint> parsed;
    for (const Json& p : points) {
        parsed.push_back(QuadPoint{node_from_json(require(p, "node")), rational_from_json(require(p, "weight"), "weight")});
    }
    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw DomainError("io: 'label' must be a string");
        label = j.at("label").get<std::string>();
    }
    return QuadRule(std::move(parsed), std::move(label));
}

QuadRule read_rule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("io: cannot open rule file '" + path + "'");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("io: invalid JSON in '" + path + "': " + e.what());
    }
    return rule_from_json(j);
}

void write_rule_file(const std::string& path, const QuadRule& rule) {
    std::ofstream out(path);
    if (!out) {
        throw DomainError("io: cannot write '" + path + "'");
    }
    out << rule_to_json(rule).dump(2) << '\n';
}

std::string decimal(const ExactScalar& x, int digits) {
    return x.to_real(bits_for_digits(digits + 10)).to_scientific(digits);
}

Json classification_to_json(const RuleClassification& c) {
    Json j{{"degree", c.degree},
           {"principal_moment", c.principalMoment.to_string()},
           {"rule_moment", c.ruleMoment.to_string()},
           {"gamma", c.defect.to_string()},
           {"gamma_decimal", decimal(c.defect)},
           {"sign", to_string(c.sign)}};
    if (c.notExactForConstants) {
        j["warning"] = "rule is not exact for constants";
    }
    return j;
}

Json combine_report_to_json(const CombineReport& report) {
    Json terms = Json::array();
    for (const CombinationTerm& t : report.combination.terms) {
        terms.push_back(Json{{"coefficient", t.coefficient.to_string()}, {"rule", rule_to_json(t.rule)}});
    }
    return Json{{"alpha", report.alpha().to_string()},
                {"beta", report.beta().to_string()},
                {"bracketing", report.bracketing},
                {"input_a", classification_to_json(report.inputClass.first)},
                {"input_b", classification_to_json(report.inputClass.second)},
                {"output", classification_to_json(report.outputClass)},
                {"terms", std::move(terms)},
                {"flattened", rule_to_json(report.flattened)}};
}

Json built_rule_to_json(const BuiltRule& built, const BuilderInput& input) {
    Json warnings = Json::array();
    for (const std::string& w : built.warnings) warnings.push_back(w);
    return Json{{"base", to_string(input.base)},
                {"nodes", rational_list(input.positiveNodes)},
                {"coefficients", rational_list(built.coefficients)},
                {"degree", built.classification.degree},
                {"gamma", built.classification.defect.to_string()},
                {"gamma_decimal", decimal(built.classification.defect)},
                {"classification", classification_to_json(built.classification)},
                {"flattened", rule_to_json(built.flattened)},
                {"warnings", std::move(warnings)}};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (std::string_view piece : split_commas(text)) out.push_back(Rational::parse(piece));
    return out;
}

std::vector<long> parse_count_list(std::string_view text) {
    std::vector<long> out;
    for (std::string_view piece : split_commas(text)) {
        const Rational r = Rational::parse(piece);
        if (!r.is_integer() || r.sign() <= 0 || !r.numerator().fits_slong_p()) {
            throw DomainError("io: '" + std::string(piece) + "' is not a positive integer");
        }
        out.push_back(r.numerator().get_si());
    }
    return out;
}

}  // namespace combquad::io
