#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combquad/builder.hpp"
#include "combquad/combine.hpp"
#include "combquad/exact.hpp"
#include "combquad/rules.hpp"

namespace combquad::io {

using Json = nlohmann::ordered_json;

/// "p/q" for rationals, {"sqrt": "p/q", "sign": +-1} for +-sqrt(p/q).
Json node_to_json(const ExactScalar& node);
ExactScalar node_from_json(const Json& j);

/// {"label": ..., "points": [{"node": ..., "weight": "p/q"}, ...]}
Json rule_to_json(const QuadRule& rule);
QuadRule rule_from_json(const Json& j);

QuadRule read_rule_file(const std::string& path);
void write_rule_file(const std::string& path, const QuadRule& rule);

/// Scientific decimal of an exact value with `digits` significant digits.
std::string decimal(const ExactScalar& x, int digits = 20);

Json classification_to_json(const RuleClassification& c);
Json combine_report_to_json(const CombineReport& report);
Json built_rule_to_json(const BuiltRule& built, const BuilderInput& input);

/// Comma-separated rationals such as "1/2,1/3,1/4".
std::vector<Rational> parse_rational_list(std::string_view text);
/// Comma-separated positive integers such as "2,4,8".
std::vector<long> parse_count_list(std::string_view text);

}  // namespace combquad::io
