#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cobschur/gysin.hpp"

namespace cobschur {

using Json = nlohmann::ordered_json;

Json context_to_json(const RingContext& ctx);
ContextPtr context_from_json(const Json& j);

// {"context": ..., "bound": B, "terms": [{"exps": {...}, "num": "...", "den": "..."}]}
Json series_to_json(const Series& f);
// Uses `ctx` when given (its description must match), otherwise builds one.
Series series_from_json(const Json& j, ContextPtr ctx = nullptr);

Json window_to_json(const LaurentWindow& w);
LaurentWindow window_from_json(const Json& j, ContextPtr ctx = nullptr);

// "1 - 2*m1*x1^2 + 1/2*x1*x2"; "0" for the zero series.
std::string series_to_text(const Series& f);

// {"b1": "1/2", "t": "-1"} as generator -> rational constant.
std::map<int, Series> assignment_from_json(const Json& j, const ContextPtr& ctx);
// {"1": "1/2", "m2": "-1"} as logarithm coefficient index -> rational.
std::map<int, Rational> log_coefficients_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace cobschur
