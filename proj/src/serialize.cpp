#include "cobschur/serialize.hpp"

#include <fstream>

namespace cobschur {

Json context_to_json(const RingContext& ctx) {
	Json j;
	j["n_x"] = ctx.n_x();
	j["n_b"] = ctx.n_b();
	j["A"] = ctx.m_bound();
	j["D"] = ctx.deg_bound();
	j["t"] = ctx.has_t();
	j["beta"] = ctx.has_beta();
	j["aux"] = ctx.options().aux;
	return j;
}

namespace {

template <class T>
T field(const Json& j, const char* key, T fallback) {
	if (!j.contains(key))
		return fallback;
	try {
		return j.at(key).get<T>();
	} catch (const Json::exception& e) {
		throw InvalidInput(std::string("json: bad field '") + key + "': " + e.what());
	}
}

Rational rational_field(const Json& j, const char* key, const char* fallback) {
	if (!j.contains(key))
		return parse_rational(fallback);
	const Json& v = j.at(key);
	if (v.is_string())
		return parse_rational(v.get<std::string>());
	if (v.is_number_integer())
		return Rational(std::to_string(v.get<long long>()));
	throw InvalidInput(std::string("json: field '") + key + "' must be an integer string");
}

Rational rational_value(const Json& v) {
	if (v.is_string())
		return parse_rational(v.get<std::string>());
	if (v.is_number_integer())
		return Rational(std::to_string(v.get<long long>()));
	throw InvalidInput("json: expected a rational as a string like \"-3/2\"");
}

}  // namespace

ContextPtr context_from_json(const Json& j) {
	if (!j.is_object())
		throw InvalidInput("json: context must be an object");
	RingContext::Options o;
	o.n_x = field<int>(j, "n_x", 0);
	o.n_b = field<int>(j, "n_b", 0);
	o.m_bound = field<int>(j, "A", 0);
	o.deg_bound = field<int>(j, "D", 0);
	o.with_t = field<bool>(j, "t", false);
	o.with_beta = field<bool>(j, "beta", false);
	o.aux = field<std::vector<std::string>>(j, "aux", {});
	return RingContext::make(o);
}

Json series_to_json(const Series& f) {
	const RingContext& ctx = f.ctx();
	Json j;
	j["context"] = context_to_json(ctx);
	j["bound"] = f.bound();
	Json terms = Json::array();
	for (const auto& t : f.terms()) {
		Json exps = Json::object();
		for (int g = 0; g < ctx.num_generators(); ++g)
			if (t.mono.exp(g))
				exps[ctx.name(g)] = t.mono.exp(g);
		terms.push_back({{"exps", exps},
						 {"num", t.coef.get_num().get_str()},
						 {"den", t.coef.get_den().get_str()}});
	}
	j["terms"] = terms;
	return j;
}

Series series_from_json(const Json& j, ContextPtr ctx) {
	if (!j.is_object() || !j.contains("terms"))
		throw InvalidInput("json: a series needs a \"terms\" array");
	if (j.contains("context")) {
		ContextPtr described = context_from_json(j.at("context"));
		if (ctx && !same_context(ctx, described))
			throw InvalidInput("json: series context does not match the expected context");
		if (!ctx)
			ctx = described;
	}
	if (!ctx)
		throw InvalidInput("json: series without a context");
	int bound = field<int>(j, "bound", ctx->deg_bound());
	std::vector<Term> terms;
	for (const auto& jt : j.at("terms")) {
		Monomial m;
		if (jt.contains("exps"))
			for (const auto& [name, e] : jt.at("exps").items()) {
				int g = ctx->find(name);
				if (g < 0)
					throw InvalidInput("json: unknown generator '" + name + "'");
				if (!e.is_number_integer())
					throw InvalidInput("json: exponent of '" + name + "' must be an integer");
				m.set_exp(g, e.get<int>(), ctx->truncated(g));
			}
		Rational num = rational_field(jt, "num", "0");
		Rational den = rational_field(jt, "den", "1");
		if (den == 0)
			throw InvalidInput("json: zero denominator");
		if (m.degree() > bound)
			throw InvalidInput("json: term of degree " + std::to_string(m.degree()) + " beyond the bound " +
							   std::to_string(bound));
		terms.push_back({m, num / den});
	}
	return Series::from_terms(ctx, std::move(terms), bound);
}

Json window_to_json(const LaurentWindow& w) {
	Json j;
	j["variable"] = w.variable;
	j["k_min"] = w.k_min;
	j["k_max"] = w.k_max;
	Json coeffs = Json::array();
	for (const auto& [k, s] : w.coeffs)
		coeffs.push_back({{"k", k}, {"series", series_to_json(s)}});
	j["coeffs"] = coeffs;
	return j;
}

LaurentWindow window_from_json(const Json& j, ContextPtr ctx) {
	LaurentWindow w;
	w.variable = field<std::string>(j, "variable", "u");
	w.k_min = field<int>(j, "k_min", 0);
	w.k_max = field<int>(j, "k_max", -1);
	if (!j.contains("coeffs"))
		throw InvalidInput("json: window without coefficients");
	for (const auto& c : j.at("coeffs")) {
		Series s = series_from_json(c.at("series"), ctx);
		ctx = s.context();
		w.coeffs.emplace(field<int>(c, "k", 0), s);
	}
	return w;
}

std::string series_to_text(const Series& f) {
	if (f.is_zero())
		return "0";
	const RingContext& ctx = f.ctx();
	// Print order: x, b, aux, t, beta, m, i.e. generator order.
	std::string out;
	bool first = true;
	for (const auto& t : f.terms()) {
		Rational c = t.coef;
		bool neg = c < 0;
		if (neg)
			c = -c;
		if (first)
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		first = false;
		std::string factors;
		for (int g = 0; g < ctx.num_generators(); ++g) {
			int e = t.mono.exp(g);
			if (!e)
				continue;
			if (!factors.empty())
				factors += "*";
			factors += ctx.name(g);
			if (e > 1)
				factors += "^" + std::to_string(e);
		}
		if (factors.empty())
			out += c.get_str();
		else if (c == 1)
			out += factors;
		else
			out += c.get_str() + "*" + factors;
	}
	return out;
}

std::map<int, Series> assignment_from_json(const Json& j, const ContextPtr& ctx) {
	if (!j.is_object())
		throw InvalidInput("json: an assignment must be an object of generator -> rational");
	std::map<int, Series> a;
	for (const auto& [name, v] : j.items()) {
		int g = ctx->find(name);
		if (g < 0)
			throw InvalidInput("json: unknown generator '" + name + "' in assignment");
		a.emplace(g, Series::constant(ctx, rational_value(v), kExactBound));
	}
	return a;
}

std::map<int, Rational> log_coefficients_from_json(const Json& j) {
	if (!j.is_object())
		throw InvalidInput("json: logarithm coefficients must be an object like {\"m1\": \"1/2\"}");
	std::map<int, Rational> c;
	for (const auto& [key, v] : j.items()) {
		std::string digits = key.rfind("m", 0) == 0 ? key.substr(1) : key;
		int i = 0;
		try {
			std::size_t used = 0;
			i = std::stoi(digits, &used);
			if (used != digits.size())
				throw InvalidInput("");
		} catch (const std::exception&) {
			throw InvalidInput("json: bad logarithm coefficient key '" + key + "'");
		}
		if (i < 1)
			throw InvalidInput("json: logarithm coefficient index must be positive");
		c[i] = rational_value(v);
	}
	return c;
}

Json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw InvalidInput("cannot read '" + path + "'");
	try {
		return Json::parse(in);
	} catch (const Json::exception& e) {
		throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
	}
}

}  // namespace cobschur
