#include "cobschur/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "cobschur/oracles.hpp"
#include "cobschur/verify.hpp"

namespace cobschur {

namespace {

struct Common {
	std::string mode = "universal";
	int n = 1;
	int nb = 0;
	int A = 3;
	int deg = 5;
	std::string out = "text";
	std::string m_file;
};

void add_common(CLI::App* cmd, Common& c) {
	cmd->add_option("--mode", c.mode, "universal | additive | multiplicative | custom")
		->check(CLI::IsMember({"universal", "additive", "multiplicative", "custom"}));
	cmd->add_option("--n", c.n, "number of x-variables")->check(CLI::Range(0, kMaxGenerators));
	cmd->add_option("--nb", c.nb, "number of b-generators; 0 sets b := 0")->check(CLI::Range(0, kMaxGenerators));
	cmd->add_option("--A", c.A, "m-cutoff of the universal law")->check(CLI::Range(1, 60));
	cmd->add_option("--deg", c.deg, "truncation degree D")->check(CLI::Range(0, 60));
	cmd->add_option("--out", c.out, "json | text")->check(CLI::IsMember({"json", "text"}));
	cmd->add_option("--m-file", c.m_file, "JSON logarithm coefficients for custom mode");
}

ContextPtr build_context(const Common& c, bool with_t, std::vector<std::string> aux = {}) {
	RingContext::Options o;
	o.n_x = c.n;
	o.n_b = c.nb;
	o.m_bound = c.mode == "universal" ? c.A : 0;
	o.deg_bound = c.deg;
	o.with_t = with_t;
	o.with_beta = c.mode == "multiplicative";
	o.aux = std::move(aux);
	return RingContext::make(o);
}

FormalGroupLaw build_fgl(const Common& c, const ContextPtr& ctx) {
	FglMode mode = parse_mode(c.mode);
	std::map<int, Rational> log;
	if (mode == FglMode::custom) {
		if (c.m_file.empty())
			throw InvalidInput("custom mode needs --m-file");
		log = log_coefficients_from_json(read_json_file(c.m_file));
	} else if (!c.m_file.empty()) {
		throw InvalidInput("--m-file is only used in custom mode");
	}
	return FormalGroupLaw(ctx, mode, std::move(log));
}

std::vector<int> parse_ints(const std::string& s) {
	std::vector<int> v;
	if (s.empty())
		return v;
	std::stringstream in(s);
	std::string item;
	while (std::getline(in, item, ',')) {
		try {
			std::size_t used = 0;
			v.push_back(std::stoi(item, &used));
			if (used != item.size())
				throw std::invalid_argument(item);
		} catch (const std::exception&) {
			throw InvalidInput("bad integer '" + item + "' in '" + s + "'");
		}
	}
	return v;
}

void print_series(std::ostream& out, const Series& s, const std::string& format) {
	if (format == "json")
		out << series_to_json(s).dump(2) << "\n";
	else
		out << series_to_text(s) << "\n";
}

Series apply_assignment(const Series& s, const std::string& b_file, const std::optional<std::string>& t) {
	std::map<int, Series> a;
	if (!b_file.empty())
		a = assignment_from_json(read_json_file(b_file), s.context());
	if (t)
		a[s.ctx().t()] = Series::constant(s.context(), parse_rational(*t), kExactBound);
	return a.empty() ? s : specialize(s, a);
}

// b-generators a family reads; the CLI rejects a positive --nb below this.
int b_needed(const std::string& family, const Partition& lambda, const std::vector<int>& seq, int n) {
	if (family == "schur-seq") {
		int need = 0;
		for (int i = 0; i < static_cast<int>(seq.size()); ++i)
			need = std::max(need, seq[i] + n - 1 - i);
		return need;
	}
	if (family == "schur-p" || family == "schur-q")
		return lambda.n() ? lambda[0] : 0;
	return required_b(lambda);
}

struct ComputeJob {
	Common c;
	std::string family = "schur-s";
	std::string lambda;
	std::optional<std::string> t;
	std::string b_file;
};

int cmd_compute(const ComputeJob& job, std::ostream& out) {
	const Common& c = job.c;
	bool hl = job.family == "hl";
	if (job.t && !hl)
		throw InvalidInput("--t applies to the hl family only");
	auto ctx = build_context(c, hl);
	FormalGroupLaw F = build_fgl(c, ctx);
	std::vector<int> seq;
	Partition lambda;
	if (job.family == "schur-seq") {
		seq = parse_ints(job.lambda);
		if (static_cast<int>(seq.size()) > c.n)
			throw InvalidInput("sequence has more entries than --n");
	} else {
		lambda = Partition::parse(job.lambda, c.n);
	}
	Params b;
	if (c.nb > 0)
		b = Params::generators(ctx, b_needed(job.family, lambda, seq, c.n));
	Series s;
	if (job.family == "schur-s") {
		s = universal_schur_s(F, lambda, b);
	} else if (job.family == "schur-seq") {
		std::vector<int> vars(c.n);
		for (int i = 0; i < c.n; ++i)
			vars[i] = i;
		s = universal_schur_seq(F, seq, vars, b);
	} else if (job.family == "schur-p") {
		s = universal_schur_p(F, lambda, b);
	} else if (job.family == "schur-q") {
		s = universal_schur_q(F, lambda, b);
	} else if (hl) {
		s = universal_hall_littlewood(F, lambda);
	} else if (job.family == "new-schur") {
		s = new_universal_schur(F, lambda, b);
	} else {
		s = universal_schur_kl(F, lambda, b);
	}
	print_series(out, apply_assignment(s, job.b_file, job.t), c.out);
	return 0;
}

struct VerifyJob {
	std::string suite;
	SuiteOptions opt;
	std::string out = "text";
	bool all = false;
};

int cmd_verify(const VerifyJob& job, std::ostream& out) {
	VerificationReport r = run_suite(job.suite, job.opt);
	if (job.out == "json")
		out << report_to_json(r).dump(2) << "\n";
	else
		out << report_to_text(r, job.all);
	return r.passed() ? 0 : 1;
}

struct SegreJob {
	Common c;
	int kmin = 0;
	int kmax = 0;
};

int cmd_segre(const SegreJob& job, std::ostream& out) {
	auto ctx = build_context(job.c, false);
	FormalGroupLaw F = build_fgl(job.c, ctx);
	LaurentWindow w = segre_series(F, job.c.n, job.kmin, job.kmax);
	if (job.c.out == "json") {
		out << window_to_json(w).dump(2) << "\n";
	} else {
		for (const auto& [k, s] : w.coeffs)
			out << k << ": " << series_to_text(s) << "\n";
	}
	return 0;
}

struct OracleJob {
	Common c;
	std::string family = "schur";
	std::string lambda;
	std::optional<std::string> t;
	std::string b_file;
};

int cmd_oracle(const OracleJob& job, std::ostream& out) {
	const std::string& fam = job.family;
	bool hl = fam == "hall-littlewood";
	if (job.t && !hl)
		throw InvalidInput("--t applies to the hall-littlewood family only");
	Common c = job.c;
	c.mode = fam == "grothendieck" ? "multiplicative" : "additive";
	auto ctx = build_context(c, hl);
	Partition lambda = Partition::parse(job.lambda, c.n);
	std::vector<Series> b;
	for (int i = 0; i < c.nb; ++i)
		b.push_back(Series::generator_to(ctx, ctx->b(i), kExactBound));
	Series s;
	if (fam == "schur")
		s = classical_schur(ctx, lambda);
	else if (fam == "schur-tableaux")
		s = schur_by_tableaux(ctx, lambda);
	else if (fam == "factorial-schur")
		s = factorial_schur(ctx, lambda, b);
	else if (hl)
		s = classical_hall_littlewood(ctx, lambda);
	else if (fam == "schur-p")
		s = classical_schur_p(ctx, lambda);
	else if (fam == "schur-q")
		s = classical_schur_q(ctx, lambda);
	else if (fam == "grothendieck")
		s = factorial_grothendieck(ctx, lambda, b);
	else
		s = monomial_symmetric(ctx, lambda);
	print_series(out, apply_assignment(s, job.b_file, job.t), c.out);
	return 0;
}

struct PushJob {
	Common c;
	std::string input;
	std::string op = "full";
	std::string lambda;
	int q = 0;
	std::string var;
};

int cmd_pushforward(const PushJob& job, std::ostream& out) {
	Series f = series_from_json(read_json_file(job.input));
	const ContextPtr& ctx = f.context();
	FglMode mode = parse_mode(job.c.mode);
	if (mode == FglMode::universal && ctx->m_bound() == 0)
		throw InvalidInput("pushforward: universal mode needs an input context with A >= 1");
	if (mode == FglMode::multiplicative && !ctx->has_beta())
		throw InvalidInput("pushforward: multiplicative mode needs an input context with beta");
	Common c = job.c;
	FormalGroupLaw F = build_fgl(c, ctx);
	int n = c.n;
	Series r;
	if (job.op == "full") {
		r = pushforward_full_flag(F, f, n);
	} else if (job.op == "partial") {
		r = pushforward_partial_flag(F, f, Partition::parse(job.lambda, n));
	} else if (job.op == "between") {
		r = pushforward_between_flags(F, f, Partition::parse(job.lambda, n));
	} else if (job.op == "grassmannian") {
		r = grassmannian_pushforward(F, f, job.q, n);
	} else {
		if (job.var.empty())
			throw InvalidInput("residue needs --var naming an auxiliary generator");
		int s = ctx->find(job.var);
		if (s < 0)
			throw InvalidInput("unknown generator '" + job.var + "'");
		r = projective_residue(F, f, s, n);
	}
	print_series(out, r, c.out);
	return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"Universal Schur functions over formal group laws, their Gysin maps and identity checks"};
	app.require_subcommand(1);

	ComputeJob compute;
	auto* c_cmd = app.add_subcommand("compute", "evaluate a family as a truncated series");
	add_common(c_cmd, compute.c);
	c_cmd->add_option("--family", compute.family)
		->check(CLI::IsMember({"schur-s", "schur-seq", "schur-p", "schur-q", "hl", "new-schur", "schur-kl"}));
	c_cmd->add_option("--lambda", compute.lambda, "comma-separated parts (the sequence for schur-seq)");
	c_cmd->add_option("--t", compute.t, "rational value for t; symbolic when omitted");
	c_cmd->add_option("--b", compute.b_file, "JSON assignment of generators to rationals, applied to the result");

	VerifyJob verify;
	auto* v_cmd = app.add_subcommand("verify", "run a named identity suite");
	v_cmd->add_option("suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
	std::optional<int> v_n, v_w, v_A, v_D, v_e, v_f, v_s;
	v_cmd->add_option("--n", v_n, "largest number of variables");
	v_cmd->add_option("--max-weight", v_w, "largest partition weight");
	v_cmd->add_option("--A", v_A);
	v_cmd->add_option("--deg", v_D);
	v_cmd->add_option("--e", v_e);
	v_cmd->add_option("--f", v_f);
	v_cmd->add_option("--samples", v_s);
	v_cmd->add_option("--seed", verify.opt.seed);
	v_cmd->add_option("--out", verify.out)->check(CLI::IsMember({"json", "text"}));
	v_cmd->add_flag("--all", verify.all, "list passing entries too");

	SegreJob segre;
	auto* s_cmd = app.add_subcommand("segre", "Laurent window of the Segre generating series");
	add_common(s_cmd, segre.c);
	segre.c.out = "json";
	s_cmd->add_option("--kmin", segre.kmin)->required();
	s_cmd->add_option("--kmax", segre.kmax)->required();

	OracleJob oracle;
	auto* o_cmd = app.add_subcommand("oracle", "classical polynomials from determinants and tableaux");
	add_common(o_cmd, oracle.c);
	o_cmd->add_option("--family", oracle.family)
		->check(CLI::IsMember({"schur", "schur-tableaux", "factorial-schur", "hall-littlewood", "schur-p",
							   "schur-q", "grothendieck", "monomial"}));
	o_cmd->add_option("--lambda", oracle.lambda);
	o_cmd->add_option("--t", oracle.t);
	o_cmd->add_option("--b", oracle.b_file);

	PushJob push;
	auto* p_cmd = app.add_subcommand("pushforward", "apply a Gysin map to a series read from JSON");
	add_common(p_cmd, push.c);
	p_cmd->add_option("--input", push.input, "series JSON file")->required();
	p_cmd->add_option("--operator", push.op)
		->check(CLI::IsMember({"full", "partial", "between", "grassmannian", "residue"}));
	p_cmd->add_option("--lambda", push.lambda, "partition whose blocks give the flag type");
	p_cmd->add_option("--q", push.q, "subspace dimension for the grassmannian map");
	p_cmd->add_option("--var", push.var, "auxiliary generator standing for the residue variable");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try {
		if (*c_cmd)
			return cmd_compute(compute, out);
		if (*v_cmd) {
			verify.opt.n_max = v_n;
			verify.opt.max_weight = v_w;
			verify.opt.A = v_A;
			verify.opt.D = v_D;
			verify.opt.e = v_e;
			verify.opt.f = v_f;
			verify.opt.samples = v_s;
			return cmd_verify(verify, out);
		}
		if (*s_cmd)
			return cmd_segre(segre, out);
		if (*o_cmd)
			return cmd_oracle(oracle, out);
		return cmd_pushforward(push, out);
	} catch (const InvalidInput& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const AssertionFailure& e) {
		err << "assertion failed: " << e.what() << "\n";
		return 3;
	}
}

}  // namespace cobschur
