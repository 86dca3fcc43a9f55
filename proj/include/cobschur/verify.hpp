#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobschur/serialize.hpp"

namespace cobschur {

using Labels = std::vector<std::pair<std::string, std::string>>;

struct VerificationEntry {
	std::string identity;
	Labels params;
	bool pass = false;
	// Symmetry, homogeneity and division-remainder checks on computed outputs.
	bool certificate = false;
	// lhs - rhs when an equality fails.
	std::optional<Series> witness;
	// Exception text when an evaluation threw.
	std::string message;

	std::string label() const;
};

struct VerificationReport {
	std::string suite;
	std::vector<VerificationEntry> entries;
	double seconds = 0;

	bool passed() const;
	std::size_t failures() const;
};

// Unset fields take the suite's defaults, which are the acceptance sizes.
struct SuiteOptions {
	std::optional<int> n_max;
	std::optional<int> max_weight;
	std::optional<int> A;
	std::optional<int> D;
	std::optional<int> e;
	std::optional<int> f;
	std::optional<int> samples;
	unsigned seed = 20240601;
};

const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});

Json report_to_json(const VerificationReport& r);
// Summary line, then failing entries; every entry when `all`.
std::string report_to_text(const VerificationReport& r, bool all = false);

}  // namespace cobschur
