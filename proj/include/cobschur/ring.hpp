#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cobschur {

// Rejected parameters or malformed input (CLI exit code 2).
struct InvalidInput : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// An identity the code relies on failed, e.g. a nonzero division remainder (CLI exit code 3).
struct AssertionFailure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGenerators = 39;
// Bound used for values that are exact polynomials.
inline constexpr int kExactBound = 120;

enum class GenKind { x, b, aux, t, beta, m };

// Generator layout: x1..xn, b1..bnb, aux..., t, beta, m1..mA.
// The truncated generators (x, b, aux) come first and all have degree 1.
class RingContext {
public:
	struct Options {
		int n_x = 0;
		int n_b = 0;
		int m_bound = 0;
		int deg_bound = 0;
		bool with_t = false;
		bool with_beta = false;
		std::vector<std::string> aux;
	};

	explicit RingContext(Options o);
	static std::shared_ptr<const RingContext> make(Options o);

	const Options& options() const { return opt_; }
	int n_x() const { return opt_.n_x; }
	int n_b() const { return opt_.n_b; }
	int n_aux() const { return static_cast<int>(opt_.aux.size()); }
	int m_bound() const { return opt_.m_bound; }
	int deg_bound() const { return opt_.deg_bound; }
	bool has_t() const { return opt_.with_t; }
	bool has_beta() const { return opt_.with_beta; }

	int num_generators() const { return static_cast<int>(names_.size()); }
	int num_truncated() const { return opt_.n_x + opt_.n_b + n_aux(); }

	// Generator ids; indices are 0-based (x(0) is x1, m(1) is m1).
	int x(int i) const { return i; }
	int b(int i) const { return opt_.n_x + i; }
	int aux(int k) const { return opt_.n_x + opt_.n_b + k; }
	int aux(std::string_view name) const;
	int t() const;
	int beta() const;
	int m(int i) const;

	GenKind kind(int g) const { return kinds_[g]; }
	int degree(int g) const;
	bool truncated(int g) const { return g < num_truncated(); }
	const std::string& name(int g) const { return names_[g]; }
	// -1 when absent.
	int find(std::string_view name) const;

	bool operator==(const RingContext& o) const;

private:
	Options opt_;
	std::vector<std::string> names_;
	std::vector<GenKind> kinds_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

// Exponent vector packed into bytes. Byte 0 caches the truncated degree, so
// multiplying monomials is a plain bytewise add.
class Monomial {
public:
	static constexpr int kBytes = kMaxGenerators + 1;
	static constexpr int kWords = kBytes / 8;

	int degree() const { return data_[0]; }
	int exp(int g) const { return data_[g + 1]; }
	void set_exp(int g, int e, bool truncated);
	bool is_one() const;
	// Moves the exponents of the first n generators: new[w[i]] = old[i].
	Monomial permuted_prefix(const int* w, int n) const;

	Monomial operator*(const Monomial& o) const;
	bool operator==(const Monomial& o) const { return std::memcmp(data_.data(), o.data_.data(), kBytes) == 0; }
	std::size_t hash() const;
	// Graded lex: truncated degree ascending, then larger exponents of earlier generators first.
	bool canonical_less(const Monomial& o) const;

	const std::uint8_t* bytes() const { return data_.data(); }

private:
	alignas(8) std::array<std::uint8_t, kBytes> data_{};
};

static_assert(Monomial::kBytes % 8 == 0);

struct MonomialHash {
	std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cobschur
