#pragma once

#include <vector>

#include "cobschur/partition.hpp"

namespace cobschur {

// Classical polynomials computed without formal group laws or the symmetrizer:
// determinants, tableau enumeration and orbit sums. Outputs are exact
// polynomials over the given context (which supplies x, b, t, beta by name).
// Factorial parameters follow the b-convention: (x|b)^k = prod_s (x + b_s),
// with b_s taken from `b` (1-based, zero past the end).

// det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}).
Series classical_schur(const ContextPtr& ctx, const Partition& lambda);
// Sum over semistandard tableaux.
Series schur_by_tableaux(const ContextPtr& ctx, const Partition& lambda);
Series factorial_schur(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b);
// prod_{boxes} (x_{T(a)} + b_{T(a) + c(a)}) over semistandard tableaux.
Series factorial_schur_by_tableaux(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b);
// P_lambda(x; t) from the normalized full symmetric-group sum; needs t.
Series classical_hall_littlewood(const ContextPtr& ctx, const Partition& lambda);
// Hall-Littlewood at t = -1; strict nu.
Series classical_schur_p(const ContextPtr& ctx, const Partition& nu);
// Antisymmetrization of prod_i 2 x_i^{nu_i} prod_{i<=k, j>i} (x_i + x_j).
Series classical_schur_q(const ContextPtr& ctx, const Partition& nu);
// Set-valued tableaux with x (+) b = x + b + beta x b; needs beta.
Series factorial_grothendieck(const ContextPtr& ctx, const Partition& lambda, const std::vector<Series>& b);
Series monomial_symmetric(const ContextPtr& ctx, const Partition& lambda);
// det(c_{f-r-i+j}(F - E)) with c(F) = prod (1 + x_i), i <= f, c(E) = prod (1 + b_j), j <= e,
// computed on degrees <= bound.
Series thom_porteous_determinant(const ContextPtr& ctx, int e, int f, int r, int bound = kExactBound);

Series elementary_symmetric(const ContextPtr& ctx, const std::vector<int>& gens, int k);
Series complete_symmetric(const ContextPtr& ctx, const std::vector<int>& gens, int k);

// Exact quotient of f by a polynomial in the generator g (coefficients
// low degree first); throws AssertionFailure on a remainder.
Series divide_by_univariate(const Series& f, int g, const std::vector<Rational>& poly);

}  // namespace cobschur
