#pragma once

#include "sgf/rational.hpp"
#include "sgf/signature.hpp"
#include "sgf/sparse_poly.hpp"

#include <map>
#include <vector>

namespace sgf {

// Desk-scale limits for the symbolic routines.  Exceeding them raises budget_error
// instead of silently grinding.
struct SymbolicLimits {
    int max_vars = 5;
    long long max_boxes = 12;
};

using RationalPoint = std::vector<Rat>;

// s_lambda(x_1,...,x_N), exact, via the Jacobi-Trudi determinant in complete
// homogeneous evaluations.  Safe for repeated coordinates; negative parts are
// cleared with the uniform shift s_{lambda+c}(x) = (prod x_i)^c s_lambda(x),
// which requires nonzero coordinates.
Rat schur_evaluate(const Signature& lambda, const RationalPoint& x);

// s_lambda(1^N) by the Weyl product formula prod_{i<j}(l_i - l_j)/(j - i).
Rat schur_dimension(const Signature& lambda);

// s_{lambda/mu}(1^k): the branching weight for restricting from length(lambda)
// variables down to length(mu); zero when mu is not contained in lambda.
Rat skew_dimension(const Signature& lambda, const Signature& mu, int k);

// Fully expanded s_lambda as an exact Laurent polynomial (desk scale only).
SparsePolynomial schur_to_polynomial(const Signature& lambda,
                                     const SymbolicLimits& lim = SymbolicLimits{});

// prod_{i<j} (x_i - x_j), expanded.
SparsePolynomial vandermonde(int n, const SymbolicLimits& lim = SymbolicLimits{});

// Littlewood-Richardson expansion s_lambda s_mu = sum_eta c^{lambda mu}_eta s_eta
// at fixed variable count N, by monomial expansion and Schur-basis elimination.
// Desk scale; tensor_measure uses the strip-chain routine in lr.hpp for larger inputs.
std::map<Signature, Int> lr_expand(const Signature& lambda, const Signature& mu,
                                   const SymbolicLimits& lim = SymbolicLimits{});

// Values h_0(x),...,h_deg(x) of complete homogeneous polynomials at a point.
std::vector<Rat> homogeneous_values(const RationalPoint& x, int deg);

// Exact determinant of a rational matrix (Gaussian elimination).
Rat rational_det(std::vector<std::vector<Rat>> m);

}  // namespace sgf
