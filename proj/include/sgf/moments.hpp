#pragma once

#include "sgf/kernels.hpp"
#include "sgf/series.hpp"
#include "sgf/sparse_poly.hpp"

#include <vector>

namespace sgf {

// Shifted power sum p_k = sum_i (lambda_i + N - i)^k.
Int power_sum(const Signature& lambda, unsigned k);

// Joint moment request: each entry (level index into BuiltChain::levels, power k >= 1).
struct MomentRequest {
    std::vector<std::pair<int, unsigned>> factors;
    bool normalized = false;  // divide by N^k per factor when set
};

struct MomentResult {
    Rat value;
    Rat truncation_bound;  // rigorous only up to the stated crude envelope
};

enum class MomentRoute { Eigenvalue, DirectSum };

// E[prod_j p_{k_j} at level_j] over a built chain.  The eigenvalue route pushes
// Schur-expansion coefficients through the kernels (the moment formula as an
// executable identity); the direct route sums over the explicit joint law.
// Both are exact; tests assert they agree.
MomentResult exact_joint_moment(const BuiltChain& chain, const MomentRequest& req,
                                MomentRoute route = MomentRoute::Eigenvalue);

// cov of p_{k1} at level1 and p_{k2} at level2.
MomentResult exact_covariance(const BuiltChain& chain, std::pair<int, unsigned> a,
                              std::pair<int, unsigned> b);

// Checks D_m s_lambda = (sum_i (lambda_i + N - i)^m) s_lambda symbolically:
// expands V_N s_lambda, applies sum_i (x_i d_i)^m, divides by V_N exactly and
// compares with the scalar multiple.
bool verify_eigenrelation(unsigned m, const Signature& lambda,
                          const SymbolicLimits& lim = SymbolicLimits{5, 40});

// k-th moment of the LLN limit measure from the series F(1+z) (coefficients in
// z): residue extraction of (1/z + 1 + (1+z)F(1+z))^{k+1} / (1+z), divided by
// k+1.  Exact in rational arithmetic.
Rat lln_moment(const RSeries& F_at_1plus, unsigned k);

}  // namespace sgf
