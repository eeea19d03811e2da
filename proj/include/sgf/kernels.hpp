#pragma once

#include "sgf/measure.hpp"
#include "sgf/steps.hpp"

#include <memory>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sgf {

// One step of the Markov construction acting downward from the initial measure.
// Combined = projection followed by multiplication, matching the factorized
// definition of the time-space chains.
struct ProjectionStep {
    int target_length;
};
struct MultiplicationStep {
    StepFunction g;
};
struct CombinedStep {
    int target_length;
    StepFunction g;
};
using ChainStep = std::variant<ProjectionStep, MultiplicationStep, CombinedStep>;

int step_target_length(const ChainStep& s, int source_length);

// Chain description: initial measure (the paper's terminal/top measure rho) and
// the ordered steps applied to it.  Level indices: 0 = initial measure, level i
// = marginal after step i.
struct ChainSpec {
    SignatureMeasure initial;
    std::vector<ChainStep> steps;

    explicit ChainSpec(SignatureMeasure init) : initial(std::move(init)) {}
};

// Row-stochastic kernel of one step, materialized lazily per visited source
// signature.
class TransitionKernel {
  public:
    TransitionKernel(ChainStep step, int source_length)
        : step_(std::move(step)), source_length_(source_length),
          target_length_(step_target_length(step_, source_length)) {}

    int source_length() const { return source_length_; }
    int target_length() const { return target_length_; }

    const SignatureMeasure& row(const Signature& lambda) const;

  private:
    ChainStep step_;
    int source_length_;
    int target_length_;
    mutable std::unordered_map<Signature, SignatureMeasure, SignatureHash> cache_;
};

// Fully built chain: kernels plus every level marginal, with the defining
// consistency (pushing level i through kernel i+1 gives level i+1) holding
// exactly by construction.
struct BuiltChain {
    std::vector<SignatureMeasure> levels;              // size steps+1
    std::vector<std::shared_ptr<TransitionKernel>> kernels;  // size steps

    int level_count() const { return static_cast<int>(levels.size()); }
};

BuiltChain build_chain(const ChainSpec& spec, std::size_t max_atoms = 2'000'000);

// rho(eta) = c^{lambda1 lambda2}_eta dim(eta) / (dim(lambda1) dim(lambda2)).
SignatureMeasure tensor_measure(const Signature& lambda1, const Signature& lambda2);

// Decomposition measure of (C^N)^{(x) n}: n iterated single-box steps.
SignatureMeasure schur_weyl_measure(int N, int n);

// The interleaved multiply/project chain of the q-weighted Aztec diamond of
// size N, started from the packed signature (0^N).  Level slice(t) (t = 1..N,
// t particles) is the marginal right after the Bernoulli(q/(1+q)) factor is
// applied at length t; aztec_slice_level maps t to the chain level index.
ChainSpec aztec_chain(int N, const Rat& q);
int aztec_slice_level(int N, int t);

}  // namespace sgf
