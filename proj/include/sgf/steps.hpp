#pragma once

#include "sgf/measure.hpp"

#include <optional>
#include <variant>

namespace sgf {

// One multiplicative step of the Markov construction: the Schur generating
// function the level gets multiplied by.  Bernoulli steps are exact; geometric
// and Poisson steps have infinite Schur support and are truncated per row at
// remaining mass <= epsilon, which is recorded on the resulting measures.
struct BernoulliStep {
    Rat beta;  // 0 < beta < 1
    int t = 1; // number of elementary steps
};

struct GeometricStep {
    Rat alpha; // 0 < alpha < 1; per-variable factor 1/(1 - alpha(x-1))
    int t = 1;
    Rat epsilon = Rat(1, Int(1000000000000ll)); // 1e-12 row truncation
};

struct PoissonStep {
    Rat gamma_tau; // gamma * tau, per-variable factor exp(gamma tau (x - 1))
    Rat epsilon = Rat(1, Int(1000000000000ll));
};

// Explicit SGF given as a probability measure: g = S_sigma.  Its st-coefficients
// are Littlewood-Richardson based.
struct ExplicitStep {
    SignatureMeasure sigma;
};

using StepFunction = std::variant<BernoulliStep, GeometricStep, PoissonStep, ExplicitStep>;

// Row of the multiplication kernel: the measure mu -> st_g(lambda -> mu).
SignatureMeasure multiply_row(const Signature& lambda, const StepFunction& g);

// Row of the projection kernel pr_{m -> n}(lambda -> mu).
SignatureMeasure project_row(const Signature& lambda, int n);

// Kernel rows applied to whole measures.
SignatureMeasure multiply_measure(const SignatureMeasure& rho, const StepFunction& g);
SignatureMeasure project_measure(const SignatureMeasure& rho, int n);

// Validation of step parameters; throws validation_error.
void validate_step(const StepFunction& g);

}  // namespace sgf
