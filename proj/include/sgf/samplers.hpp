#pragma once

#include "sgf/kernels.hpp"
#include "sgf/measure.hpp"
#include "sgf/steps.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sgf {

// Seedable, reproducible stream: replica r uses a splitmix64-derived seed so
// replicas are independent and the whole run is reproducible from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 replica_rng(std::uint64_t seed, std::uint64_t replica) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(replica + 1)));
}

// Draw from exact rational weights (need not be normalized).
std::size_t draw_categorical(const std::vector<Rat>& weights, std::mt19937_64& rng);

// Interlacing array lambda^(1) < lambda^(2) < ... < lambda^(N); levels[t-1] has
// length t.
struct InterlacingArray {
    std::vector<Signature> levels;
    int top_length() const { return static_cast<int>(levels.size()); }
};

bool check_interlacing(const InterlacingArray& arr);

// Aztec slices interlace with slack one: slice t-1 sits between slice t shifted
// down and slice t shifted up by a single box layer,
//   upsilon^(t)_{i+1} <= upsilon^(t-1)_i <= upsilon^(t)_i + 1,
// reflecting the interleaved multiply/project structure of the chain.
bool check_aztec_interlacing(const std::vector<Signature>& slices);

// Uniform path below lambda, sampled top-down with conditional weights
// dim(mu)/dim(lambda); exact enumeration at desk scale, determinant-ratio
// sampling (certified positive weights) for larger levels.
InterlacingArray sample_trapezoid_path(const Signature& lambda, std::mt19937_64& rng);

// Aztec-diamond domino configuration of size N.  Cell grid is 2N x 2N; each
// contained cell carries the direction tag of its domino (U/D for horizontals,
// L/R for verticals per the checkerboard rule used by the shuffle).
struct DominoConfiguration {
    int N = 0;
    std::vector<char> cells;  // '.' outside, ' ' empty, or one of U D L R u d l r

    char at(int x, int y) const { return cells[static_cast<std::size_t>(y) * 2 * N + x]; }
    char& at(int x, int y) { return cells[static_cast<std::size_t>(y) * 2 * N + x]; }
    bool inside(int x, int y) const;
    long long horizontal_pairs() const;
    bool valid() const;
};

// Biased domino shuffling; horizontal pair weight q per created block.
DominoConfiguration sample_aztec(int N, double q, std::mt19937_64& rng);

// Yellow-particle slices t = 1..N as signatures; the orientation convention is
// calibrated so the joint law matches aztec_chain exactly (tested at N <= 2).
std::vector<Signature> aztec_to_signatures(const DominoConfiguration& d);

// Noncolliding walk sample at the requested times (number of elementary steps
// for Bernoulli/geometric; continuous tau for Poisson handled by the caller via
// gamma_tau).  Returns the signature at each requested time in order.
std::vector<Signature> sample_walks(const Signature& lambda0, const StepFunction& step,
                                    const std::vector<int>& times, std::mt19937_64& rng);

// #{i <= floor(N eta) : lambda_i + floor(N eta) - i >= N y} for the array's top
// size N.
int height_function(const InterlacingArray& arr, double y, double eta);

// int y^k H(y, eta) dy in the exact closed form p_{k+1}/((k+1) N^{k+1}) given
// the array (raw, uncentered).
Rat height_moment(const InterlacingArray& arr, double eta, unsigned k);

// Unbiased sample covariance matrix of observable columns with jackknife
// standard errors.
struct CovarianceEstimate {
    std::vector<std::vector<double>> cov;
    std::vector<std::vector<double>> stderr_;
    std::size_t replicas = 0;
};
CovarianceEstimate estimate_covariance(const std::vector<std::vector<double>>& rows);

// Mean and standard error per column.
struct MeanEstimate {
    std::vector<double> mean;
    std::vector<double> stderr_;
};
MeanEstimate estimate_mean(const std::vector<std::vector<double>>& rows);

}  // namespace sgf
