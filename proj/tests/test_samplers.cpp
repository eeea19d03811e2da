#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgf/moments.hpp"
#include "sgf/samplers.hpp"

#include <cmath>
#include <functional>
#include <map>

using namespace sgf;

namespace {

// chi-square p-value via the regularized upper incomplete gamma
double chi_square_pvalue(double stat, int dof) {
    const double a = dof / 2.0, x = stat / 2.0;
    if (x <= 0) return 1.0;
    if (x < a + 1) {
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (term < 1e-16 * sum) break;
        }
        double logP = a * std::log(x) - x - std::lgamma(a) + std::log(sum);
        return 1.0 - std::exp(logP);
    }
    double b = x + 1 - a, c = 1e300, d = 1 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1) < 1e-15) break;
    }
    return std::exp(a * std::log(x) - x - std::lgamma(a)) * h;
}

}  // namespace

TEST_CASE("rng determinism") {
    auto a = replica_rng(123, 7);
    auto b = replica_rng(123, 7);
    for (int i = 0; i < 100; ++i) CHECK(a() == b());
    auto c = replica_rng(123, 8);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= (a() != c());
    CHECK(differs);
}

TEST_CASE("trapezoid sampler: packed top is deterministic") {
    auto rng = replica_rng(5, 0);
    for (int rep = 0; rep < 20; ++rep) {
        auto arr = sample_trapezoid_path(Signature::zero(6), rng);
        CHECK(check_interlacing(arr));
        for (int t = 1; t <= 6; ++t) CHECK(arr.levels[t - 1] == Signature::zero(t));
    }
}

TEST_CASE("trapezoid sampler: two-pattern frequency") {
    auto rng = replica_rng(11, 0);
    int ones = 0;
    const int R = 10000;
    for (int r = 0; r < R; ++r) {
        auto arr = sample_trapezoid_path(Signature{1, 0}, rng);
        CHECK(check_interlacing(arr));
        if (arr.levels[0][0] == 1) ++ones;
    }
    const double freq = static_cast<double>(ones) / R;
    CHECK(std::abs(freq - 0.5) < 3.0 * 0.5 / std::sqrt(static_cast<double>(R)));
}

TEST_CASE("trapezoid sampler matches exact law at N = 3 (chi-square)") {
    Signature top{2, 1, 0};
    ChainSpec spec(SignatureMeasure::delta(top));
    spec.steps.push_back(ProjectionStep{2});
    spec.steps.push_back(ProjectionStep{1});
    auto chain = build_chain(spec);
    std::map<std::string, Rat> exact;
    for (const auto& [l2, w2] : chain.kernels[0]->row(top).atoms()) {
        for (const auto& [l1, w1] : chain.kernels[1]->row(l2).atoms()) {
            std::string key = std::to_string(l1[0]) + "|" + std::to_string(l2[0]) +
                              std::to_string(l2[1]);
            exact[key] += w2 * w1;
        }
    }
    const int R = 100000;
    auto rng = replica_rng(20240817, 0);
    std::map<std::string, int> freq;
    for (int r = 0; r < R; ++r) {
        auto arr = sample_trapezoid_path(top, rng);
        std::string key = std::to_string(arr.levels[0][0]) + "|" +
                          std::to_string(arr.levels[1][0]) + std::to_string(arr.levels[1][1]);
        freq[key]++;
    }
    double stat = 0;
    int cells = 0;
    for (const auto& [key, p] : exact) {
        const double expect = to_double(p) * R;
        const double obs = freq.count(key) ? freq[key] : 0;
        stat += (obs - expect) * (obs - expect) / expect;
        ++cells;
    }
    CHECK(chi_square_pvalue(stat, cells - 1) > 1e-3);
}

TEST_CASE("trapezoid sampler: hexagon-type top, mean matches exact moment") {
    Signature top{3, 3, 3, 0, 0, 0};
    ChainSpec spec(SignatureMeasure::delta(top));
    spec.steps.push_back(ProjectionStep{5});
    spec.steps.push_back(ProjectionStep{4});
    spec.steps.push_back(ProjectionStep{3});
    auto chain = build_chain(spec);
    const Rat exact = exact_joint_moment(chain, {{{3, 1}}, false}).value;

    const int R = 4000;
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < R; ++r) {
        auto rng = replica_rng(424242, r);
        auto arr = sample_trapezoid_path(top, rng);
        rows.push_back({static_cast<double>(power_sum(arr.levels[2], 1).convert_to<long long>())});
    }
    auto est = estimate_mean(rows);
    CHECK(std::abs(est.mean[0] - to_double(exact)) < 3.0 * est.stderr_[0]);
}

TEST_CASE("aztec sampler: tilings valid, N=1 frequencies") {
    auto rng = replica_rng(31337, 0);
    int horiz = 0;
    const int R = 10000;
    for (int r = 0; r < R; ++r) {
        auto d = sample_aztec(1, 1.0, rng);
        CHECK(d.valid());
        if (d.horizontal_pairs() == 1) ++horiz;
        auto sigs = aztec_to_signatures(d);
        CHECK(sigs[0].length() == 1);
        CHECK(sigs[0][0] == (d.horizontal_pairs() ? 1 : 0));
    }
    CHECK(std::abs(horiz / static_cast<double>(R) - 0.5) < 3.0 * 0.5 / std::sqrt(R));
}

TEST_CASE("aztec sampler: N=2 exact joint law, q = 1 and q = 2 (chi-square)") {
    for (double qd : {1.0, 2.0}) {
        Rat q = (qd == 1.0) ? Rat(1) : Rat(2);
        auto chain = build_chain(aztec_chain(2, q));
        std::map<std::string, Rat> exact;
        const Signature zero2 = Signature::zero(2);
        for (const auto& [u2, v2] : chain.kernels[0]->row(zero2).atoms()) {
            for (const auto& [l1, v3] : chain.kernels[1]->row(u2).atoms()) {
                for (const auto& [u1, v4] : chain.kernels[2]->row(l1).atoms()) {
                    std::string key = std::to_string(u1[0]) + "|" + std::to_string(u2[0]) +
                                      std::to_string(u2[1]);
                    exact[key] += v2 * v3 * v4;
                }
            }
        }
        const int R = 100000;
        auto rng = replica_rng(987, qd == 1.0 ? 0 : 1);
        std::map<std::string, int> freq;
        for (int r = 0; r < R; ++r) {
            auto d = sample_aztec(2, qd, rng);
            auto sigs = aztec_to_signatures(d);
            std::string key = std::to_string(sigs[0][0]) + "|" + std::to_string(sigs[1][0]) +
                              std::to_string(sigs[1][1]);
            freq[key]++;
        }
        double stat = 0;
        int cells = 0;
        for (const auto& [key, p] : exact) {
            const double expect = to_double(p) * R;
            const double obs = freq.count(key) ? freq[key] : 0;
            stat += (obs - expect) * (obs - expect) / expect;
            ++cells;
        }
        CHECK(chi_square_pvalue(stat, cells - 1) > 1e-3);
    }
}

TEST_CASE("aztec samples pass the slack-one interlacing checks") {
    auto rng = replica_rng(777, 0);
    for (int rep = 0; rep < 10; ++rep) {
        auto d = sample_aztec(12, 1.5, rng);
        CHECK(d.valid());
        auto sigs = aztec_to_signatures(d);
        CHECK(check_aztec_interlacing(sigs));
    }
    // larger sizes stay valid and extractable
    auto d40 = sample_aztec(40, 0.7, rng);
    CHECK(d40.valid());
    CHECK(check_aztec_interlacing(aztec_to_signatures(d40)));
}

TEST_CASE("bernoulli walk: one particle is Binomial") {
    const Rat beta(1, 3);
    const int T = 6;
    const int R = 20000;
    std::vector<int> counts(T + 1, 0);
    for (int r = 0; r < R; ++r) {
        auto rng = replica_rng(5150, r);
        auto path = sample_walks(Signature{0}, BernoulliStep{beta, 1}, {T}, rng);
        counts[path[0][0]]++;
    }
    double stat = 0;
    for (int k = 0; k <= T; ++k) {
        double p = to_double(rat_pow(beta, k) * rat_pow(Rat(1) - beta, T - k));
        double binom = 1;
        for (int i = 0; i < k; ++i) binom = binom * (T - i) / (i + 1);
        double expect = binom * p * R;
        stat += (counts[k] - expect) * (counts[k] - expect) / expect;
    }
    CHECK(chi_square_pvalue(stat, T) > 1e-3);

    auto rng = replica_rng(1, 0);
    auto frozen = sample_walks(Signature{4, 2, 0}, BernoulliStep{Rat(1, 1000000), 1}, {3}, rng);
    CHECK(frozen[0] == Signature{4, 2, 0});
}

TEST_CASE("bernoulli walk N=2 empirical moment vs exact oracle") {
    const Rat beta(1, 2);
    const int T = 4;
    ChainSpec spec(SignatureMeasure::delta(Signature{0, 0}));
    spec.steps.push_back(MultiplicationStep{BernoulliStep{beta, T}});
    auto chain = build_chain(spec);
    const Rat exact = exact_joint_moment(chain, {{{1, 2}}, false}).value;

    const int R = 20000;
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < R; ++r) {
        auto rng = replica_rng(606, r);
        auto path = sample_walks(Signature{0, 0}, BernoulliStep{beta, 1}, {T}, rng);
        rows.push_back({static_cast<double>(power_sum(path[0], 2).convert_to<long long>())});
    }
    auto est = estimate_mean(rows);
    CHECK(std::abs(est.mean[0] - to_double(exact)) < 3.0 * est.stderr_[0]);
}

TEST_CASE("height function and height moments") {
    auto rng = replica_rng(2, 0);
    auto arr = sample_trapezoid_path(Signature::zero(5), rng);
    CHECK(height_function(arr, -0.1, 1.0) == 5);
    CHECK(height_function(arr, 0.81, 1.0) == 0);
    int prev = 6;
    for (double y = -0.2; y < 1.2; y += 0.1) {
        int h = height_function(arr, y, 1.0);
        CHECK(h <= prev);
        prev = h;
    }
    auto rng2 = replica_rng(3, 0);
    auto arr2 = sample_trapezoid_path(Signature{3, 1, 0, 0}, rng2);
    for (unsigned k = 0; k <= 3; ++k) {
        Rat lhs = Rat(k + 1) * rat_pow(Rat(4), static_cast<long>(k) + 1) *
                  height_moment(arr2, 1.0, k);
        CHECK(lhs == Rat(power_sum(arr2.levels[3], k + 1)));
    }
    CHECK(height_moment(arr, 1.0, 0) == Rat(5 * 4 / 2, 5));
}

TEST_CASE("estimate_covariance") {
    std::vector<std::vector<double>> rows(50, {2.5, 2.5});
    auto est = estimate_covariance(rows);
    CHECK(est.cov[0][0] == 0.0);
    CHECK(est.stderr_[0][0] == 0.0);

    std::vector<std::vector<double>> rows2;
    auto rng = replica_rng(9, 0);
    for (int r = 0; r < 200; ++r) {
        double v = static_cast<double>(rng() % 1000);
        rows2.push_back({v, v});
    }
    auto est2 = estimate_covariance(rows2);
    CHECK(est2.cov[0][0] == doctest::Approx(est2.cov[0][1]).epsilon(1e-12));
    CHECK(est2.cov[0][0] == doctest::Approx(est2.cov[1][1]).epsilon(1e-12));
}
