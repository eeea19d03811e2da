#include "sgf/moments.hpp"

#include <algorithm>
#include <functional>

namespace sgf {

Int power_sum(const Signature& lambda, unsigned k) {
    if (k < 1) throw validation_error("power_sum: k >= 1 required");
    const int n = lambda.length();
    Int total = 0;
    for (int i = 0; i < n; ++i) total += int_pow(Int(lambda[i] + n - 1 - i), k);
    return total;
}

namespace {

Rat request_weight(const Signature& lam, const MomentRequest& req, int level) {
    Rat w = 1;
    for (const auto& [lv, k] : req.factors) {
        if (lv != level) continue;
        Rat f(power_sum(lam, k));
        if (req.normalized) f /= rat_pow(Rat(lam.length()), static_cast<long>(k));
        w *= f;
    }
    return w;
}

Rat crude_envelope(const BuiltChain& chain, const MomentRequest& req) {
    // max over the materialized support of the |integrand|, per level, as the
    // stated crude envelope for the truncation bound
    Rat env = 1;
    for (int lv = 0; lv < chain.level_count(); ++lv) {
        Rat worst = 0;
        bool used = false;
        for (const auto& [l, k] : req.factors)
            if (l == lv) used = true;
        if (!used) continue;
        for (const auto& [lam, w] : chain.levels[lv].atoms()) {
            Rat v = rat_abs(request_weight(lam, req, lv));
            if (v > worst) worst = v;
        }
        env *= worst;
    }
    return env;
}

}  // namespace

MomentResult exact_joint_moment(const BuiltChain& chain, const MomentRequest& req,
                                MomentRoute route) {
    for (const auto& [lv, k] : req.factors) {
        if (lv < 0 || lv >= chain.level_count())
            throw validation_error("exact_joint_moment: level index out of range");
        if (k < 1) throw validation_error("exact_joint_moment: power >= 1 required");
    }

    Rat lost = 0;
    for (const auto& level : chain.levels) lost = std::max(lost, level.truncation_mass());
    Rat bound = (lost == 0) ? Rat(0) : lost * crude_envelope(chain, req);

    if (route == MomentRoute::Eigenvalue) {
        // Push weighted Schur coefficients down through the kernels; operators act
        // diagonally at each level, evaluation at all-ones sums the coefficients.
        SignatureMeasure::Atoms coeff;
        for (const auto& [lam, w] : chain.levels[0].atoms())
            coeff[lam] = w * request_weight(lam, req, 0);
        for (std::size_t s = 0; s < chain.kernels.size(); ++s) {
            SignatureMeasure::Atoms next;
            for (const auto& [lam, c] : coeff) {
                if (c == 0) continue;
                for (const auto& [mu, v] : chain.kernels[s]->row(lam).atoms()) {
                    next[mu] += c * v;
                }
            }
            const int level = static_cast<int>(s) + 1;
            for (auto& [mu, c] : next) c *= request_weight(mu, req, level);
            coeff = std::move(next);
        }
        Rat total = 0;
        for (const auto& [lam, c] : coeff) total += c;
        return {total, bound};
    }

    // Direct summation over the explicit joint law.
    Rat total = 0;
    std::function<void(int, const Signature&, const Rat&)> rec = [&](int level,
                                                                     const Signature& lam,
                                                                     const Rat& prob) {
        Rat w = prob * request_weight(lam, req, level);
        if (level == static_cast<int>(chain.kernels.size())) {
            total += w;
            return;
        }
        for (const auto& [mu, v] : chain.kernels[level]->row(lam).atoms())
            rec(level + 1, mu, w * v);
    };
    for (const auto& [lam, w] : chain.levels[0].atoms()) rec(0, lam, w);
    return {total, bound};
}

MomentResult exact_covariance(const BuiltChain& chain, std::pair<int, unsigned> a,
                              std::pair<int, unsigned> b) {
    MomentRequest joint{{a, b}, false};
    MomentRequest ma{{a}, false};
    MomentRequest mb{{b}, false};
    MomentResult rj = exact_joint_moment(chain, joint);
    MomentResult ra = exact_joint_moment(chain, ma);
    MomentResult rb = exact_joint_moment(chain, mb);
    Rat bound = rj.truncation_bound + rat_abs(ra.value) * rb.truncation_bound +
                rat_abs(rb.value) * ra.truncation_bound;
    return {rj.value - ra.value * rb.value, bound};
}

bool verify_eigenrelation(unsigned m, const Signature& lambda, const SymbolicLimits& lim) {
    const int n = lambda.length();
    SparsePolynomial s = schur_to_polynomial(lambda, lim);
    SparsePolynomial v = vandermonde(n, lim);
    SparsePolynomial applied = (v * s).apply_euler_power(m);
    // exact division by the Vandermonde, factor by factor
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) applied = applied.divide_by_difference(i, j);
    }
    SparsePolynomial expected = s * Rat(power_sum(lambda, m));
    return applied == expected;
}

Rat lln_moment(const RSeries& F_at_1plus, unsigned k) {
    const std::size_t need = k + 2;
    if (F_at_1plus.size() + 1 < need)
        throw validation_error("lln_moment: series order too low for requested k");
    const std::size_t n = k + 3;

    // f(z) = 1/z + 1 + (1+z) F(1+z) as a Laurent series with offset -1:
    // row[i] is the coefficient of z^{i-1}.
    std::vector<Rat> f(n + 1, Rat(0));
    f[0] = 1;  // 1/z
    f[1] = Rat(1) + F_at_1plus.at(0);
    for (std::size_t j = 1; j < n; ++j) f[j + 1] = F_at_1plus.at(j) + F_at_1plus.at(j - 1);

    // f^{k+1}: offset -(k+1)
    std::vector<Rat> p{Rat(1)};
    for (unsigned rep = 0; rep < k + 1; ++rep) {
        std::vector<Rat> q(p.size() + f.size() - 1, Rat(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            for (std::size_t j = 0; j < f.size(); ++j) q[i + j] += p[i] * f[j];
        }
        p = std::move(q);
    }
    // residue of p(z) z^{-(k+1)} / (1+z): coefficient of z^{-1}, i.e. collect
    // p-index i with power i-(k+1), times (-1)^m from 1/(1+z) expansion.
    Rat res = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const long pw = static_cast<long>(i) - static_cast<long>(k + 1);
        if (pw > -1) break;
        const long mshift = -1 - pw;  // index into (1+z)^{-1} = sum (-1)^m z^m
        res += p[i] * ((mshift % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return res / Rat(static_cast<long>(k) + 1);
}

}  // namespace sgf
