#include "sgf/steps.hpp"

#include "sgf/lr.hpp"

#include <functional>

namespace sgf {

namespace {

// Vertical strips mu >= lambda, mu_i - lambda_i in {0,1}: one Bernoulli layer.
void visit_vertical_strips(const Signature& lambda,
                           const std::function<void(const Signature&, int)>& visit) {
    const int n = lambda.length();
    std::vector<int> mu(n);
    std::function<void(int, int)> rec = [&](int i, int added) {
        if (i == n) {
            visit(Signature(mu), added);
            return;
        }
        for (int d = 0; d <= 1; ++d) {
            mu[i] = lambda[i] + d;
            if (i > 0 && mu[i] > mu[i - 1]) continue;
            rec(i + 1, added + d);
        }
    };
    if (n == 0) {
        visit(lambda, 0);
        return;
    }
    rec(0, 0);
}

// Horizontal strips mu containing lambda with |mu/lambda| = k:
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
void visit_horizontal_strips(const Signature& lambda, int k,
                             const std::function<void(const Signature&)>& visit) {
    const int n = lambda.length();
    std::vector<int> mu(n);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left == 0) visit(Signature(mu));
            return;
        }
        const int lo = lambda[i];
        const int hi = (i == 0) ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        for (int v = lo; v <= hi; ++v) {
            mu[i] = v;
            rec(i + 1, left - (v - lambda[i]));
        }
    };
    if (n == 0) {
        if (k == 0) visit(lambda);
        return;
    }
    rec(0, k);
}

SignatureMeasure bernoulli_row_once(const Signature& lambda, const Rat& beta) {
    const int n = lambda.length();
    SignatureMeasure out(n);
    const Rat dl = schur_dimension(lambda);
    visit_vertical_strips(lambda, [&](const Signature& mu, int added) {
        Rat w = rat_pow(beta, added) * rat_pow(Rat(1) - beta, n - added);
        out.add(mu, w * schur_dimension(mu) / dl);
    });
    return out;
}

SignatureMeasure geometric_row_once(const Signature& lambda, const Rat& alpha, const Rat& eps) {
    // g = prod_i 1/(1 - alpha(x_i - 1)) = (1+alpha)^{-N} sum_k (alpha/(1+alpha))^k h_k
    const int n = lambda.length();
    SignatureMeasure out(n);
    const Rat dl = schur_dimension(lambda);
    const Rat abar = alpha / (Rat(1) + alpha);
    const Rat norm = rat_pow(Rat(1) + alpha, -n);
    Rat mass = 0;
    Rat coef = norm;  // norm * abar^k
    for (int k = 0;; ++k) {
        visit_horizontal_strips(lambda, k, [&](const Signature& mu) {
            Rat w = coef * schur_dimension(mu) / dl;
            out.add(mu, w);
            mass += w;
        });
        if (Rat(1) - mass <= eps) break;
        if (k > 4096) throw budget_error("geometric step: truncation did not converge");
        coef *= abar;
    }
    out.set_truncation_mass(Rat(1) - mass);
    return out;
}

SignatureMeasure poisson_row(const Signature& lambda, const Rat& gt, const Rat& eps) {
    // st(lambda -> mu) = e^{-N gt} (gt)^r f^{mu/lambda} dim(mu) / (r! dim(lambda)),
    // r = |mu/lambda|.  The normalizer e^{N gt} is replaced by a rational upper
    // bound; the (recorded) deficit covers both the tail and the approximation.
    const int n = lambda.length();
    const Rat x = Rat(n) * gt;

    // partial sums of e^x plus rigorous tail bound
    int R = 8;
    Rat S = 0, T = 0, term = 1;
    for (;;) {
        S = 0;
        term = 1;
        for (int r = 0; r <= R; ++r) {
            S += term;
            term *= x / Rat(r + 1);
        }
        // term = x^{R+1}/(R+1)!; tail <= term / (1 - x/(R+2)) once x < R+2
        if (Rat(R + 2) > x) {
            T = term / (Rat(1) - x / Rat(R + 2));
            if (T * (Rat(1) - eps) <= eps * S) break;
        }
        R *= 2;
        if (R > 1 << 20) throw budget_error("poisson step: normalizer did not converge");
    }
    const Rat Ehat = S + T;  // >= e^x

    SignatureMeasure out(n);
    const Rat dl = schur_dimension(lambda);
    // BFS over single-box additions; paths[mu] = f^{mu/lambda}
    std::map<Signature, Int> paths;
    paths[lambda] = 1;
    Rat mass = 0;
    Rat coef = Rat(1) / Ehat;  // (gt)^r / (r! Ehat)
    for (int r = 0;; ++r) {
        for (const auto& [mu, f] : paths) {
            Rat w = coef * Rat(f) * schur_dimension(mu) / dl;
            out.add(mu, w);
            mass += w;
        }
        if (Rat(1) - mass <= eps) break;
        if (r > 4096) throw budget_error("poisson step: truncation did not converge");
        std::map<Signature, Int> next;
        for (const auto& [mu, f] : paths) {
            for (int i = 0; i < n; ++i) {
                if (i > 0 && mu[i] + 1 > mu[i - 1]) continue;
                std::vector<int> p = mu.parts();
                p[i] += 1;
                next[Signature(std::move(p))] += f;
            }
        }
        paths = std::move(next);
        coef *= gt / Rat(r + 1);
    }
    out.set_truncation_mass(Rat(1) - mass);
    return out;
}

SignatureMeasure explicit_row(const Signature& lambda, const SignatureMeasure& sigma) {
    // st(lambda -> mu) = sum_eta sigma(eta) c^{lambda eta}_mu dim(mu)/(dim lambda dim eta)
    const int n = lambda.length();
    if (sigma.length() != n)
        throw validation_error("explicit step: length mismatch");
    SignatureMeasure out(n);
    const Rat dl = schur_dimension(lambda);
    for (const auto& [eta, wEta] : sigma.atoms()) {
        const Rat de = schur_dimension(eta);
        for (const auto& [mu, c] : lr_strips(lambda, eta)) {
            if (c < 0) throw validation_error("explicit step: negative expansion coefficient");
            out.add(mu, wEta * Rat(c) * schur_dimension(mu) / (dl * de));
        }
    }
    out.set_truncation_mass(sigma.truncation_mass());
    return out;
}

}  // namespace

void validate_step(const StepFunction& g) {
    if (const auto* b = std::get_if<BernoulliStep>(&g)) {
        if (!(b->beta > 0 && b->beta < 1)) throw validation_error("bernoulli: need 0 < beta < 1");
        if (b->t < 0) throw validation_error("bernoulli: negative time");
    } else if (const auto* ge = std::get_if<GeometricStep>(&g)) {
        if (!(ge->alpha > 0 && ge->alpha < 1))
            throw validation_error("geometric: need 0 < alpha < 1");
        if (ge->t < 0) throw validation_error("geometric: negative time");
    } else if (const auto* p = std::get_if<PoissonStep>(&g)) {
        if (!(p->gamma_tau > 0)) throw validation_error("poisson: need gamma*tau > 0");
    }
}

SignatureMeasure multiply_row(const Signature& lambda, const StepFunction& g) {
    validate_step(g);
    if (const auto* b = std::get_if<BernoulliStep>(&g)) {
        SignatureMeasure m = SignatureMeasure::delta(lambda);
        for (int s = 0; s < b->t; ++s) {
            SignatureMeasure next(m.length());
            next.set_truncation_mass(m.truncation_mass());
            for (const auto& [lam, w] : m.atoms()) {
                const SignatureMeasure row = bernoulli_row_once(lam, b->beta);
                for (const auto& [mu, v] : row.atoms()) next.add(mu, w * v);
            }
            m = std::move(next);
        }
        return m;
    }
    if (const auto* ge = std::get_if<GeometricStep>(&g)) {
        SignatureMeasure m = SignatureMeasure::delta(lambda);
        for (int s = 0; s < ge->t; ++s) {
            SignatureMeasure next(m.length());
            Rat mass = 0;
            for (const auto& [lam, w] : m.atoms()) {
                SignatureMeasure row = geometric_row_once(lam, ge->alpha, ge->epsilon);
                for (const auto& [mu, v] : row.atoms()) next.add(mu, w * v);
            }
            mass = next.total_mass();
            next.set_truncation_mass(Rat(1) - mass);
            m = std::move(next);
        }
        return m;
    }
    if (const auto* p = std::get_if<PoissonStep>(&g)) return poisson_row(lambda, p->gamma_tau, p->epsilon);
    return explicit_row(lambda, std::get<ExplicitStep>(g).sigma);
}

SignatureMeasure project_row(const Signature& lambda, int n) {
    const int m = lambda.length();
    if (n > m) throw validation_error("project_row: target longer than source");
    if (n == m) return SignatureMeasure::delta(lambda);

    SignatureMeasure out(n);
    const int k = m - n;
    const Rat dl = schur_dimension(lambda);
    std::vector<int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = lambda[i + k];
        hi[i] = lambda[i];
    }
    enumerate_bounded(lo, hi, [&](const Signature& mu) {
        Rat sk = (k == 1) ? (interlaces(mu, lambda) ? Rat(1) : Rat(0))
                          : skew_dimension(lambda, mu, k);
        if (sk == 0) return;
        out.add(mu, sk * schur_dimension(mu) / dl);
    });
    return out;
}

SignatureMeasure multiply_measure(const SignatureMeasure& rho, const StepFunction& g) {
    SignatureMeasure out(rho.length());
    for (const auto& [lam, w] : rho.atoms()) {
        const SignatureMeasure row = multiply_row(lam, g);
        for (const auto& [mu, v] : row.atoms()) out.add(mu, w * v);
    }
    out.set_truncation_mass(Rat(1) - out.total_mass());
    return out;
}

SignatureMeasure project_measure(const SignatureMeasure& rho, int n) {
    SignatureMeasure out(n);
    for (const auto& [lam, w] : rho.atoms()) {
        const SignatureMeasure row = project_row(lam, n);
        for (const auto& [mu, v] : row.atoms()) out.add(mu, w * v);
    }
    out.set_truncation_mass(rho.truncation_mass());
    return out;
}

}  // namespace sgf
