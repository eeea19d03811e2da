#include "sgf/kernels.hpp"

#include "sgf/lr.hpp"

#include <functional>
#include <sstream>

namespace sgf {

int step_target_length(const ChainStep& s, int source_length) {
    if (const auto* p = std::get_if<ProjectionStep>(&s)) {
        if (p->target_length > source_length)
            throw validation_error("projection step: target longer than source");
        return p->target_length;
    }
    if (std::get_if<MultiplicationStep>(&s)) return source_length;
    const auto& c = std::get<CombinedStep>(s);
    if (c.target_length > source_length)
        throw validation_error("combined step: target longer than source");
    return c.target_length;
}

const SignatureMeasure& TransitionKernel::row(const Signature& lambda) const {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    if (lambda.length() != source_length_)
        throw validation_error("kernel row: source length mismatch");

    SignatureMeasure r(target_length_);
    if (const auto* p = std::get_if<ProjectionStep>(&step_)) {
        r = project_row(lambda, p->target_length);
    } else if (const auto* m = std::get_if<MultiplicationStep>(&step_)) {
        r = multiply_row(lambda, m->g);
    } else {
        const auto& c = std::get<CombinedStep>(step_);
        SignatureMeasure mid = project_row(lambda, c.target_length);
        r = multiply_measure(mid, c.g);
    }
    return cache_.emplace(lambda, std::move(r)).first->second;
}

BuiltChain build_chain(const ChainSpec& spec, std::size_t max_atoms) {
    BuiltChain chain;
    chain.levels.push_back(spec.initial);
    int len = spec.initial.length();
    for (const ChainStep& step : spec.steps) {
        auto kernel = std::make_shared<TransitionKernel>(step, len);
        const SignatureMeasure& prev = chain.levels.back();
        SignatureMeasure next(kernel->target_length());
        for (const auto& [lam, w] : prev.atoms()) {
            for (const auto& [mu, v] : kernel->row(lam).atoms()) next.add(mu, w * v);
            if (next.size() > max_atoms) {
                std::ostringstream os;
                os << "build_chain: support exceeds " << max_atoms
                   << " atoms at level " << chain.levels.size();
                throw budget_error(os.str());
            }
        }
        next.set_truncation_mass(Rat(1) - next.total_mass());
        chain.kernels.push_back(std::move(kernel));
        chain.levels.push_back(std::move(next));
        len = chain.levels.back().length();
    }
    return chain;
}

SignatureMeasure tensor_measure(const Signature& lambda1, const Signature& lambda2) {
    if (lambda1.length() != lambda2.length())
        throw validation_error("tensor_measure: lengths differ");
    SignatureMeasure out(lambda1.length());
    const Rat norm = schur_dimension(lambda1) * schur_dimension(lambda2);
    for (const auto& [eta, c] : lr_strips(lambda1, lambda2)) {
        out.add(eta, Rat(c) * schur_dimension(eta) / norm);
    }
    return out;
}

SignatureMeasure schur_weyl_measure(int N, int n) {
    if (N < 1) throw validation_error("schur_weyl_measure: N >= 1 required");
    // rho(mu) = f^mu dim(mu) / N^n over partitions of n with at most N rows;
    // f^mu by the hook length formula.  Equality with the n-fold single-box
    // Pieri chain is asserted in tests.
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    const Rat norm = Rat(1) / rat_pow(Rat(N), n);

    SignatureMeasure m(N);
    std::vector<int> parts(N, 0);
    std::function<void(int, int)> gen = [&](int row, int left) {
        if (row == N) {
            if (left != 0) return;
            // hooks: h(i,j) = (lambda_i - j) + (#{r : lambda_r > j} - i) + 1 (0-based j)
            std::vector<int> cols;  // conjugate partition
            for (int j = 0; j < parts[0]; ++j) {
                int c = 0;
                while (c < N && parts[c] > j) ++c;
                cols.push_back(c);
            }
            Int hooks = 1;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < parts[i]; ++j)
                    hooks *= Int(parts[i] - j + cols[j] - i - 1);
            Signature mu{std::vector<int>(parts)};
            m.add(mu, Rat(nfact, hooks) * schur_dimension(mu) * norm);
            return;
        }
        const int cap = (row == 0) ? left : std::min(left, parts[row - 1]);
        for (int v = cap; v >= 0; --v) {
            parts[row] = v;
            gen(row + 1, left - v);
        }
        parts[row] = 0;
    };
    gen(0, n);
    return m;
}

ChainSpec aztec_chain(int N, const Rat& q) {
    if (N < 1) throw validation_error("aztec_chain: N >= 1 required");
    if (!(q > 0)) throw validation_error("aztec_chain: q > 0 required");
    const Rat beta = q / (q + Rat(1));
    ChainSpec spec(SignatureMeasure::delta(Signature::zero(N)));
    for (int t = N; t >= 1; --t) {
        spec.steps.push_back(MultiplicationStep{BernoulliStep{beta, 1}});
        if (t > 1) spec.steps.push_back(ProjectionStep{t - 1});
    }
    return spec;
}

int aztec_slice_level(int N, int t) {
    if (t < 1 || t > N) throw validation_error("aztec_slice_level: slice out of range");
    // step list: mult(N), proj(N-1), mult(N-1), ..., proj(1), mult(1)
    // level index of the marginal after the multiplication at length t:
    return 2 * (N - t) + 1;
}

}  // namespace sgf
