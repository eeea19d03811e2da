#include "sgf/lr.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

namespace sgf {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::map<Signature, Int> lr_strips(const Signature& lambda, const Signature& mu,
                                   std::size_t max_states) {
    if (lambda.length() != mu.length())
        throw validation_error("lr_strips: signatures must have equal length");
    const int n = lambda.length();
    if (n == 0) return {{Signature(), Int(1)}};

    // Shift both to partitions; c^{lambda mu}_eta = c^{lambda+c, mu+c}_{eta+2c}.
    const int shift = std::max(0, -std::min(lambda.min_part(), mu.min_part()));
    std::vector<int> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = lambda[i] + shift;
    std::vector<int> content(n);
    for (int i = 0; i < n; ++i) content[i] = mu[i] + shift;

    // State: shape nu (n entries) followed by cumulative row counts of the last
    // strip (n entries).  Value: number of chains reaching it.
    using State = std::vector<int>;
    std::unordered_map<State, Int, VecHash> cur;
    {
        State s(2 * n, 0);
        for (int i = 0; i < n; ++i) s[i] = lam[i];
        // before any strip: no lattice constraint, encoded as "infinite" cums
        for (int i = 0; i < n; ++i) s[n + i] = std::numeric_limits<int>::max() / 2;
        cur.emplace(std::move(s), Int(1));
    }

    std::vector<int> strip(n);
    for (int v = 0; v < n; ++v) {
        const int k = content[v];
        std::unordered_map<State, Int, VecHash> next;
        for (const auto& [state, count] : cur) {
            const int* nu = state.data();
            const int* cumprev = state.data() + n;
            // enumerate row additions strip[0..n-1], sum = k, with
            //   nu'_r = nu_r + strip_r, nu'_r <= nu_{r-1} for r >= 1,
            //   sum_{s<=r} strip_s <= cumprev[r-1] (lattice; cumprev[-1] = 0 unused for v=0)
            std::function<void(int, int, int)> rec = [&](int r, int left, int cum) {
                if (r == n) {
                    if (left != 0) return;
                    State ns(2 * n);
                    int c = 0;
                    for (int i = 0; i < n; ++i) ns[i] = nu[i] + strip[i];
                    for (int i = 0; i < n; ++i) {
                        c += strip[i];
                        ns[n + i] = c;
                    }
                    auto it = next.find(ns);
                    if (it == next.end())
                        next.emplace(std::move(ns), count);
                    else
                        it->second += count;
                    return;
                }
                int cap = left;
                if (r > 0) cap = std::min(cap, nu[r - 1] - nu[r]);
                // lattice: cumulative through row r bounded by cumprev[r-1]
                const int lat = (r == 0) ? (v == 0 ? left : 0) : cumprev[r - 1] - cum;
                cap = std::min(cap, lat);
                for (int t = cap; t >= 0; --t) {
                    strip[r] = t;
                    rec(r + 1, left - t, cum + t);
                }
                strip[r] = 0;
            };
            rec(0, k, 0);
            if (next.size() > max_states) throw budget_error("lr_strips: state budget exceeded");
        }
        cur = std::move(next);
    }

    std::map<Signature, Int> out;
    for (const auto& [state, count] : cur) {
        std::vector<int> eta(state.begin(), state.begin() + n);
        for (int& e : eta) e -= 2 * shift;
        out[Signature(std::move(eta))] += count;
    }
    return out;
}

}  // namespace sgf
