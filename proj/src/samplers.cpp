#include "sgf/samplers.hpp"

#include "sgf/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sgf {

std::size_t draw_categorical(const std::vector<Rat>& weights, std::mt19937_64& rng) {
    Rat total = 0;
    for (const Rat& w : weights) {
        if (w < 0) throw validation_error("draw_categorical: negative weight");
        total += w;
    }
    if (total == 0) throw validation_error("draw_categorical: zero total weight");
    const std::uint64_t r = rng();
    Rat u = total * Rat(Int(r), Int(1) << 64);
    Rat acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

bool check_interlacing(const InterlacingArray& arr) {
    for (std::size_t t = 0; t + 1 < arr.levels.size(); ++t) {
        if (arr.levels[t].length() != static_cast<int>(t) + 1) return false;
        if (!interlaces(arr.levels[t], arr.levels[t + 1])) return false;
    }
    if (!arr.levels.empty() &&
        arr.levels.back().length() != static_cast<int>(arr.levels.size()))
        return false;
    return true;
}

bool check_aztec_interlacing(const std::vector<Signature>& slices) {
    for (std::size_t t = 0; t + 1 < slices.size(); ++t) {
        const Signature& lo = slices[t];      // t+1 particles
        const Signature& hi = slices[t + 1];  // t+2 particles
        if (lo.length() + 1 != hi.length()) return false;
        for (int i = 0; i < lo.length(); ++i) {
            if (!(hi[i + 1] <= lo[i] && lo[i] <= hi[i] + 1)) return false;
        }
    }
    return true;
}

namespace {

// Exact route for one projection level: enumerate interlacing mu, weight dim(mu).
Signature sample_level_exact(const Signature& lambda, std::mt19937_64& rng) {
    const int L = lambda.length() - 1;
    std::vector<int> lo(L), hi(L);
    for (int i = 0; i < L; ++i) {
        lo[i] = lambda[i + 1];
        hi[i] = lambda[i];
    }
    std::vector<Signature> support;
    std::vector<Rat> weights;
    enumerate_bounded(lo, hi, [&](const Signature& mu) {
        support.push_back(mu);
        weights.push_back(schur_dimension(mu));
    });
    return support[draw_categorical(weights, rng)];
}

// Determinant-ratio route.  Coordinates with singleton ranges are forced and
// eliminated analytically; over the free block, the conditional weight of
// candidate v for row i is a determinant with rows < i pinned and rows > i
// summed over their ranges (Vandermonde multilinearity, with the forced-pair
// interactions folded into per-row weights).  The identity holds in any monic
// column basis; a Newton basis on spread nodes plus data-driven column scaling
// keeps the system well conditioned, and the running inverse is updated by
// Sherman-Morrison as rows get pinned.  Falls back to the exact route if the
// numerics degrade.
Signature sample_level_det(const Signature& lambda, std::mt19937_64& rng) {
    const int L = lambda.length() - 1;

    std::vector<int> chosen(L);
    std::vector<int> free_idx;
    std::vector<long double> forced_vals;
    for (int i = 0; i < L; ++i) {
        if (lambda[i] == lambda[i + 1]) {
            chosen[i] = lambda[i];
            forced_vals.push_back(static_cast<long double>(lambda[i] + L - 1 - i));
        } else {
            free_idx.push_back(i);
        }
    }
    const int F = static_cast<int>(free_idx.size());
    if (F == 0) return Signature(std::move(chosen));

    // row weight from interactions with forced particles (ordering is fixed, so
    // plain absolute products keep all signs positive)
    auto forced_weight = [&](long double v) {
        long double w = 1.0L;
        for (long double f : forced_vals) w *= std::fabs(v - f);
        return w;
    };

    std::vector<std::vector<long double>> row_values(F);
    std::vector<std::vector<int>> row_parts(F);
    long double vmax = -1e30L, vmin = 1e30L;
    for (int r = 0; r < F; ++r) {
        const int i = free_idx[r];
        for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
            row_parts[r].push_back(v);
            row_values[r].push_back(static_cast<long double>(v + L - 1 - i));
        }
        vmax = std::max(vmax, row_values[r].front());
        vmin = std::min(vmin, row_values[r].back());
    }
    const long double span = std::max(vmax - vmin, 1.0L);

    // Newton nodes across [vmin, vmax]; p_j(x) = prod_{s<j} (x - c_s)
    std::vector<long double> nodes(F);
    for (int s = 0; s < F; ++s)
        nodes[s] = vmin + span * (F > 1 ? static_cast<long double>(s) / (F - 1) : 0.5L);
    std::vector<long double> colscale(F, 1.0L);
    auto basis_row = [&](long double v) {
        std::vector<long double> r(F);
        long double p = forced_weight(v);
        for (int j = 0; j < F; ++j) {
            r[j] = p * colscale[j];
            p *= (v - nodes[j]);
        }
        return r;
    };

    std::vector<std::vector<long double>> M(F, std::vector<long double>(F, 0.0L));
    for (int r = 0; r < F; ++r)
        for (long double v : row_values[r]) {
            auto pr = basis_row(v);
            for (int j = 0; j < F; ++j) M[r][j] += pr[j];
        }
    for (int j = 0; j < F; ++j) {
        long double mx = 0.0L;
        for (int i = 0; i < F; ++i) mx = std::max(mx, std::fabs(M[i][j]));
        if (mx > 0.0L) {
            colscale[j] = 1.0L / mx;
            for (int i = 0; i < F; ++i) M[i][j] *= colscale[j];
        }
    }

    // dense inverse via Gauss-Jordan with partial pivoting
    std::vector<std::vector<long double>> inv(F, std::vector<long double>(F, 0.0L));
    {
        std::vector<std::vector<long double>> A = M;
        for (int i = 0; i < F; ++i) inv[i][i] = 1.0L;
        for (int col = 0; col < F; ++col) {
            int piv = col;
            for (int r = col + 1; r < F; ++r)
                if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
            if (A[piv][col] == 0.0L) return sample_level_exact(lambda, rng);
            std::swap(A[piv], A[col]);
            std::swap(inv[piv], inv[col]);
            const long double d = A[col][col];
            for (int j = 0; j < F; ++j) {
                A[col][j] /= d;
                inv[col][j] /= d;
            }
            for (int r = 0; r < F; ++r) {
                if (r == col) continue;
                const long double f = A[r][col];
                if (f == 0.0L) continue;
                for (int j = 0; j < F; ++j) {
                    A[r][j] -= f * A[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }

    for (int r = 0; r < F; ++r) {
        std::vector<double> w(row_values[r].size());
        double wtot = 0;
        for (std::size_t c = 0; c < row_values[r].size(); ++c) {
            auto pr = basis_row(row_values[r][c]);
            long double dot = 0.0L;
            for (int j = 0; j < F; ++j) dot += pr[j] * inv[j][r];
            double val = static_cast<double>(dot);
            if (!std::isfinite(val)) return sample_level_exact(lambda, rng);
            w[c] = std::max(val, 0.0);
            wtot += w[c];
        }
        if (!(wtot > 0) || !std::isfinite(wtot)) return sample_level_exact(lambda, rng);
        double u = std::generate_canonical<double, 53>(rng) * wtot;
        std::size_t pick = 0;
        for (; pick + 1 < w.size(); ++pick) {
            if (u < w[pick]) break;
            u -= w[pick];
        }
        chosen[free_idx[r]] = row_parts[r][pick];

        // pin row r at the chosen value: Sherman-Morrison update of inv
        auto pr = basis_row(row_values[r][pick]);
        std::vector<long double> delta(F);
        for (int j = 0; j < F; ++j) delta[j] = pr[j] - M[r][j];
        std::vector<long double> dTinv(F, 0.0L);
        for (int j = 0; j < F; ++j) {
            long double acc = 0.0L;
            for (int t = 0; t < F; ++t) acc += delta[t] * inv[t][j];
            dTinv[j] = acc;
        }
        const long double denom = 1.0L + dTinv[r];
        if (std::fabs(static_cast<double>(denom)) < 1e-250 ||
            !std::isfinite(static_cast<double>(denom)))
            return sample_level_exact(lambda, rng);
        for (int t = 0; t < F; ++t) {
            const long double f = inv[t][r] / denom;
            if (f == 0.0L) continue;
            for (int j = 0; j < F; ++j) inv[t][j] -= f * dTinv[j];
        }
        for (int j = 0; j < F; ++j) M[r][j] = pr[j];
    }
    return Signature(std::move(chosen));
}

}  // namespace

InterlacingArray sample_trapezoid_path(const Signature& lambda, std::mt19937_64& rng) {
    const int N = lambda.length();
    InterlacingArray arr;
    arr.levels.assign(N, Signature());
    arr.levels[N - 1] = lambda;
    for (int t = N; t >= 2; --t) {
        const Signature& top = arr.levels[t - 1];
        long long combos = 1;
        bool small = (t <= 13);
        for (int i = 0; small && i + 1 < t; ++i) {
            combos *= (top[i] - top[i + 1] + 1);
            if (combos > 256) small = false;
        }
        arr.levels[t - 2] = small ? sample_level_exact(top, rng) : sample_level_det(top, rng);
    }
    return arr;
}

bool DominoConfiguration::inside(int x, int y) const {
    if (x < 0 || y < 0 || x >= 2 * N || y >= 2 * N) return false;
    const int w = std::min(y + 1, 2 * N - y);
    return x >= N - w && x < N + w;
}

long long DominoConfiguration::horizontal_pairs() const {
    long long h = 0;
    for (int y = 0; y < 2 * N; ++y)
        for (int x = 0; x < 2 * N; ++x) {
            char c = at(x, y);
            if (c == 'U' || c == 'D') ++h;  // left cell of a horizontal domino
        }
    return h / 2;  // horizontals come in created pairs
}

bool DominoConfiguration::valid() const {
    for (int y = 0; y < 2 * N; ++y)
        for (int x = 0; x < 2 * N; ++x) {
            if (!inside(x, y)) continue;
            char c = at(x, y);
            switch (c) {
                case 'U':
                case 'D':
                    if (!inside(x + 1, y) || at(x + 1, y) != static_cast<char>(std::tolower(c)))
                        return false;
                    break;
                case 'u':
                case 'd':
                    if (!inside(x - 1, y) || at(x - 1, y) != static_cast<char>(std::toupper(c)))
                        return false;
                    break;
                case 'L':
                case 'R':
                    if (!inside(x, y + 1) || at(x, y + 1) != static_cast<char>(std::tolower(c)))
                        return false;
                    break;
                case 'l':
                case 'r':
                    if (!inside(x, y - 1) || at(x, y - 1) != static_cast<char>(std::toupper(c)))
                        return false;
                    break;
                default:
                    return false;
            }
        }
    return true;
}

// Freshly created pairs separate on the next round: bottom horizontal moves
// down, top moves up; left vertical moves left, right moves right.  Slid
// dominoes keep their stored direction.  The particle reader only uses the
// distinguished-cell positions, not the direction letters.

DominoConfiguration sample_aztec(int N, double q, std::mt19937_64& rng) {
    if (N < 1) throw validation_error("sample_aztec: N >= 1");
    if (!(q > 0)) throw validation_error("sample_aztec: q > 0");
    const double ph = q / (1.0 + q);

    DominoConfiguration cur;
    cur.N = 0;
    for (int n = 1; n <= N; ++n) {
        DominoConfiguration next;
        next.N = n;
        next.cells.assign(static_cast<std::size_t>(2 * n) * 2 * n, '.');
        for (int y = 0; y < 2 * n; ++y)
            for (int x = 0; x < 2 * n; ++x)
                if (next.inside(x, y)) next.at(x, y) = ' ';

        if (n > 1) {
            const int m = n - 1;
            // destruction: facing pairs annihilate (U below D, R left of L)
            for (int y = 0; y < 2 * m; ++y)
                for (int x = 0; x < 2 * m; ++x) {
                    if (cur.at(x, y) == 'U' && y + 1 < 2 * m && cur.at(x, y + 1) == 'D') {
                        cur.at(x, y) = cur.at(x + 1, y) = ' ';
                        cur.at(x, y + 1) = cur.at(x + 1, y + 1) = ' ';
                    }
                    if (cur.at(x, y) == 'R' && x + 1 < 2 * m && cur.at(x + 1, y) == 'L') {
                        cur.at(x, y) = cur.at(x, y + 1) = ' ';
                        cur.at(x + 1, y) = cur.at(x + 1, y + 1) = ' ';
                    }
                }
            // sliding into the embedded (+1,+1) grid
            for (int y = 0; y < 2 * m; ++y)
                for (int x = 0; x < 2 * m; ++x) {
                    const char c = cur.at(x, y);
                    int nx = x + 1, ny = y + 1;
                    switch (c) {
                        case 'U': {
                            ny += 1;
                            next.at(nx, ny) = 'U';
                            next.at(nx + 1, ny) = 'u';
                            break;
                        }
                        case 'D': {
                            ny -= 1;
                            next.at(nx, ny) = 'D';
                            next.at(nx + 1, ny) = 'd';
                            break;
                        }
                        case 'L': {
                            nx -= 1;
                            next.at(nx, ny) = 'L';
                            next.at(nx, ny + 1) = 'l';
                            break;
                        }
                        case 'R': {
                            nx += 1;
                            next.at(nx, ny) = 'R';
                            next.at(nx, ny + 1) = 'r';
                            break;
                        }
                        default:
                            break;
                    }
                }
        }

        // creation: fill the remaining 2x2 blocks with the q-bias
        for (int y = 0; y < 2 * n; ++y)
            for (int x = 0; x < 2 * n; ++x) {
                if (next.at(x, y) != ' ') continue;
                if (!(next.inside(x + 1, y) && next.at(x + 1, y) == ' ' &&
                      next.inside(x, y + 1) && next.at(x, y + 1) == ' ' &&
                      next.inside(x + 1, y + 1) && next.at(x + 1, y + 1) == ' '))
                    throw validation_error("sample_aztec: creation block decomposition failed");
                const bool horizontal = std::generate_canonical<double, 53>(rng) < ph;
                if (horizontal) {
                    next.at(x, y) = 'D';
                    next.at(x + 1, y) = 'd';
                    next.at(x, y + 1) = 'U';
                    next.at(x + 1, y + 1) = 'u';
                } else {
                    next.at(x, y) = 'L';
                    next.at(x, y + 1) = 'l';
                    next.at(x + 1, y) = 'R';
                    next.at(x + 1, y + 1) = 'r';
                }
            }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Signature> aztec_to_signatures(const DominoConfiguration& d) {
    // Yellow particles: the chosen horizontal and vertical domino types, marked
    // at their distinguished (left resp. bottom) cell; the chosen classes carry
    // (x + y + N) even there.  Slice t = (x + y - N)/2 + 1 holds exactly t
    // particles; position p = y - (t-1) and lambda_i = p_i - (t-1-i) for the
    // descending order.  Calibrated against the exact chain law at N <= 2.
    const int N = d.N;
    std::vector<std::vector<int>> slice_positions(N + 1);
    for (int y = 0; y < 2 * N; ++y)
        for (int x = 0; x < 2 * N; ++x) {
            if (!d.inside(x, y)) continue;
            const char c = d.at(x, y);
            if (c != 'U' && c != 'D' && c != 'L' && c != 'R') continue;
            if ((x + y + N) & 1) continue;
            const int u = x + y - N;
            if (u < 0 || u % 2 != 0) continue;
            const int t = u / 2 + 1;
            if (t >= 1 && t <= N) slice_positions[t].push_back(y);
        }
    std::vector<Signature> out;
    for (int t = 1; t <= N; ++t) {
        auto& pos = slice_positions[t];
        if (static_cast<int>(pos.size()) != t)
            throw validation_error("aztec_to_signatures: slice particle count mismatch");
        std::sort(pos.rbegin(), pos.rend());
        std::vector<int> parts(t);
        for (int i = 0; i < t; ++i) parts[i] = (pos[i] - (t - 1)) - (t - 1 - i);
        out.push_back(Signature(std::move(parts)));
    }
    return out;
}

std::vector<Signature> sample_walks(const Signature& lambda0, const StepFunction& step,
                                    const std::vector<int>& times, std::mt19937_64& rng) {
    if (lambda0.length() > 6)
        throw budget_error("sample_walks: exact kernel rows budgeted to N <= 6");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i] > times[i + 1]) throw validation_error("sample_walks: times must increase");

    std::vector<Signature> out;
    Signature cur = lambda0;
    int now = 0;
    for (int t : times) {
        for (; now < t; ++now) {
            StepFunction one = step;
            if (auto* b = std::get_if<BernoulliStep>(&one)) b->t = 1;
            if (auto* g = std::get_if<GeometricStep>(&one)) g->t = 1;
            SignatureMeasure row = multiply_row(cur, one);
            std::vector<Signature> supp;
            std::vector<Rat> w;
            for (const auto& [mu, v] : row.atoms()) {
                supp.push_back(mu);
                w.push_back(v);
            }
            cur = supp[draw_categorical(w, rng)];
        }
        out.push_back(cur);
    }
    return out;
}

int height_function(const InterlacingArray& arr, double y, double eta) {
    const int N = arr.top_length();
    const int level = static_cast<int>(std::floor(N * eta));
    if (level < 1 || level > N) throw validation_error("height_function: level out of range");
    const Signature& lam = arr.levels[level - 1];
    int count = 0;
    for (int i = 0; i < level; ++i) {
        if (lam[i] + level - 1 - i >= N * y - 1e-12) ++count;
    }
    return count;
}

Rat height_moment(const InterlacingArray& arr, double eta, unsigned k) {
    const int N = arr.top_length();
    const int level = static_cast<int>(std::floor(N * eta));
    if (level < 1 || level > N) throw validation_error("height_moment: level out of range");
    const Signature& lam = arr.levels[level - 1];
    return Rat(power_sum(lam, k + 1)) /
           (Rat(static_cast<long>(k) + 1) * rat_pow(Rat(N), static_cast<long>(k) + 1));
}

CovarianceEstimate estimate_covariance(const std::vector<std::vector<double>>& rows) {
    const std::size_t R = rows.size();
    if (R < 2) throw validation_error("estimate_covariance: need at least 2 replicas");
    const std::size_t d = rows[0].size();

    std::vector<double> mean(d, 0.0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < d; ++j) mean[j] += r[j];
    for (double& m : mean) m /= static_cast<double>(R);

    auto cov_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<double> mu(d, 0.0);
        for (std::size_t r : idx)
            for (std::size_t j = 0; j < d; ++j) mu[j] += rows[r][j];
        for (double& m : mu) m /= static_cast<double>(idx.size());
        std::vector<std::vector<double>> c(d, std::vector<double>(d, 0.0));
        for (std::size_t r : idx)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    c[i][j] += (rows[r][i] - mu[i]) * (rows[r][j] - mu[j]);
        for (auto& row : c)
            for (double& v : row) v /= static_cast<double>(idx.size() - 1);
        return c;
    };

    std::vector<std::size_t> all(R);
    for (std::size_t r = 0; r < R; ++r) all[r] = r;
    CovarianceEstimate est;
    est.replicas = R;
    est.cov = cov_of(all);

    // jackknife standard errors
    std::vector<std::vector<std::vector<double>>> loo;
    loo.reserve(R);
    for (std::size_t skip = 0; skip < R; ++skip) {
        std::vector<std::size_t> idx;
        idx.reserve(R - 1);
        for (std::size_t r = 0; r < R; ++r)
            if (r != skip) idx.push_back(r);
        loo.push_back(cov_of(idx));
    }
    est.stderr_.assign(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double m = 0;
            for (const auto& c : loo) m += c[i][j];
            m /= static_cast<double>(R);
            double s = 0;
            for (const auto& c : loo) s += (c[i][j] - m) * (c[i][j] - m);
            est.stderr_[i][j] = std::sqrt(s * (R - 1) / static_cast<double>(R));
        }
    return est;
}

MeanEstimate estimate_mean(const std::vector<std::vector<double>>& rows) {
    const std::size_t R = rows.size();
    if (R < 2) throw validation_error("estimate_mean: need at least 2 replicas");
    const std::size_t d = rows[0].size();
    MeanEstimate est;
    est.mean.assign(d, 0.0);
    est.stderr_.assign(d, 0.0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < d; ++j) est.mean[j] += r[j];
    for (double& m : est.mean) m /= static_cast<double>(R);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < d; ++j) {
            const double dlt = r[j] - est.mean[j];
            est.stderr_[j] += dlt * dlt;
        }
    for (double& s : est.stderr_) s = std::sqrt(s / (R - 1.0) / static_cast<double>(R));
    return est;
}

}  // namespace sgf
