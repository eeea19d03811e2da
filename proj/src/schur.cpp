#include "sgf/schur.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace sgf {

std::vector<Rat> homogeneous_values(const RationalPoint& x, int deg) {
    // h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j)
    std::vector<Rat> h(deg + 1, Rat(0));
    h[0] = 1;
    for (const Rat& xi : x) {
        for (int k = 1; k <= deg; ++k) h[k] += xi * h[k - 1];
    }
    return h;
}

Rat rational_det(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rat schur_evaluate(const Signature& lambda, const RationalPoint& x) {
    const int n = lambda.length();
    if (static_cast<int>(x.size()) != n)
        throw validation_error("schur_evaluate: point length must equal signature length");
    if (n == 0) return Rat(1);

    int shift = 0;
    if (lambda.min_part() < 0) {
        shift = -lambda.min_part();
        for (const Rat& xi : x) {
            if (xi == 0)
                throw validation_error("schur_evaluate: zero coordinate with negative parts");
        }
    }
    const Signature lam = lambda.shifted_by(shift);

    const int deg = lam.max_part() + n;
    std::vector<Rat> h = homogeneous_values(x, deg);
    auto hval = [&](int k) -> Rat {
        if (k < 0) return Rat(0);
        return h[k];
    };

    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = hval(lam[i] - (i + 1) + (j + 1));
    }
    Rat det = rational_det(std::move(m));

    if (shift) {
        Rat prod = 1;
        for (const Rat& xi : x) prod *= xi;
        det /= rat_pow(prod, shift);
    }
    return det;
}

Rat schur_dimension(const Signature& lambda) {
    const int n = lambda.length();
    Rat num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= Rat(lambda[i] - lambda[j] + j - i);
            den *= Rat(j - i);
        }
    }
    return num / den;
}

Rat skew_dimension(const Signature& lambda, const Signature& mu, int k) {
    if (k < 0) throw validation_error("skew_dimension: negative variable count");
    const int m = lambda.length();
    const int n = mu.length();
    if (n > m) throw validation_error("skew_dimension: mu longer than lambda");

    int shift = std::max(0, -std::min(lambda.min_part(), mu.min_part()));
    const Signature lam = lambda.shifted_by(shift);
    const Signature muu = mu.shifted_by(shift);

    auto mu_at = [&](int j) -> int { return j < n ? muu[j] : 0; };
    for (int j = 0; j < m; ++j) {
        if (mu_at(j) > lam[j]) return Rat(0);
    }
    // h_r(1^k) = C(r+k-1, r); zero for r<0; for k=0 only r=0 survives.
    auto h_ones = [&](long r) -> Rat {
        if (r < 0) return Rat(0);
        if (r == 0) return Rat(1);
        if (k == 0) return Rat(0);
        Rat v = 1;
        for (long t = 1; t <= r; ++t) v *= Rat(Int(k - 1 + t), Int(t));
        return v;
    };

    std::vector<std::vector<Rat>> mat(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            mat[i][j] = h_ones(static_cast<long>(lam[i]) - mu_at(j) - (i + 1) + (j + 1));
        }
    }
    return rational_det(std::move(mat));
}

namespace {

void check_limits(const Signature& lambda, const SymbolicLimits& lim, const char* who) {
    if (lambda.length() > lim.max_vars) {
        std::ostringstream os;
        os << who << ": length " << lambda.length() << " exceeds symbolic limit "
           << lim.max_vars;
        throw budget_error(os.str());
    }
    long long boxes = 0;
    int shift = std::max(0, -lambda.min_part());
    for (int i = 0; i < lambda.length(); ++i) boxes += lambda[i] + shift;
    if (boxes > lim.max_boxes) {
        std::ostringstream os;
        os << who << ": " << boxes << " boxes exceed symbolic limit " << lim.max_boxes;
        throw budget_error(os.str());
    }
}

// h_k as a polynomial: all monomials of degree k, coefficient 1.
SparsePolynomial h_poly(int nvars, int k) {
    SparsePolynomial p(nvars);
    if (k < 0) return p;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[i] = left;
            p.add_term(e, Rat(1));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (nvars == 0) {
        if (k == 0) return SparsePolynomial::constant(0, Rat(1));
        return p;
    }
    rec(0, k);
    return p;
}

}  // namespace

SparsePolynomial schur_to_polynomial(const Signature& lambda, const SymbolicLimits& lim) {
    check_limits(lambda, lim, "schur_to_polynomial");
    const int n = lambda.length();
    if (n == 0) return SparsePolynomial::constant(0, Rat(1));

    int shift = std::max(0, -lambda.min_part());
    const Signature lam = lambda.shifted_by(shift);

    // Jacobi-Trudi determinant expanded over permutations (n <= 5).
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    SparsePolynomial acc(n);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        SparsePolynomial term = SparsePolynomial::constant(n, Rat(inv % 2 ? -1 : 1));
        bool zero = false;
        for (int i = 0; i < n; ++i) {
            int deg = lam[i] - (i + 1) + (perm[i] + 1);
            if (deg < 0) {
                zero = true;
                break;
            }
            term = term * h_poly(n, deg);
        }
        if (!zero) acc = acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (shift) {
        SparsePolynomial::Expo e(n, -shift);
        acc = acc * SparsePolynomial::monomial(n, e, Rat(1));
    }
    return acc;
}

SparsePolynomial vandermonde(int n, const SymbolicLimits& lim) {
    if (n > lim.max_vars) throw budget_error("vandermonde: variable count exceeds limit");
    SparsePolynomial v = SparsePolynomial::constant(n, Rat(1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            v = v * (SparsePolynomial::variable(n, i) - SparsePolynomial::variable(n, j));
        }
    }
    return v;
}

std::map<Signature, Int> lr_expand(const Signature& lambda, const Signature& mu,
                                   const SymbolicLimits& lim) {
    if (lambda.length() != mu.length())
        throw validation_error("lr_expand: signatures must have equal length");
    const int n = lambda.length();
    check_limits(lambda, lim, "lr_expand");
    check_limits(mu, lim, "lr_expand");

    SparsePolynomial prod = schur_to_polynomial(lambda, lim) * schur_to_polynomial(mu, lim);

    // Eliminate from the top of dominance order: repeatedly take the
    // lexicographically largest exponent (weakly decreasing by symmetry),
    // subtract that Schur polynomial, record the coefficient.
    std::map<Signature, Int> out;
    while (!prod.is_zero()) {
        auto lead = std::prev(prod.terms().end());
        std::vector<int> e = lead->first;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] < e[i + 1])
                throw validation_error("lr_expand: leading exponent not dominant");
        }
        Rat c = lead->second;
        if (denominator(c) != 1 || c <= 0)
            throw validation_error("lr_expand: non-positive-integer leading coefficient");
        Signature eta{std::vector<int>(e)};
        SymbolicLimits free_lim{n, std::numeric_limits<long long>::max()};
        prod = prod - schur_to_polynomial(eta, free_lim) * c;
        out[eta] = numerator(c);
    }
    return out;
}

}  // namespace sgf
