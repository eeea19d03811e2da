#pragma once

#include "sgf/rational.hpp"
#include "sgf/series.hpp"
#include "sgf/transforms.hpp"

#include <complex>

namespace sgf {

// Laurent series sum_i c[i] z^{off+i}.
template <class K>
struct Laurent {
    int off = 0;
    std::vector<K> c;

    K coeff(int power) const {
        const long i = static_cast<long>(power) - off;
        if (i < 0 || i >= static_cast<long>(c.size())) return K(0);
        return c[i];
    }
};

// Two-variable Taylor series sum a(i,j) z^i w^j, square truncation.
template <class K>
struct BiSeries {
    int n = 0;
    std::vector<K> a;

    explicit BiSeries(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order, K(0)) {}
    K& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    K get(int i, int j) const {
        if (i < 0 || j < 0 || i >= n || j >= n) return K(0);
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

// Integration kernel Q(z,w): analytic Taylor part plus the tagged singular
// 1/(z-w)^2, which is always handled as its |z|<|w| expansion and never
// evaluated near the diagonal.
template <class K>
struct CovKernel {
    BiSeries<K> analytic;
    bool with_singular = true;
};

// f(z) = 1/z + 1 + (1+z) F(1+z); input series holds the coefficients of F(1+z)
// as a power series in z.
template <class K>
Laurent<K> f_factor(const Series<K>& F, std::size_t order) {
    Laurent<K> f;
    f.off = -1;
    f.c.assign(order + 2, K(0));
    f.c[0] = K(1);
    f.c[1] = K(1) + (F.size() ? F.c[0] : K(0));
    for (std::size_t j = 1; j <= order; ++j) f.c[j + 1] = F.at(j) + F.at(j - 1);
    return f;
}

template <class K>
Laurent<K> laurent_pow(const Laurent<K>& f, unsigned k) {
    Laurent<K> r;
    r.off = 0;
    r.c = {K(1)};
    for (unsigned i = 0; i < k; ++i) {
        Laurent<K> q;
        q.off = r.off + f.off;
        q.c.assign(r.c.size() + f.c.size() - 1, K(0));
        for (std::size_t a = 0; a < r.c.size(); ++a) {
            if (r.c[a] == K(0)) continue;
            for (std::size_t b = 0; b < f.c.size(); ++b) q.c[a + b] += r.c[a] * f.c[b];
        }
        r = std::move(q);
    }
    return r;
}

// (A(z) - A(w)) / (z - w) for a one-variable Taylor series A.
template <class K>
BiSeries<K> divided_difference(const Series<K>& A, int order) {
    BiSeries<K> d(order);
    for (int j = 1; j < static_cast<int>(A.size()); ++j) {
        if (A.c[j] == K(0)) continue;
        for (int p = 0; p <= j - 1; ++p) {
            const int q = j - 1 - p;
            if (p < order && q < order) d.at(p, q) += A.c[j];
        }
    }
    return d;
}

template <class K>
BiSeries<K> bi_mul(const BiSeries<K>& x, const BiSeries<K>& y, int order) {
    BiSeries<K> r(order);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            const K v = x.get(i, j);
            if (v == K(0)) continue;
            for (int p = 0; p + i < order && p < y.n; ++p)
                for (int q = 0; q + j < order && q < y.n; ++q) {
                    const K u = y.get(p, q);
                    if (!(u == K(0))) r.at(i + p, j + q) += v * u;
                }
        }
    return r;
}

// d/dz d/dw log(1 - z w D(z,w)).
template <class K>
BiSeries<K> dzdw_log_one_minus_zwD(const BiSeries<K>& D, int order);

// Coefficient-extraction value of the double contour integral
//   (2 pi i)^{-2} oint oint f(z)^{k1} g(w)^{k2} Q(z,w) dz dw
// under the |z| < |w| ordering.
template <class K>
K double_contour(const Laurent<K>& f, unsigned k1, const Laurent<K>& g, unsigned k2,
                 const CovKernel<K>& Q) {
    Laurent<K> fk = laurent_pow(f, k1);
    Laurent<K> gl = laurent_pow(g, k2);
    K total = K(0);
    if (Q.with_singular) {
        for (int m = 0;; ++m) {
            const K a = fk.coeff(-m - 1);
            const K b = gl.coeff(m + 1);
            if (-m - 1 < fk.off) break;
            total += K(m + 1) * a * b;
        }
    }
    for (int i = 0; i < Q.analytic.n; ++i)
        for (int j = 0; j < Q.analytic.n; ++j) {
            const K t = Q.analytic.get(i, j);
            if (t == K(0)) continue;
            total += t * fk.coeff(-i - 1) * gl.coeff(-j - 1);
        }
    return total;
}

// Model covariances.  Series inputs are the per-level limit data: F holds the
// coefficients of F(1+z) in z, phi those of H'(1+z).  All values are exact when
// the inputs are rational.

// One-level CLT: kernel Q = G + 1/(z-w)^2 where G is given by its analytic part.
Rat clt_cov_one_level(const RSeries& F, const BiSeries<Rat>& G, unsigned k1, unsigned k2,
                      std::size_t order = 16);

// Projections: levels a1 <= a2, z-factor carries F/a1.
Rat clt_cov_projections(const RSeries& F, const BiSeries<Rat>& G, const Rat& a1, const Rat& a2,
                        unsigned k1, unsigned k2, std::size_t order = 16);

// Multiplication chains: index 1 is the later level (more factors), Q of the
// earlier level s2 enters.
Rat clt_cov_multiplication(const RSeries& F1, const RSeries& F2, const BiSeries<Rat>& G2,
                           unsigned k1, unsigned k2, std::size_t order = 16);

// Combined (time-space) chains: per-level-normalized F's, a1 <= a2.
Rat clt_cov_combined(const RSeries& F1, const RSeries& F2, const BiSeries<Rat>& G2,
                     const Rat& a1, const Rat& a2, unsigned k1, unsigned k2,
                     std::size_t order = 16);

// The kernel of a regular signature sequence with limit profile m:
// dzdw log(1 - zw ((1+z)H'(1+z) - (1+w)H'(1+w))/(z-w)), from the H'(1+z) series.
BiSeries<Rat> profile_kernel(const RSeries& h_prime_series, int order);

// Analytic part of the tensor-product kernel: profile kernels of both factors.
BiSeries<Rat> tensor_Q(const CompactMeasure& m1, const CompactMeasure& m2, int order);

Rat tensor_cov(const CompactMeasure& m1, const CompactMeasure& m2, unsigned k1, unsigned k2,
               std::size_t order = 16);

Rat schur_weyl_cov(const Rat& c, unsigned k1, unsigned k2, std::size_t order = 16);

Rat restriction_cov(const CompactMeasure& m, const Rat& a, unsigned k1, unsigned k2,
                    std::size_t order = 16);

// Aztec diamond: F_(a)(1+z) = (1-a) beta / (a (1 + beta z)), beta = q/(1+q); G = 0.
Rat aztec_cov(const Rat& q, const Rat& a1, const Rat& a2, unsigned k1, unsigned k2,
              std::size_t order = 16);

// Random-matrix limit covariance built from R-transforms (three-log kernel, no
// singular part).
Rat matrix_cov(const CompactMeasure& m1hat, const CompactMeasure& m2hat, unsigned k,
               unsigned l, std::size_t order = 16);

// |delta^{k+l} tensor_cov(scaled) - matrix_cov|; decreases as delta -> 0.
Rat matrix_degeneration_gap(const CompactMeasure& m1hat, const CompactMeasure& m2hat,
                            unsigned k, unsigned l, const Rat& delta, std::size_t order = 20);

// Numeric circle-quadrature evaluation of the same integral (independent
// cross-check; radii eps, 2 eps).
double double_contour_quadrature(const Laurent<double>& f, unsigned k1,
                                 const Laurent<double>& g, unsigned k2,
                                 const CovKernel<double>& Q, int nodes = 512,
                                 double eps = 0.01);

Laurent<double> to_double_laurent(const Laurent<Rat>& f);
CovKernel<double> to_double_kernel(const CovKernel<Rat>& q);

}  // namespace sgf
