#include "sgf/contour.hpp"

#include <cmath>

namespace sgf {

namespace {

// log(1 - u) = -sum u^m / m for a BiSeries u with u(0,0) = 0.
template <class K>
BiSeries<K> bi_log_one_minus(const BiSeries<K>& u, int order) {
    BiSeries<K> acc(order);
    BiSeries<K> pw = u;
    for (int m = 1; m <= 2 * order; ++m) {
        bool any = false;
        for (int i = 0; i < order && !any; ++i)
            for (int j = 0; j < order && !any; ++j)
                if (!(pw.get(i, j) == K(0))) any = true;
        if (!any) break;
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) acc.at(i, j) -= pw.get(i, j) / K(m);
        pw = bi_mul(pw, u, order);
    }
    return acc;
}

template <class K>
BiSeries<K> bi_dzdw(const BiSeries<K>& x) {
    BiSeries<K> r(x.n > 0 ? x.n - 1 : 0);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) r.at(i, j) = K((i + 1)) * K((j + 1)) * x.get(i + 1, j + 1);
    return r;
}

// (1+u) phi(u) from the phi series (coefficients of phi at 1+z in z).
template <class K>
Series<K> one_plus_z_times(const Series<K>& phi) {
    Series<K> r(phi.size() + 1);
    for (std::size_t j = 0; j < phi.size(); ++j) {
        r.c[j] += phi.c[j];
        r.c[j + 1] += phi.c[j];
    }
    return r;
}

template <class K>
BiSeries<K> kernel_term_from_A(const Series<K>& A, int order) {
    // dzdw log(1 - zw (A(z)-A(w))/(z-w))
    BiSeries<K> D = divided_difference(A, order + 2);
    BiSeries<K> zwD(order + 2);
    for (int i = 1; i < order + 2; ++i)
        for (int j = 1; j < order + 2; ++j) zwD.at(i, j) = D.get(i - 1, j - 1);
    return bi_dzdw(bi_log_one_minus(zwD, order + 1));
}

}  // namespace

template <class K>
BiSeries<K> dzdw_log_one_minus_zwD(const BiSeries<K>& D, int order) {
    BiSeries<K> zwD(order + 2);
    for (int i = 1; i < order + 2; ++i)
        for (int j = 1; j < order + 2; ++j) zwD.at(i, j) = D.get(i - 1, j - 1);
    return bi_dzdw(bi_log_one_minus(zwD, order + 1));
}

template BiSeries<Rat> dzdw_log_one_minus_zwD(const BiSeries<Rat>&, int);
template BiSeries<double> dzdw_log_one_minus_zwD(const BiSeries<double>&, int);

BiSeries<Rat> profile_kernel(const RSeries& h_prime_series, int order) {
    return kernel_term_from_A(one_plus_z_times(h_prime_series), order);
}

BiSeries<Rat> tensor_Q(const CompactMeasure& m1, const CompactMeasure& m2, int order) {
    const std::size_t so = static_cast<std::size_t>(order) + 4;
    BiSeries<Rat> q1 = profile_kernel(h_prime(m1, so), order);
    BiSeries<Rat> q2 = profile_kernel(h_prime(m2, so), order);
    BiSeries<Rat> r(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) r.at(i, j) = q1.get(i, j) + q2.get(i, j);
    return r;
}

namespace {

std::size_t grown_order(std::size_t order, unsigned k1, unsigned k2) {
    const std::size_t need = static_cast<std::size_t>(std::max(k1, k2)) + 4;
    return std::max(order, need);
}

Rat cov_value(const RSeries& Fz, const RSeries& Fw, const BiSeries<Rat>& G, unsigned k1,
              unsigned k2, std::size_t order) {
    Laurent<Rat> f = f_factor(Fz, order);
    Laurent<Rat> g = f_factor(Fw, order);
    CovKernel<Rat> Q{G, true};
    return double_contour(f, k1, g, k2, Q);
}

}  // namespace

Rat clt_cov_one_level(const RSeries& F, const BiSeries<Rat>& G, unsigned k1, unsigned k2,
                      std::size_t order) {
    order = grown_order(order, k1, k2);
    return cov_value(F, F, G, k1, k2, order);
}

Rat clt_cov_projections(const RSeries& F, const BiSeries<Rat>& G, const Rat& a1, const Rat& a2,
                        unsigned k1, unsigned k2, std::size_t order) {
    if (!(a1 > 0 && a1 <= a2 && a2 <= 1))
        throw validation_error("clt_cov_projections: need 0 < a1 <= a2 <= 1");
    order = grown_order(order, k1, k2);
    RSeries F1 = F * (Rat(1) / a1);
    RSeries F2 = F * (Rat(1) / a2);
    Rat pref = rat_pow(a1, k1) * rat_pow(a2, k2);
    return pref * cov_value(F1, F2, G, k1, k2, order);
}

Rat clt_cov_multiplication(const RSeries& F1, const RSeries& F2, const BiSeries<Rat>& G2,
                           unsigned k1, unsigned k2, std::size_t order) {
    order = grown_order(order, k1, k2);
    return cov_value(F1, F2, G2, k1, k2, order);
}

Rat clt_cov_combined(const RSeries& F1, const RSeries& F2, const BiSeries<Rat>& G2,
                     const Rat& a1, const Rat& a2, unsigned k1, unsigned k2,
                     std::size_t order) {
    if (!(a1 > 0 && a1 <= a2))
        throw validation_error("clt_cov_combined: need 0 < a1 <= a2");
    order = grown_order(order, k1, k2);
    Rat pref = rat_pow(a1, k1) * rat_pow(a2, k2);
    return pref * cov_value(F1, F2, G2, k1, k2, order);
}

Rat tensor_cov(const CompactMeasure& m1, const CompactMeasure& m2, unsigned k1, unsigned k2,
               std::size_t order) {
    order = grown_order(order, k1, k2);
    const std::size_t so = order + 4;
    RSeries F = h_prime(m1, so) + h_prime(m2, so);
    return cov_value(F, F, tensor_Q(m1, m2, static_cast<int>(order)), k1, k2, order);
}

Rat schur_weyl_cov(const Rat& c, unsigned k1, unsigned k2, std::size_t order) {
    order = grown_order(order, k1, k2);
    RSeries F = RSeries::constant(c, order + 2);
    BiSeries<Rat> G(static_cast<int>(order));
    G.at(0, 0) = -c;
    return cov_value(F, F, G, k1, k2, order);
}

Rat restriction_cov(const CompactMeasure& m, const Rat& a, unsigned k1, unsigned k2,
                    std::size_t order) {
    if (!(a > 0 && a <= 1)) throw validation_error("restriction_cov: need 0 < a <= 1");
    order = grown_order(order, k1, k2);
    const std::size_t so = order + 4;
    RSeries hp = h_prime(m, so);
    return clt_cov_projections(hp, profile_kernel(hp, static_cast<int>(order)), a, a, k1, k2,
                               order);
}

Rat aztec_cov(const Rat& q, const Rat& a1, const Rat& a2, unsigned k1, unsigned k2,
              std::size_t order) {
    if (!(q > 0)) throw validation_error("aztec_cov: q > 0 required");
    if (!(a1 > 0 && a1 <= a2 && a2 <= 1))
        throw validation_error("aztec_cov: need 0 < a1 <= a2 <= 1");
    order = grown_order(order, k1, k2);
    const Rat beta = q / (q + Rat(1));
    auto level_F = [&](const Rat& a) {
        // (1-a) beta / (a (1 + beta z)) = ((1-a) beta / a) sum (-beta)^j z^j
        RSeries F(order + 2);
        Rat coef = (Rat(1) - a) * beta / a;
        for (std::size_t j = 0; j < F.size(); ++j) {
            F.c[j] = coef;
            coef *= -beta;
        }
        return F;
    };
    BiSeries<Rat> G(static_cast<int>(order));
    Rat pref = rat_pow(a1, k1) * rat_pow(a2, k2);
    return pref * cov_value(level_F(a1), level_F(a2), G, k1, k2, order);
}

Rat matrix_cov(const CompactMeasure& m1hat, const CompactMeasure& m2hat, unsigned k, unsigned l,
               std::size_t order) {
    order = grown_order(order, k, l);
    const std::size_t so = order + 4;
    RSeries R1 = r_transform(m1hat, so);
    RSeries R2 = r_transform(m2hat, so);
    RSeries R12 = R1 + R2;

    const int n = static_cast<int>(order);
    BiSeries<Rat> kern(n);
    auto add_term = [&](const RSeries& R, const Rat& sign) {
        BiSeries<Rat> t = kernel_term_from_A(R, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) kern.at(i, j) += sign * t.get(i, j);
    };
    add_term(R1, Rat(1));
    add_term(R2, Rat(1));
    add_term(R12, Rat(-1));

    // prefactors (1/z + R1(z) + R2(z))^k; same Laurent shape as f_factor output
    auto pref = [&](const RSeries& R) {
        Laurent<Rat> f;
        f.off = -1;
        f.c.assign(order + 2, Rat(0));
        f.c[0] = 1;
        for (std::size_t j = 0; j + 1 < f.c.size() && j < R.size(); ++j) f.c[j + 1] += R.c[j];
        return f;
    };
    CovKernel<Rat> Q{kern, false};
    return double_contour(pref(R12), k, pref(R12), l, Q);
}

Rat matrix_degeneration_gap(const CompactMeasure& m1hat, const CompactMeasure& m2hat,
                            unsigned k, unsigned l, const Rat& delta, std::size_t order) {
    if (!(delta > 0 && delta < 1))
        throw validation_error("matrix_degeneration_gap: need 0 < delta < 1");
    CompactMeasure s1 = m1hat.scaled(Rat(1) / delta);
    CompactMeasure s2 = m2hat.scaled(Rat(1) / delta);
    Rat tensor_side = rat_pow(delta, static_cast<long>(k + l)) * tensor_cov(s1, s2, k, l, order);
    Rat matrix_side = matrix_cov(m1hat, m2hat, k, l, order);
    return rat_abs(tensor_side - matrix_side);
}

Laurent<double> to_double_laurent(const Laurent<Rat>& f) {
    Laurent<double> r;
    r.off = f.off;
    r.c.resize(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = to_double(f.c[i]);
    return r;
}

CovKernel<double> to_double_kernel(const CovKernel<Rat>& q) {
    CovKernel<double> r{BiSeries<double>(q.analytic.n), q.with_singular};
    for (std::size_t i = 0; i < q.analytic.a.size(); ++i) r.analytic.a[i] = to_double(q.analytic.a[i]);
    return r;
}

double double_contour_quadrature(const Laurent<double>& f, unsigned k1,
                                 const Laurent<double>& g, unsigned k2,
                                 const CovKernel<double>& Q, int nodes, double eps) {
    using C = std::complex<long double>;
    auto cpow = [](C base, int e) {
        C r(1.0L, 0.0L);
        bool invert = e < 0;
        unsigned u = static_cast<unsigned>(invert ? -e : e);
        while (u) {
            if (u & 1u) r *= base;
            base *= base;
            u >>= 1u;
        }
        return invert ? C(1.0L, 0.0L) / r : r;
    };
    auto eval_laurent = [&](const Laurent<double>& s, C z) {
        C acc(0.0L, 0.0L);
        C zp = cpow(z, s.off);
        for (double c : s.c) {
            acc += static_cast<long double>(c) * zp;
            zp *= z;
        }
        return acc;
    };
    auto eval_kernel = [&](C z, C w) {
        C acc(0.0L, 0.0L);
        C zp(1.0L, 0.0L);
        for (int i = 0; i < Q.analytic.n; ++i) {
            C wp(1.0L, 0.0L);
            for (int j = 0; j < Q.analytic.n; ++j) {
                acc += static_cast<long double>(Q.analytic.get(i, j)) * zp * wp;
                wp *= w;
            }
            zp *= z;
        }
        if (Q.with_singular) {
            C d = z - w;
            acc += C(1.0L, 0.0L) / (d * d);
        }
        return acc;
    };

    const long double r1 = eps, r2 = 2 * eps;
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    C total(0.0L, 0.0L);
    for (int i = 0; i < nodes; ++i) {
        const long double th1 = two_pi * i / nodes;
        const C z = C(r1 * std::cos(th1), r1 * std::sin(th1));
        C fz = cpow(eval_laurent(f, z), static_cast<int>(k1));
        for (int j = 0; j < nodes; ++j) {
            const long double th2 = two_pi * (j + 0.5L) / nodes;
            const C w = C(r2 * std::cos(th2), r2 * std::sin(th2));
            C gw = cpow(eval_laurent(g, w), static_cast<int>(k2));
            total += fz * gw * eval_kernel(z, w) * z * w;
        }
    }
    total /= static_cast<long double>(nodes) * static_cast<long double>(nodes);
    return static_cast<double>(total.real());
}

}  // namespace sgf
