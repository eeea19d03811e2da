#pragma once

#include "sgf/rational.hpp"

#include <complex>
#include <vector>

namespace sgf {

// Dense truncated power series sum_{j=0..M} c[j] z^j.  The coefficient field K is
// Rat for exact work and double/complex<double> for numeric evaluation.  All
// binary operations truncate to the shorter operand's order; callers size inputs
// for the order they need (acceptance tests state theirs explicitly).
template <class K>
struct Series {
    std::vector<K> c;

    Series() = default;
    explicit Series(std::size_t order_plus_one, const K& fill = K(0)) : c(order_plus_one, fill) {}

    std::size_t size() const { return c.size(); }
    int order() const { return static_cast<int>(c.size()) - 1; }

    K at(std::size_t j) const { return j < c.size() ? c[j] : K(0); }

    static Series constant(const K& v, std::size_t n) {
        Series s(n);
        if (n) s.c[0] = v;
        return s;
    }

    bool is_zero() const {
        for (const K& v : c)
            if (!(v == K(0))) return false;
        return true;
    }
};

template <class K>
Series<K> truncate(const Series<K>& a, std::size_t n) {
    Series<K> r = a;
    r.c.resize(n, K(0));
    return r;
}

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
    Series<K> r(std::min(a.size(), b.size()));
    for (std::size_t j = 0; j < r.size(); ++j) r.c[j] = a.c[j] + b.c[j];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
    Series<K> r(std::min(a.size(), b.size()));
    for (std::size_t j = 0; j < r.size(); ++j) r.c[j] = a.c[j] - b.c[j];
    return r;
}

template <class K>
Series<K> operator*(const Series<K>& a, const K& s) {
    Series<K> r = a;
    for (K& v : r.c) v = v * s;
    return r;
}

template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b, std::size_t n) {
    Series<K> r(n);
    const std::size_t na = std::min(a.size(), n), nb = std::min(b.size(), n);
    for (std::size_t i = 0; i < na; ++i) {
        if (a.c[i] == K(0)) continue;
        for (std::size_t j = 0; j < nb && i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
    return mul(a, b, std::min(a.size(), b.size()));
}

// 1/a with a(0) != 0.
template <class K>
Series<K> reciprocal(const Series<K>& a, std::size_t n) {
    if (a.size() == 0 || a.c[0] == K(0))
        throw validation_error("series reciprocal: vanishing constant term");
    Series<K> r(n);
    r.c[0] = K(1) / a.c[0];
    for (std::size_t j = 1; j < n; ++j) {
        K acc = K(0);
        for (std::size_t i = 1; i <= j; ++i) acc += a.at(i) * r.c[j - i];
        r.c[j] = -acc / a.c[0];
    }
    return r;
}

template <class K>
Series<K> divide(const Series<K>& a, const Series<K>& b, std::size_t n) {
    return mul(a, reciprocal(b, n), n);
}

// a(g(z)) with g(0) = 0.
template <class K>
Series<K> compose(const Series<K>& a, const Series<K>& g, std::size_t n) {
    if (g.size() && g.c[0] != K(0))
        throw validation_error("series compose: inner series must vanish at 0");
    Series<K> r(n);
    Series<K> pw = Series<K>::constant(K(1), n);
    for (std::size_t j = 0; j < a.size() && j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) r.c[i] += a.c[j] * pw.c[i];
        pw = mul(pw, g, n);
        if (pw.is_zero()) break;
    }
    return r;
}

template <class K>
Series<K> derivative(const Series<K>& a) {
    if (a.size() <= 1) return Series<K>(a.size() ? a.size() - 1 : 0);
    Series<K> r(a.size() - 1);
    for (std::size_t j = 1; j < a.size(); ++j) r.c[j - 1] = a.c[j] * K(static_cast<int>(j));
    return r;
}

// Antiderivative with zero constant term.
template <class K>
Series<K> integral(const Series<K>& a) {
    Series<K> r(a.size() + 1);
    for (std::size_t j = 0; j < a.size(); ++j) r.c[j + 1] = a.c[j] / K(static_cast<int>(j) + 1);
    return r;
}

// log(a) with a(0) = 1, via integral of a'/a.
template <class K>
Series<K> log1(const Series<K>& a, std::size_t n) {
    if (a.size() == 0 || a.c[0] != K(1))
        throw validation_error("series log: constant term must be 1");
    return truncate(integral(divide(derivative(a), a, n ? n - 1 : 0)), n);
}

// exp(a) with a(0) = 0.
template <class K>
Series<K> exp0(const Series<K>& a, std::size_t n) {
    if (a.size() && a.c[0] != K(0))
        throw validation_error("series exp: constant term must vanish");
    // e' = a' e, solved coefficient by coefficient
    Series<K> r(n);
    if (!n) return r;
    r.c[0] = K(1);
    for (std::size_t j = 1; j < n; ++j) {
        K acc = K(0);
        for (std::size_t i = 1; i <= j; ++i) acc += K(static_cast<int>(i)) * a.at(i) * r.c[j - i];
        r.c[j] = acc / K(static_cast<int>(j));
    }
    return r;
}

// log(1+z) to order n.
template <class K>
Series<K> log_one_plus_z(std::size_t n) {
    Series<K> r(n);
    for (std::size_t j = 1; j < n; ++j) {
        r.c[j] = K(1) / K(static_cast<int>(j));
        if (j % 2 == 0) r.c[j] = -r.c[j];
    }
    return r;
}

template <class K>
K eval(const Series<K>& a, const K& z) {
    K acc = K(0);
    for (std::size_t j = a.size(); j-- > 0;) acc = acc * z + a.c[j];
    return acc;
}

template <class K2, class K>
Series<K2> convert(const Series<K>& a, K2 (*conv)(const K&)) {
    Series<K2> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r.c[j] = conv(a.c[j]);
    return r;
}

inline Series<double> to_double_series(const Series<Rat>& a) {
    Series<double> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r.c[j] = to_double(a.c[j]);
    return r;
}

using RSeries = Series<Rat>;
using DSeries = Series<double>;

}  // namespace sgf
