#pragma once

#include "sgf/rational.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace sgf {

// Exact multivariate Laurent polynomial over Q.  Keys are exponent vectors of fixed
// length nvars (entries may be negative); zero coefficients are never stored.
// Used for desk-scale symbolic checks; arithmetic is exact throughout.
class SparsePolynomial {
  public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, Rat>;

    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, const Rat& c) {
        SparsePolynomial p(nvars);
        if (c != 0) p.terms_[Expo(nvars, 0)] = c;
        return p;
    }

    static SparsePolynomial monomial(int nvars, const Expo& e, const Rat& c) {
        SparsePolynomial p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    // x_i (0-based variable index)
    static SparsePolynomial variable(int nvars, int i) {
        Expo e(nvars, 0);
        e[i] = 1;
        return monomial(nvars, e, 1);
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial operator+(const SparsePolynomial& o) const {
        SparsePolynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    SparsePolynomial operator-(const SparsePolynomial& o) const {
        SparsePolynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    SparsePolynomial operator*(const SparsePolynomial& o) const {
        SparsePolynomial r(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }

    SparsePolynomial operator*(const Rat& c) const {
        SparsePolynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

    // Applies sum_i (x_i d/dx_i)^m; monomials are eigenvectors with eigenvalue
    // sum_i e_i^m, so this is a per-term rescale.
    SparsePolynomial apply_euler_power(unsigned m) const {
        SparsePolynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            Int eig = 0;
            for (int ei : e) eig += int_pow(Int(ei), m);
            if (eig != 0) r.terms_[e] = c * Rat(eig);
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& x) const {
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] != 0) t *= rat_pow(x[i], e[i]);
            }
            total += t;
        }
        return total;
    }

    // Exact division by (x_i - x_j), Horner in the x_i-slot (handles Laurent
    // exponents); throws if the remainder is nonzero.
    SparsePolynomial divide_by_difference(int i, int j) const {
        if (terms_.empty()) return SparsePolynomial(nvars_);
        int mn = 0, mx = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                mn = mx = e[i];
                first = false;
            } else {
                mn = std::min(mn, e[i]);
                mx = std::max(mx, e[i]);
            }
        }
        // bucket by x_i-exponent relative to mn; coefficients keep x_i-slot = 0
        const int D = mx - mn;
        std::vector<SparsePolynomial> c(D + 1, SparsePolynomial(nvars_));
        for (const auto& [e, coef] : terms_) {
            Expo r = e;
            const int d = e[i] - mn;
            r[i] = 0;
            c[d].add_term(r, coef);
        }
        // p = (x_i - x_j) q + r with x_i-root x_j: q_{d-1} = c_d + x_j q_d
        std::vector<SparsePolynomial> q(D, SparsePolynomial(nvars_));
        SparsePolynomial carry(nvars_);
        for (int d = D; d >= 1; --d) {
            carry = c[d] + carry;
            q[d - 1] = carry;
            // carry <- x_j * q_{d-1}
            SparsePolynomial shifted(nvars_);
            for (const auto& [e, coef] : carry.terms()) {
                Expo t = e;
                t[j] += 1;
                shifted.add_term(t, coef);
            }
            carry = shifted;
        }
        SparsePolynomial rem = c[0] + carry;
        if (!rem.is_zero())
            throw validation_error("divide_by_difference: polynomial not divisible");
        SparsePolynomial out(nvars_);
        for (int d = 0; d < D; ++d) {
            for (const auto& [e, coef] : q[d].terms()) {
                Expo t = e;
                t[i] = d + mn;
                out.add_term(t, coef);
            }
        }
        return out;
    }

  private:
    int nvars_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p) {
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        os << (first ? "" : " + ") << c << "*x^(";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")";
        first = false;
    }
    if (first) os << "0";
    return os;
}

}  // namespace sgf
