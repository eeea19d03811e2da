#pragma once

#include "sgf/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <vector>

namespace sgf {

// Weakly decreasing integer vector; labels an irreducible U(N) representation and,
// through the shifted coordinates lambda_i + N - i, an N-particle configuration on Z.
class Signature {
  public:
    Signature() = default;

    explicit Signature(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            if (parts_[i] < parts_[i + 1])
                throw validation_error("Signature: parts must be weakly decreasing");
        }
    }

    Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}

    static Signature zero(int n) { return Signature(std::vector<int>(n, 0)); }

    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_[i]; }

    // lambda_i + N - i with rows indexed from 1; strictly decreasing.
    std::vector<int> shifted() const {
        std::vector<int> s(parts_.size());
        const int n = length();
        for (int i = 0; i < n; ++i) s[i] = parts_[i] + n - 1 - i;
        return s;
    }

    long long size() const {
        long long t = 0;
        for (int p : parts_) t += p;
        return t;
    }

    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    Signature shifted_by(int c) const {
        std::vector<int> p = parts_;
        for (int& v : p) v += c;
        return Signature(std::move(p));
    }

    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    bool operator!=(const Signature& o) const { return parts_ != o.parts_; }
    bool operator<(const Signature& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

// mu interlaces lambda: lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n.
inline bool interlaces(const Signature& mu, const Signature& lambda) {
    if (mu.length() + 1 != lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i) {
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
    }
    return true;
}

// mu_i <= lambda_i componentwise after padding mu with the floor value; containment
// in the sense of skew shapes for equal-length-or-shorter mu.
inline bool contains(const Signature& lambda, const Signature& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
    os << '(';
    for (int i = 0; i < s.length(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os << ')';
}

struct SignatureHash {
    std::size_t operator()(const Signature& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int p : s.parts()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(p));
            h *= 1099511628211ull;
        }
        h ^= static_cast<std::uint64_t>(s.length());
        h *= 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

// All signatures mu of length n with bounds lo_i <= mu_i <= hi_i, weakly decreasing.
// Caller supplies per-coordinate bounds; visits in lexicographic order.
inline void enumerate_bounded(const std::vector<int>& lo, const std::vector<int>& hi,
                              const std::function<void(const Signature&)>& visit) {
    const int n = static_cast<int>(lo.size());
    std::vector<int> cur(n);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == n) {
            visit(Signature(cur));
            return;
        }
        int top = std::min(hi[i], cap);
        for (int v = top; v >= lo[i]; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    if (n == 0) {
        visit(Signature());
        return;
    }
    rec(0, std::numeric_limits<int>::max());
}

}  // namespace sgf
