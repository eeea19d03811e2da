#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgf/schur.hpp"

#include <random>

using namespace sgf;

namespace {

// Brute-force semistandard tableaux count with entries <= n: independent oracle
// for Schur values at all-ones.
long long count_ssyt(const std::vector<int>& shape, int maxEntry) {
    // fill cells row by row; value in (r,c) > value in (r-1,c), >= value in (r,c-1)
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
    std::function<long long(std::size_t, int)> rec = [&](std::size_t r, int c) -> long long {
        if (r == shape.size()) return 1;
        if (c == shape[r]) return rec(r + 1, 0);
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        long long total = 0;
        for (int v = lo; v <= maxEntry; ++v) {
            t[r][c] = v;
            total += rec(r, c + 1);
        }
        return total;
    };
    return rec(0, 0);
}

RationalPoint ones(int n) { return RationalPoint(n, Rat(1)); }

}  // namespace

TEST_CASE("schur_evaluate basics") {
    CHECK(schur_evaluate(Signature{0, 0, 0}, {Rat(7), Rat(-3), Rat(1, 2)}) == Rat(1));
    CHECK(schur_evaluate(Signature{1, 0}, {Rat(2), Rat(3)}) == Rat(5));
    CHECK(schur_evaluate(Signature{2, 1}, ones(2)) == Rat(2));
    // repeated coordinates are fine
    CHECK(schur_evaluate(Signature{2, 1, 0}, ones(3)) == Rat(8));
    // monomial route: s_{(2,1)}(x,y) = x^2 y + x y^2
    CHECK(schur_evaluate(Signature{2, 1}, {Rat(2), Rat(3)}) == Rat(4 * 3 + 2 * 9));
}

TEST_CASE("schur_evaluate with negative parts") {
    // s_{lambda + c}(x) = (prod x)^c s_lambda(x)
    RationalPoint x{Rat(2), Rat(1, 3)};
    Rat base = schur_evaluate(Signature{3, 1}, x);
    Rat shifted = schur_evaluate(Signature{1, -1}, x);
    CHECK(shifted == base / rat_pow(Rat(2) * Rat(1, 3), 2));
    CHECK_THROWS_AS(schur_evaluate(Signature{1, -1}, {Rat(1), Rat(0)}), validation_error);
    CHECK_THROWS_AS(schur_evaluate(Signature{1, 0}, {Rat(1)}), validation_error);
}

TEST_CASE("schur_dimension examples and tableaux oracle") {
    CHECK(schur_dimension(Signature::zero(5)) == Rat(1));
    CHECK(schur_dimension(Signature{2, 1, 0}) == Rat(8));
    CHECK(schur_dimension(Signature{1, 0}) == Rat(2));
    CHECK(count_ssyt({2, 1, 0}, 3) == 8);
    CHECK(count_ssyt({2, 1}, 2) == 2);

    // dimension equals tableaux count for all |lambda| <= 4, N <= 4
    for (int n = 1; n <= 4; ++n) {
        std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& parts,
                                                                   int i, int left) {
            if (i == n) {
                Signature lam{std::vector<int>(parts)};
                long long oracle = count_ssyt(parts, n);
                CHECK(schur_dimension(lam) == Rat(oracle));
                CHECK(schur_evaluate(lam, ones(n)) == Rat(oracle));
                return;
            }
            int cap = (i == 0) ? left : std::min(left, parts[i - 1]);
            for (int v = 0; v <= cap; ++v) {
                parts[i] = v;
                gen(parts, i + 1, left - v);
            }
        };
        std::vector<int> parts(n, 0);
        gen(parts, 0, 4);
    }
}

TEST_CASE("schur symmetry under coordinate permutations") {
    std::mt19937_64 rng(20240817);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<int> parts(n);
        for (int i = 0; i < n; ++i) parts[i] = static_cast<int>(rng() % 4);
        std::sort(parts.rbegin(), parts.rend());
        Signature lam{parts};
        RationalPoint x(n);
        for (int i = 0; i < n; ++i)
            x[i] = Rat(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
        Rat v = schur_evaluate(lam, x);
        RationalPoint y = x;
        std::shuffle(y.begin(), y.end(), rng);
        CHECK(schur_evaluate(lam, y) == v);
    }
}

TEST_CASE("skew_dimension") {
    CHECK(skew_dimension(Signature{3, 1}, Signature{3, 1}, 5) == Rat(1));
    CHECK(skew_dimension(Signature{1, 0}, Signature{1}, 1) == Rat(1));
    CHECK(skew_dimension(Signature{2, 0}, Signature{1}, 1) == Rat(1));
    CHECK(skew_dimension(Signature{2, 0}, Signature{3}, 1) == Rat(0));  // not contained
    CHECK_THROWS_AS(skew_dimension(Signature{1, 0}, Signature{1}, -1), validation_error);

    // k = 1 equals the interlacing indicator
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int m1 = 0; m1 <= 4; ++m1) {
                Signature lam{a, b};
                Signature mu{m1};
                Rat expected = (a >= m1 && m1 >= b) ? Rat(1) : Rat(0);
                CHECK(skew_dimension(lam, mu, 1) == expected);
            }
}

TEST_CASE("branching consistency: sum over interlacing mu of dims") {
    // sum_mu s_{lambda/mu}(1^1) dim(mu) = dim(lambda) for length <= 4, |lambda| <= 4
    for (int n = 2; n <= 4; ++n) {
        std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& parts,
                                                                   int i, int left) {
            if (i == n) {
                Signature lam{std::vector<int>(parts)};
                Rat total = 0;
                std::vector<int> lo(n - 1), hi(n - 1);
                for (int j = 0; j + 1 < n; ++j) {
                    lo[j] = lam[j + 1];
                    hi[j] = lam[j];
                }
                enumerate_bounded(lo, hi, [&](const Signature& mu) {
                    total += skew_dimension(lam, mu, 1) * schur_dimension(mu);
                });
                CHECK(total == schur_dimension(lam));
                return;
            }
            int cap = (i == 0) ? left : std::min(left, parts[i - 1]);
            for (int v = 0; v <= cap; ++v) {
                parts[i] = v;
                gen(parts, i + 1, left - v);
            }
        };
        std::vector<int> parts(n, 0);
        gen(parts, 0, 4);
    }
}

TEST_CASE("schur_to_polynomial and vandermonde") {
    SparsePolynomial one = schur_to_polynomial(Signature{0, 0});
    CHECK(one.evaluate({Rat(5), Rat(7)}) == Rat(1));

    SparsePolynomial p10 = schur_to_polynomial(Signature{1, 0});
    CHECK(p10.evaluate({Rat(2), Rat(3)}) == Rat(5));
    CHECK(p10.term_count() == 2);  // x1 + x2

    SparsePolynomial p11 = schur_to_polynomial(Signature{1, 1});
    CHECK(p11.evaluate({Rat(2), Rat(3)}) == Rat(6));
    CHECK(p11.term_count() == 1);  // x1 x2

    CHECK(vandermonde(1).evaluate({Rat(9)}) == Rat(1));
    CHECK(vandermonde(2).evaluate({Rat(5), Rat(2)}) == Rat(3));
    CHECK(vandermonde(3).evaluate({Rat(3), Rat(2), Rat(1)}) == Rat(2));

    // evaluation agreement with schur_evaluate on a Laurent case
    SparsePolynomial neg = schur_to_polynomial(Signature{1, -1});
    RationalPoint x{Rat(2), Rat(1, 3)};
    CHECK(neg.evaluate(x) == schur_evaluate(Signature{1, -1}, x));

    CHECK_THROWS_AS(schur_to_polynomial(Signature{9, 9, 9}), budget_error);
    CHECK_THROWS_AS(schur_to_polynomial(Signature{1, 0, 0, 0, 0, 0}), budget_error);
}

TEST_CASE("polynomial identity: dimension at all-ones for |lambda| <= 4, N <= 4") {
    for (int n = 1; n <= 4; ++n) {
        std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& parts,
                                                                   int i, int left) {
            if (i == n) {
                Signature lam{std::vector<int>(parts)};
                RationalPoint at1(n, Rat(1));
                CHECK(schur_to_polynomial(lam).evaluate(at1) == schur_dimension(lam));
                return;
            }
            int cap = (i == 0) ? left : std::min(left, parts[i - 1]);
            for (int v = 0; v <= cap; ++v) {
                parts[i] = v;
                gen(parts, i + 1, left - v);
            }
        };
        std::vector<int> parts(n, 0);
        gen(parts, 0, 4);
    }
}

TEST_CASE("lr_expand examples") {
    auto triv = lr_expand(Signature{1, 0}, Signature{0, 0});
    CHECK(triv.size() == 1);
    CHECK(triv.at(Signature{1, 0}) == 1);

    auto sq = lr_expand(Signature{1, 0}, Signature{1, 0});
    CHECK(sq.size() == 2);
    CHECK(sq.at(Signature{2, 0}) == 1);
    CHECK(sq.at(Signature{1, 1}) == 1);

    auto m = lr_expand(Signature{1, 1}, Signature{1, 0});
    CHECK(m.size() == 1);
    CHECK(m.at(Signature{2, 1}) == 1);
}

TEST_CASE("lr_expand reconstruction, positivity, dimension identity") {
    // all lambda, mu with |.| <= 3, N <= 3
    for (int n = 2; n <= 3; ++n) {
        std::vector<Signature> sigs;
        std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& parts,
                                                                   int i, int left) {
            if (i == n) {
                sigs.push_back(Signature{std::vector<int>(parts)});
                return;
            }
            int cap = (i == 0) ? left : std::min(left, parts[i - 1]);
            for (int v = 0; v <= cap; ++v) {
                parts[i] = v;
                gen(parts, i + 1, left - v);
            }
        };
        std::vector<int> parts(n, 0);
        gen(parts, 0, 3);

        for (const auto& lam : sigs) {
            for (const auto& mu : sigs) {
                auto exp = lr_expand(lam, mu);
                // reconstruction as exact polynomial identity
                SparsePolynomial lhs = schur_to_polynomial(lam) * schur_to_polynomial(mu);
                SparsePolynomial rhs(n);
                Rat dsum = 0;
                for (const auto& [eta, c] : exp) {
                    CHECK(c > 0);
                    rhs = rhs + schur_to_polynomial(eta) * Rat(c);
                    dsum += Rat(c) * schur_dimension(eta);
                }
                CHECK(lhs == rhs);
                CHECK(dsum == schur_dimension(lam) * schur_dimension(mu));
            }
        }
    }
}

TEST_CASE("sparse polynomial division by differences") {
    SparsePolynomial v = vandermonde(3);
    SparsePolynomial p = v * schur_to_polynomial(Signature{2, 1, 0});
    SparsePolynomial q = p;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) q = q.divide_by_difference(i, j);
    CHECK(q == schur_to_polynomial(Signature{2, 1, 0}));
}
