#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgf/contour.hpp"
#include "sgf/halfplane.hpp"

using namespace sgf;

namespace {

CompactMeasure hexagon_measure() {
    CompactMeasure m;
    m.pieces.push_back({Rat(0), Rat(1, 2), Rat(1)});
    m.pieces.push_back({Rat(1), Rat(3, 2), Rat(1)});
    return m;
}

}  // namespace

TEST_CASE("aztec_map") {
    // q=1, (y,eta)=(1/2,1/2): quadratic 0.5 z^2 + z + 1 = 0 with H-root -1+i
    auto z = aztec_map(1.0, 0.5, 0.5);
    REQUIRE(z.has_value());
    CHECK(std::abs(*z - Cplx(-1.0, 1.0)) < 1e-12);

    // outside the inscribed ellipse: none
    CHECK(!aztec_map(1.0, -0.4, 0.5).has_value());
    CHECK(!aztec_map(1.0, 1.4, 0.5).has_value());

    // returned roots satisfy the quadratic to 1e-12 and lie in H
    for (double y : {0.3, 0.5, 0.7})
        for (double eta : {0.3, 0.5, 0.8}) {
            auto r = aztec_map(2.0, y, eta);
            if (!r) continue;
            const double q = 2.0;
            Cplx v = (*r) * (*r) * (q - y * q) + (*r) * (eta * q + eta + q - y * (1 + q)) +
                     eta * (1 + q);
            CHECK(std::abs(v) < 1e-12);
            CHECK(r->imag() > 0);
        }
}

TEST_CASE("aztec discriminant vanishes exactly on the inscribed ellipse") {
    // rational boundary point for q=2: y=1/3, eta=1 satisfies
    // ((y-eta)^2/q + (y+eta-1)^2)(1+q) = 1
    Rat q(2), y(1, 3), eta(1);
    Rat ell = ((y - eta) * (y - eta) / q + (y + eta - 1) * (y + eta - 1)) * (Rat(1) + q);
    REQUIRE(ell == Rat(1));
    Rat A = q * (Rat(1) - y);
    Rat B = eta * q + eta + q - y * (Rat(1) + q);
    Rat C = eta * (Rat(1) + q);
    CHECK(B * B - Rat(4) * A * C == Rat(0));

    // and q=1: y=1, eta=1/2 is on the boundary
    Rat q1(1), y1(1), e1(1, 2);
    Rat ell1 = ((y1 - e1) * (y1 - e1) / q1 + (y1 + e1 - 1) * (y1 + e1 - 1)) * (Rat(1) + q1);
    REQUIRE(ell1 == Rat(1));
    Rat A1 = q1 * (Rat(1) - y1);
    Rat B1 = e1 * q1 + e1 + q1 - y1 * (Rat(1) + q1);
    Rat C1 = e1 * (Rat(1) + q1);
    CHECK(B1 * B1 - Rat(4) * A1 * C1 == Rat(0));
}

TEST_CASE("aztec forward/inverse round-trip") {
    for (double y : {0.35, 0.5, 0.62})
        for (double eta : {0.3, 0.5, 0.75}) {
            auto z = aztec_map(1.0, y, eta);
            if (!z) continue;
            auto back = aztec_forward(1.0, *z);
            CHECK(std::abs(back.y - y) < 1e-10);
            CHECK(std::abs(back.eta - eta) < 1e-10);
        }
}

TEST_CASE("tiling map and inverse for the hexagon") {
    CompactMeasure hex = hexagon_measure();
    // outputs are real and eta in [0,1] on a grid of upper half-plane points
    for (double re = -0.6; re <= 2.1; re += 0.27)
        for (double im = 0.15; im <= 1.6; im += 0.29) {
            auto mp = tiling_map(hex, Cplx(re, im));
            CHECK(std::isfinite(mp.y));
            CHECK(mp.eta > -1e-9);
            CHECK(mp.eta < 1.0 + 1e-9);
        }
    // round-trip inverse(map(z)) = z to 1e-9
    for (double re : {0.2, 0.7, 1.1})
        for (double im : {0.3, 0.8}) {
            Cplx z(re, im);
            auto mp = tiling_map(hex, z);
            auto back = tiling_inverse(hex, mp.y, mp.eta);
            REQUIRE(back.has_value());
            CHECK(std::abs(*back - z) < 1e-9);
        }
    // far outside the support: frozen
    CHECK(!tiling_inverse(hex, 5.0, 0.5).has_value());
    CHECK(!tiling_inverse(hex, -3.0, 0.5).has_value());
}

TEST_CASE("extreme character map, pure Gamma-plus") {
    // F == Gamma = 1, eta = 1: 1/z + 1 + (1+z) = y has H-root iff 0 < y < 4
    DSeries F(4);
    F.c[0] = 1.0;
    auto mid = extreme_map(F, 2.0, 1.0);
    REQUIRE(mid.has_value());
    CHECK(std::abs(*mid - Cplx(0.0, 1.0)) < 1e-9);
    CHECK(extreme_map(F, 1.0, 1.0).has_value());
    CHECK(!extreme_map(F, 4.5, 1.0).has_value());
    CHECK(!extreme_map(F, -0.5, 1.0).has_value());

    // F == 0: equation 1/z + 1 = y/eta has only real roots
    DSeries zero(4);
    CHECK(!extreme_map(zero, 0.7, 1.0).has_value());
}

TEST_CASE("gff_kernel") {
    CHECK(std::abs(gff_kernel(Cplx(0, 1), Cplx(0, 2)) - std::log(3.0) / (2 * M_PI)) < 1e-12);
    // symmetry
    Cplx z(0.3, 0.8), w(-0.4, 1.7);
    CHECK(gff_kernel(z, w) == doctest::Approx(gff_kernel(w, z)).epsilon(1e-12));
    // vanishes toward the real axis
    CHECK(std::abs(gff_kernel(z, Cplx(0.5, 1e-9))) < 1e-7);

    // Gram positive semidefiniteness over 10 sampled points (diagonal regularized
    // by a vanishing self-interaction cutoff)
    std::vector<Cplx> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(Cplx(-1.0 + 0.43 * i, 0.2 + 0.17 * i));
    // check x^T G x >= -1e-8 for a few random-ish sign vectors with zero diagonal
    // replaced by the limiting kernel at distance h
    std::vector<std::vector<double>> G(10, std::vector<double>(10));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            G[i][j] = (i == j) ? gff_kernel(pts[i], pts[i] + Cplx(1e-6, 0)) : gff_kernel(pts[i], pts[j]);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(10);
        unsigned long long s = 0x9e3779b97f4a7c15ull * (trial + 1);
        for (int i = 0; i < 10; ++i) {
            s ^= s >> 13;
            s *= 0xff51afd7ed558ccdull;
            x[i] = ((s >> 16) % 1000) / 500.0 - 1.0;
        }
        double quad = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) quad += x[i] * G[i][j] * x[j];
        CHECK(quad > -1e-8);
    }
}

TEST_CASE("trace_level_curve") {
    // Aztec q=1, eta=1/2: chord of the inscribed ellipse is y in [0,1]
    MapDescriptor az{MapModel::Aztec, CompactMeasure{}, 1.0};
    auto curve = trace_level_curve(az, 0.5, 1e-6, 400);
    REQUIRE(!curve.empty());
    CHECK(curve.y.front() < 0.01);
    CHECK(curve.y.back() > 0.99);
    // forward-map residual on every vertex
    for (std::size_t i = 0; i < curve.z.size(); ++i) {
        auto mp = aztec_forward(1.0, curve.z[i]);
        CHECK(std::abs(mp.eta - 0.5) < 1e-5);
        CHECK(std::abs(mp.y - curve.y[i]) < 1e-8);
    }

    // hexagon at eta = 1: deterministic level, no H-curve
    MapDescriptor hex{MapModel::Tiling, hexagon_measure(), 1.0};
    auto top = trace_level_curve(hex, 1.0, 1e-6, 400);
    CHECK(top.empty());
}

TEST_CASE("gff_moment_cov equals the contour route (hexagon)") {
    CompactMeasure hex = hexagon_measure();
    MapDescriptor map{MapModel::Tiling, hex, 1.0};
    RSeries hp = h_prime(hex, 24);
    BiSeries<Rat> G = profile_kernel(hp, 16);

    // diagonal entry and positivity
    double v11 = gff_moment_cov(map, 0.5, 1, 0.5, 1);
    CHECK(v11 > 0);
    double route = to_double(clt_cov_projections(hp, G, Rat(1, 2), Rat(1, 2), 2, 2)) / 4.0;
    CHECK(std::abs(v11 - route) / route < 1e-4);

    // symmetry under swapping the two slots
    double a = gff_moment_cov(map, 0.5, 1, 0.75, 2);
    double b = gff_moment_cov(map, 0.75, 2, 0.5, 1);
    CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("level curve tolerance controls the edge refinement") {
    MapDescriptor az{MapModel::Aztec, CompactMeasure{}, 1.0};
    auto coarse = trace_level_curve(az, 0.4, 1e-3, 300);
    auto fine = trace_level_curve(az, 0.4, 5e-4, 300);
    REQUIRE(!coarse.empty());
    REQUIRE(!fine.empty());
    // finer tolerance reaches at least as far into the edges
    CHECK(fine.y.front() <= coarse.y.front() + 1e-3);
    CHECK(fine.y.back() >= coarse.y.back() - 1e-3);
    // endpoints move by no more than the coarse tolerance scale
    CHECK(std::abs(fine.y.front() - coarse.y.front()) <= 2e-3);
    CHECK(std::abs(fine.y.back() - coarse.y.back()) <= 2e-3);
}
