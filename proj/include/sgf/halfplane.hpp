#pragma once

#include "sgf/rational.hpp"
#include "sgf/series.hpp"
#include "sgf/transforms.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace sgf {

using Cplx = std::complex<double>;

// Closed-form Cauchy-Stieltjes transform at a point (atoms and density pieces;
// principal-branch logs), valid off the support.
Cplx cauchy_at(const CompactMeasure& m, Cplx z);
Cplx cauchy_prime_at(const CompactMeasure& m, Cplx z);

// The (y, eta) coordinates of the tiling complex structure at z in H.
struct MapPoint {
    double y;
    double eta;
};
MapPoint tiling_map(const CompactMeasure& m, Cplx z);

// Root in H of F_{m;eta}(z) = y; nullopt outside the liquid region.  Newton with
// residual certificate; an uncertified root is reported as an error, not a value.
std::optional<Cplx> tiling_inverse(const CompactMeasure& m, double y, double eta,
                                   double residual_tol = 1e-10);

// Aztec diamond map: H-root of the explicit quadratic; closed form.
std::optional<Cplx> aztec_map(double q, double y, double eta);
MapPoint aztec_forward(double q, Cplx z);
bool aztec_inside_ellipse(double q, double y, double eta);

// Extreme-character map: H-root of 1/z + 1 + (1+z)F(1+z)/eta = y/eta for a
// polynomial/series F; Newton with certificate.
std::optional<Cplx> extreme_map(const DSeries& F, double y, double eta,
                                double residual_tol = 1e-10);

// GFF covariance kernel -(1/2pi) log |(z-w)/(z-conj(w))|.
double gff_kernel(Cplx z, Cplx w);

// Level curve {z in H : eta(z) = eta} of a model map, sampled as a polyline
// parametrized by y (monotone).
struct LevelCurve {
    double eta = 0;
    std::vector<Cplx> z;
    std::vector<double> y;
    bool empty() const { return z.size() < 2; }
};

enum class MapModel { Tiling, Aztec };

struct MapDescriptor {
    MapModel model;
    CompactMeasure m;  // tiling model
    double q = 1.0;    // aztec model
};

LevelCurve trace_level_curve(const MapDescriptor& map, double eta, double tolerance = 1e-6,
                             int grid = 400);

// Predicted limit covariance of the centered height moments M_{eta,k}:
// (1/pi) * double line integral of y^k1 y^k2 gff_kernel over the two level
// curves, with the log singularity of coincident curves integrated by a
// product rule on the diagonal cells.
double gff_moment_cov(const MapDescriptor& map, double eta1, unsigned k1, double eta2,
                      unsigned k2, double tolerance = 1e-5);

}  // namespace sgf
