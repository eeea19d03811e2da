#include "sgf/halfplane.hpp"

#include <algorithm>
#include <cmath>

namespace sgf {

Cplx cauchy_at(const CompactMeasure& m, Cplx z) {
    Cplx acc(0.0, 0.0);
    for (const auto& a : m.atoms) acc += to_double(a.w) / (z - to_double(a.x));
    for (const auto& p : m.pieces) {
        // h * (log(z-a) - log(z-b))
        acc += to_double(p.h) * (std::log(z - to_double(p.a)) - std::log(z - to_double(p.b)));
    }
    return acc;
}

Cplx cauchy_prime_at(const CompactMeasure& m, Cplx z) {
    Cplx acc(0.0, 0.0);
    for (const auto& a : m.atoms) {
        Cplx d = z - to_double(a.x);
        acc -= to_double(a.w) / (d * d);
    }
    for (const auto& p : m.pieces)
        acc += to_double(p.h) * (1.0 / (z - to_double(p.a)) - 1.0 / (z - to_double(p.b)));
    return acc;
}

MapPoint tiling_map(const CompactMeasure& m, Cplx z) {
    if (z.imag() <= 0) throw validation_error("tiling_map: z must lie in the upper half-plane");
    const Cplx zb = std::conj(z);
    const Cplx ez = std::exp(cauchy_at(m, z));
    const Cplx ezb = std::exp(cauchy_at(m, zb));
    const Cplx denom = ez - ezb;
    if (std::abs(denom) < 1e-14)
        throw validation_error("tiling_map: evaluation too close to the real axis");
    const Cplx y = z + (z - zb) * (ezb - 1.0) * ez / denom;
    const Cplx eta = 1.0 + (z - zb) * (ezb - 1.0) * (ez - 1.0) / denom;
    return {y.real(), eta.real()};
}

namespace {

// Damped Newton with a residual certificate; nullopt when no H-root is found.
template <class Fn, class Dn>
std::optional<Cplx> newton_upper(Fn f, Dn df, double tol, const std::vector<Cplx>& starts) {
    for (Cplx z0 : starts) {
        Cplx z = z0;
        bool ok = false;
        double res = std::abs(f(z));
        for (int it = 0; it < 200; ++it) {
            Cplx fz = f(z);
            res = std::abs(fz);
            if (res < tol) {
                ok = true;
                break;
            }
            Cplx d = df(z);
            if (std::abs(d) < 1e-300) break;
            Cplx step = fz / d;
            // damping: keep iterates in the closed upper half-plane
            double damp = 1.0;
            Cplx znew = z - step;
            for (int h = 0; h < 50 && (std::abs(f(znew)) > res || std::isnan(std::abs(f(znew)))); ++h) {
                damp /= 2;
                znew = z - damp * step;
            }
            if (znew.imag() < 1e-14) znew = Cplx(znew.real(), 1e-14);
            if (std::abs(znew - z) < 1e-16 && res > tol) break;
            z = znew;
        }
        if (ok && z.imag() > 1e-9) return z;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Cplx> tiling_inverse(const CompactMeasure& m, double y, double eta,
                                   double residual_tol) {
    if (!(eta > 0.0 && eta <= 1.0)) throw validation_error("tiling_inverse: need 0 < eta <= 1");
    auto F = [&](Cplx z) {
        Cplx e = std::exp(-cauchy_at(m, z));
        return z + (1.0 - eta) / (e - 1.0) - y;
    };
    auto dF = [&](Cplx z) {
        Cplx c = cauchy_at(m, z);
        Cplx e = std::exp(-c);
        Cplx d = e - 1.0;
        return Cplx(1.0, 0.0) + (1.0 - eta) * e * cauchy_prime_at(m, z) / (d * d);
    };
    std::vector<Cplx> starts = {Cplx(y, 0.5),      Cplx(y, 0.1),  Cplx(y, 1.0),
                                Cplx(y - 0.3, 0.4), Cplx(y + 0.3, 0.4), Cplx(0.5, 0.8),
                                Cplx(y, 2.0)};
    return newton_upper(F, dF, residual_tol, starts);
}

bool aztec_inside_ellipse(double q, double y, double eta) {
    const double v = ((y - eta) * (y - eta) / q + (y + eta - 1) * (y + eta - 1)) * (1 + q);
    return v < 1.0;
}

std::optional<Cplx> aztec_map(double q, double y, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw validation_error("aztec_map: need 0 < eta <= 1");
    if (!aztec_inside_ellipse(q, y, eta)) return std::nullopt;
    const double A = q * (1.0 - y);
    const double B = eta * q + eta + q - y * (1.0 + q);
    const double C = eta * (1.0 + q);
    if (std::abs(A) < 1e-300) return std::nullopt;  // degenerate: real root only
    const Cplx disc = Cplx(B * B - 4 * A * C, 0.0);
    const Cplx sq = std::sqrt(disc);
    for (double sign : {1.0, -1.0}) {
        Cplx z = (-B + sign * sq) / (2 * A);
        if (z.imag() > 1e-12) return z;
    }
    return std::nullopt;
}

MapPoint aztec_forward(double q, Cplx z) {
    if (z.imag() <= 0) throw validation_error("aztec_forward: z must lie in H");
    // y z(qz + 1 + q) - eta (1+q)(z+1) = q z (z+1), split into real and imaginary parts
    const Cplx alpha = z * (q * z + 1.0 + q);
    const Cplx beta = -(1.0 + q) * (z + 1.0);
    const Cplx gamma = q * z * (z + 1.0);
    const double a11 = alpha.real(), a12 = beta.real();
    const double a21 = alpha.imag(), a22 = beta.imag();
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-14) throw validation_error("aztec_forward: degenerate point");
    const double y = (gamma.real() * a22 - a12 * gamma.imag()) / det;
    const double eta = (a11 * gamma.imag() - gamma.real() * a21) / det;
    return {y, eta};
}

std::optional<Cplx> extreme_map(const DSeries& F, double y, double eta, double residual_tol) {
    if (!(eta > 0.0)) throw validation_error("extreme_map: need eta > 0");
    auto G = [&](Cplx z) {
        Cplx fv(0.0, 0.0);
        Cplx zp(1.0, 0.0);
        for (double c : F.c) {
            fv += c * zp;
            zp *= z;
        }
        return 1.0 / z + 1.0 + (1.0 + z) * fv / eta - y / eta;
    };
    auto dG = [&](Cplx z) {
        Cplx fv(0.0, 0.0), dv(0.0, 0.0);
        Cplx zp(1.0, 0.0);
        for (std::size_t j = 0; j < F.c.size(); ++j) {
            fv += F.c[j] * zp;
            if (j + 1 < F.c.size()) dv += F.c[j + 1] * double(j + 1) * zp;
            zp *= z;
        }
        return -1.0 / (z * z) + (fv + (1.0 + z) * dv) / eta;
    };
    std::vector<Cplx> starts = {Cplx(0.0, 1.0), Cplx(-0.5, 0.5), Cplx(0.5, 0.5),
                                Cplx(-1.0, 1.0), Cplx(0.0, 0.2)};
    return newton_upper(G, dG, residual_tol, starts);
}

double gff_kernel(Cplx z, Cplx w) {
    if (std::abs(z - w) < 1e-300) throw validation_error("gff_kernel: coincident points");
    return -std::log(std::abs((z - w) / (z - std::conj(w)))) / (2 * M_PI);
}

namespace {

std::optional<Cplx> model_inverse(const MapDescriptor& map, double y, double eta) {
    if (map.model == MapModel::Aztec) return aztec_map(map.q, y, eta);
    return tiling_inverse(map.m, y, eta);
}

double model_eta(const MapDescriptor& map, Cplx z) {
    if (map.model == MapModel::Aztec) return aztec_forward(map.q, z).eta;
    return tiling_map(map.m, z).eta;
}

std::pair<double, double> y_scan_range(const MapDescriptor& map) {
    if (map.model == MapModel::Aztec) return {-0.5, 1.5};
    double lo = 0, hi = 0;
    for (const auto& a : map.m.atoms) {
        lo = std::min(lo, to_double(a.x));
        hi = std::max(hi, to_double(a.x));
    }
    for (const auto& p : map.m.pieces) {
        lo = std::min(lo, to_double(p.a));
        hi = std::max(hi, to_double(p.b));
    }
    return {lo - 1.0, hi + 1.0};
}

}  // namespace

LevelCurve trace_level_curve(const MapDescriptor& map, double eta, double tolerance, int grid) {
    LevelCurve curve;
    curve.eta = eta;
    auto [ylo, yhi] = y_scan_range(map);

    // coarse scan for the liquid window at this eta
    std::vector<double> hits;
    for (int i = 0; i <= grid; ++i) {
        const double y = ylo + (yhi - ylo) * i / grid;
        if (model_inverse(map, y, eta)) hits.push_back(y);
    }
    if (hits.size() < 2) return curve;
    const double step = (yhi - ylo) / grid;
    for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
        if (hits[i + 1] - hits[i] > 1.5 * step)
            throw validation_error("trace_level_curve: level set is not a single window");
    }

    // refine the two ends by bisection down to the tolerance in y
    auto refine_edge = [&](double y_in, double y_out) {
        for (int it = 0; it < 60 && std::abs(y_out - y_in) > tolerance; ++it) {
            const double mid = 0.5 * (y_in + y_out);
            if (model_inverse(map, mid, eta))
                y_in = mid;
            else
                y_out = mid;
        }
        return y_in;
    };
    double left = refine_edge(hits.front(), hits.front() - step);
    double right = refine_edge(hits.back(), hits.back() + step);
    // inset slightly: the map degenerates on the frozen boundary itself, and the
    // kernel vanishes there, so the truncation is harmless
    const double inset = (right - left) * 1e-6;
    left += inset;
    right -= inset;

    int dropped = 0;
    for (int i = 0; i <= grid; ++i) {
        const double y = left + (right - left) * i / grid;
        auto z = model_inverse(map, y, eta);
        if (!z) {
            ++dropped;
            continue;
        }
        // residual certificate on the forward map; the edge is ill-conditioned,
        // so isolated near-edge failures are dropped rather than fatal
        if (std::abs(model_eta(map, *z) - eta) > 1e-5) {
            ++dropped;
            continue;
        }
        curve.y.push_back(y);
        curve.z.push_back(*z);
    }
    if (dropped > grid / 20)
        throw validation_error("trace_level_curve: too many uncertified vertices");
    return curve;
}

double gff_moment_cov(const MapDescriptor& map, double eta1, unsigned k1, double eta2,
                      unsigned k2, double tolerance) {
    const int grid = 4000;
    LevelCurve c1 = trace_level_curve(map, eta1, tolerance * 0.1, grid);
    LevelCurve c2 = (eta1 == eta2) ? c1 : trace_level_curve(map, eta2, tolerance * 0.1, grid);
    if (c1.empty() || c2.empty()) return 0.0;
    const bool same = (eta1 == eta2);

    auto phi = [](double x) {  // double antiderivative of log|x|
        if (x == 0.0) return 0.0;
        return 0.5 * x * x * std::log(std::abs(x)) - 0.75 * x * x;
    };

    const std::size_t n1 = c1.z.size() - 1, n2 = c2.z.size() - 1;
    double total = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        const double w1 = c1.y[i + 1] - c1.y[i];
        const double ym1 = 0.5 * (c1.y[i + 1] + c1.y[i]);
        const Cplx zm1 = 0.5 * (c1.z[i + 1] + c1.z[i]);
        const Cplx dz1 = (c1.z[i + 1] - c1.z[i]) / w1;
        const double f1 = std::pow(ym1, static_cast<double>(k1));
        for (std::size_t j = 0; j < n2; ++j) {
            const double w2 = c2.y[j + 1] - c2.y[j];
            const double ym2 = 0.5 * (c2.y[j + 1] + c2.y[j]);
            const Cplx zm2 = 0.5 * (c2.z[j + 1] + c2.z[j]);
            const double f2 = std::pow(ym2, static_cast<double>(k2));

            const double smooth_conj = std::log(std::abs(zm1 - std::conj(zm2)));
            double log_near;
            if (same && std::abs(ym1 - ym2) < 3.0 * std::max(w1, w2)) {
                // integrate log|t-u| exactly over the y-cells; the smooth ratio
                // log|(z(t)-z(u))/(t-u)| at the midpoint (derivative on the diagonal)
                const double corners = phi(c1.y[i + 1] - c2.y[j]) - phi(c1.y[i + 1] - c2.y[j + 1]) -
                                       phi(c1.y[i] - c2.y[j]) + phi(c1.y[i] - c2.y[j + 1]);
                const double avg_log_tu = corners / (w1 * w2);
                double ratio;
                if (i == j) {
                    ratio = std::log(std::abs(dz1));
                } else {
                    ratio = std::log(std::abs((zm1 - zm2) / (ym1 - ym2)));
                }
                log_near = avg_log_tu + ratio;
            } else {
                log_near = std::log(std::abs(zm1 - zm2));
            }
            const double kernel = -(log_near - smooth_conj) / (2 * M_PI);
            total += f1 * f2 * kernel * w1 * w2;
        }
    }
    return total / M_PI;
}

}  // namespace sgf
