#pragma once

#include <cmath>
#include <string>

#include "darboux/errors.hpp"

// Two-dimensional Darboux spaces of type I and II in conformal coordinates
// ds^2 = g(u)(du^2 + dv^2), with
//   D_I :  g = 2u                     (u > u_min > 0)
//   D_II:  g = (b u^2 - a)/u^2        (u > 0, a < 0, b >= 0)
// D_II contains the Euclidean plane (a=0, b=1) and the hyperbolic plane
// (a=-1, b=0) as limiting cases.

namespace darboux {

enum class Space { DI, DII };

struct SpaceSpec {
    Space space = Space::DI;
    double a = -1.0;   // DII metric parameter (ignored for DI)
    double b = 1.0;    // DII metric parameter (ignored for DI)
    double u_min = 0.5; // DI boundary wall ("motion in u > u_min")

    void validate() const {
        if (space == Space::DI) {
            if (!(u_min > 0.0))
                throw DomainViolation("DI requires u_min > 0");
        } else {
            // a <= 0 keeps the conformal factor positive for all u > 0;
            // a = 0, b = 1 is the Euclidean limit, a < 0, b = 0 the
            // hyperbolic one.
            if (a > 0.0)
                throw DomainViolation("DII requires metric parameter a <= 0");
            if (b < 0.0)
                throw DomainViolation("DII requires metric parameter b >= 0");
            if (a == 0.0 && b <= 0.0)
                throw DomainViolation("DII metric degenerates at a = 0, b <= 0");
        }
    }

    static SpaceSpec di(double u_min = 0.5) { return {Space::DI, -1.0, 1.0, u_min}; }
    static SpaceSpec dii(double a, double b) { return {Space::DII, a, b, 0.5}; }
    static SpaceSpec dii_flat() { return {Space::DII, 0.0, 1.0, 0.5}; }
    static SpaceSpec dii_hyperbolic() { return {Space::DII, -1.0, 0.0, 0.5}; }
};

enum class ChartId {
    UV,                 // native conformal coordinates, both spaces
    RotatedRQ,          // DI: u = r cos(t) + q sin(t), v = -r sin(t) + q cos(t)
    DisplacedParabolic, // DI: u = (xi^2 - eta^2)/2 + c, v = xi eta
    Polar,              // DII: u = rho cos(t), v = rho sin(t)
    Parabolic,          // DII: u = xi eta, v = (xi^2 - eta^2)/2
    Elliptic            // DII: u = d cosh(w) cos(p), v = d sinh(w) sin(p)
};

inline const char* chart_name(ChartId c) {
    switch (c) {
        case ChartId::UV: return "uv";
        case ChartId::RotatedRQ: return "rq";
        case ChartId::DisplacedParabolic: return "parabolic";
        case ChartId::Polar: return "polar";
        case ChartId::Parabolic: return "parabolic";
        case ChartId::Elliptic: return "elliptic";
    }
    return "?";
}

struct ChartPoint {
    ChartId chart = ChartId::UV;
    double param = 0.0; // rotation angle / displacement c / ellipse scale d
    double c1 = 0.0;    // first chart coordinate, in the order the chart lists
    double c2 = 0.0;    // second chart coordinate

    static ChartPoint uv(double u, double v) { return {ChartId::UV, 0.0, u, v}; }
    static ChartPoint rotated(double theta, double r, double q) {
        return {ChartId::RotatedRQ, theta, r, q};
    }
    static ChartPoint displaced_parabolic(double c, double xi, double eta) {
        return {ChartId::DisplacedParabolic, c, xi, eta};
    }
    static ChartPoint polar(double rho, double theta) {
        return {ChartId::Polar, 0.0, rho, theta};
    }
    static ChartPoint parabolic(double xi, double eta) {
        return {ChartId::Parabolic, 0.0, xi, eta};
    }
    static ChartPoint elliptic(double d, double w, double phi) {
        return {ChartId::Elliptic, d, w, phi};
    }
};

inline bool chart_belongs_to(Space s, ChartId c) {
    switch (c) {
        case ChartId::UV: return true;
        case ChartId::RotatedRQ:
        case ChartId::DisplacedParabolic: return s == Space::DI;
        case ChartId::Polar:
        case ChartId::Parabolic:
        case ChartId::Elliptic: return s == Space::DII;
    }
    return false;
}

struct UV {
    double u;
    double v;
};

inline UV to_uv(const SpaceSpec& spec, const ChartPoint& p) {
    if (!chart_belongs_to(spec.space, p.chart))
        throw ChartSpaceMismatch(std::string("chart '") + chart_name(p.chart) +
                                 "' not defined on this space");
    switch (p.chart) {
        case ChartId::UV:
            return {p.c1, p.c2};
        case ChartId::RotatedRQ: {
            const double t = p.param;
            if (t < 0.0 || t > M_PI)
                throw DomainViolation("rotation angle must lie in [0, pi]");
            const double r = p.c1, q = p.c2;
            return {r * std::cos(t) + q * std::sin(t),
                    -r * std::sin(t) + q * std::cos(t)};
        }
        case ChartId::DisplacedParabolic: {
            const double c = p.param;
            if (!(c > 0.0))
                throw DomainViolation("displacement c must be > 0");
            const double xi = p.c1, eta = p.c2;
            if (!(eta > 0.0))
                throw DomainViolation("parabolic chart requires eta > 0");
            return {0.5 * (xi * xi - eta * eta) + c, xi * eta};
        }
        case ChartId::Polar: {
            const double rho = p.c1, t = p.c2;
            if (!(rho > 0.0))
                throw DomainViolation("polar chart requires rho > 0");
            if (!(t > -M_PI / 2 && t < M_PI / 2))
                throw DomainViolation("polar angle must lie in (-pi/2, pi/2)");
            return {rho * std::cos(t), rho * std::sin(t)};
        }
        case ChartId::Parabolic: {
            const double xi = p.c1, eta = p.c2;
            if (!(xi > 0.0) || !(eta > 0.0))
                throw DomainViolation("parabolic chart requires xi, eta > 0");
            return {xi * eta, 0.5 * (xi * xi - eta * eta)};
        }
        case ChartId::Elliptic: {
            const double d = p.param;
            if (!(d > 0.0))
                throw DomainViolation("ellipse scale d must be > 0");
            const double w = p.c1, phi = p.c2;
            return {d * std::cosh(w) * std::cos(phi),
                    d * std::sinh(w) * std::sin(phi)};
        }
    }
    throw ChartSpaceMismatch("unreachable chart id");
}

inline double conformal_factor(const SpaceSpec& spec, double u, double /*v*/ = 0.0) {
    if (!(u > 0.0))
        throw DomainViolation("conformal factor requires u > 0");
    if (spec.space == Space::DI) return 2.0 * u;
    return (spec.b * u * u - spec.a) / (u * u);
}

// Gaussian curvature of ds^2 = g(du^2+dv^2) is G = -(1/2g) Lap(ln g).
// For g = 2u this gives 1/(4u^3); for g = (b u^2 - a)/u^2 it gives
// a(3b u^2 - a)/(b u^2 - a)^3.  Limits: a=0 -> 0; b=0 -> 1/a.
inline double gaussian_curvature(const SpaceSpec& spec, double u, double /*v*/ = 0.0) {
    if (!(u > 0.0))
        throw DomainViolation("curvature requires u > 0");
    if (spec.space == Space::DI) return 1.0 / (4.0 * u * u * u);
    const double den = spec.b * u * u - spec.a;
    if (std::abs(den) < 1e-300)
        throw SingularDenominator("conformal factor vanishes: b*u^2 - a = 0");
    return spec.a * (3.0 * spec.b * u * u - spec.a) / (den * den * den);
}

// Finite-difference evaluation of G = -(1/2g) Lap(ln g); oracle for the
// closed form above. ln g depends on u only, so the v-part of the Laplacian
// contributes exactly zero but is evaluated anyway as written.
inline double curvature_numeric(const SpaceSpec& spec, double u, double v, double h) {
    if (!(h > 0.0))
        throw DomainViolation("step h must be > 0");
    if (!(u - 2.0 * h > 0.0))
        throw DomainViolation("u - 2h must stay inside the domain");
    auto lng = [&](double uu, double vv) {
        return std::log(conformal_factor(spec, uu, vv));
    };
    const double d2u =
        (lng(u + h, v) - 2.0 * lng(u, v) + lng(u - h, v)) / (h * h);
    const double d2v =
        (lng(u, v + h) - 2.0 * lng(u, v) + lng(u, v - h)) / (h * h);
    return -(d2u + d2v) / (2.0 * conformal_factor(spec, u, v));
}

} // namespace darboux
