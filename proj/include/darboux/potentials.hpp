#pragma once

#include <cmath>
#include <string>

#include "darboux/errors.hpp"
#include "darboux/geometry.hpp"

// Superintegrable potentials on the Darboux spaces D_I and D_II.
//
// Every potential is defined natively in the conformal (u,v) chart as
//   V = bracket(u,v) / g(u),
// where g is the conformal metric factor, and additionally in the closed
// per-chart forms in which it is usually written.  evaluate() is
// chart-independent: the explicit chart forms agree with the pullback of the
// native form through the chart map.
//
// In-scope potentials:
//   D_I  V1: oscillator 4u^2+v^2, constant offset, centrifugal term in v
//   D_I  V2: isotropic oscillator u^2+v^2, constant offset, linear term in v
//   D_I  V3: pure metric potential  (special case of both V1 and V2)
//   D_II V1: anisotropic (Holt-type) oscillator with linear term in v
//   D_II V2: isotropic oscillator with two centrifugal barriers
//   D_II V3: Coulomb-like potential with two centrifugal barriers
//   D_II V4: pure metric potential
// (D_I, V4) is out of scope: its parabolic form is complex-valued.

namespace darboux {

enum class PotentialIndex { V1, V2, V3, V4 };

inline const char* potential_name(PotentialIndex i) {
    switch (i) {
        case PotentialIndex::V1: return "v1";
        case PotentialIndex::V2: return "v2";
        case PotentialIndex::V3: return "v3";
        case PotentialIndex::V4: return "v4";
    }
    return "?";
}

// Only the couplings relevant to a given (space, index) are read.
// Centrifugal strengths are stored as the index (lambda, k1, k2), not as the
// combination lambda^2 - 1/4, so the exactly-free case lambda = 1/2 is
// representable without cancellation.
struct Couplings {
    double omega = 1.0;   // oscillator frequency (V1, V2)
    double kappa = 0.0;   // DI V1 constant offset
    double kappa1 = 0.0;  // DI V2 constant offset
    double kappa2 = 0.0;  // DI V2 linear coupling
    double lambda = 0.5;  // DI V1 centrifugal index, >= 0
    double k1 = 0.5;      // DII: V1 linear coupling / V2,V3 centrifugal index
    double k2 = 0.5;      // DII centrifugal index
    double v0 = 1.0;      // metric-potential strength (DI V3, DII V4)
    double alpha = 1.0;   // DII V3 Coulomb strength
    double hbar = 1.0;
    double mass = 1.0;
};

struct PotentialSpec {
    Space space = Space::DII;
    PotentialIndex index = PotentialIndex::V2;
    Couplings c{};

    void validate() const {
        if (!(c.hbar > 0.0) || !(c.mass > 0.0))
            throw ConfigError("hbar and mass must be > 0");
        if (c.omega < 0.0)
            throw ConfigError("oscillator frequency must be >= 0");
        if (space == Space::DI) {
            if (index == PotentialIndex::V4)
                throw ConfigError(
                    "(DI, V4) is out of scope: the potential is complex-valued "
                    "in its defining chart");
            if (index == PotentialIndex::V1 && c.lambda < 0.0)
                throw ConfigError("DI V1 requires centrifugal index lambda >= 0");
        } else {
            if ((index == PotentialIndex::V2 || index == PotentialIndex::V3) &&
                (c.k1 < 0.0 || c.k2 < 0.0))
                throw ConfigError("DII V2/V3 require centrifugal indices k1, k2 >= 0");
        }
    }
};

// Charts in which a potential has an explicit closed form (the native UV
// chart is always included).  This mirrors the separability tables; charts
// listed there but not realizable in this library (the rotated-elliptic
// system for DII V3) are excluded.
inline bool evaluation_chart_supported(const PotentialSpec& spec, ChartId chart) {
    if (chart == ChartId::UV) return true;
    if (spec.space == Space::DI) {
        switch (spec.index) {
            case PotentialIndex::V1: return chart == ChartId::DisplacedParabolic;
            case PotentialIndex::V2: return chart == ChartId::RotatedRQ;
            case PotentialIndex::V3:
                return chart == ChartId::RotatedRQ ||
                       chart == ChartId::DisplacedParabolic;
            default: return false;
        }
    }
    switch (spec.index) {
        case PotentialIndex::V1: return chart == ChartId::Parabolic;
        case PotentialIndex::V2:
            return chart == ChartId::Polar || chart == ChartId::Elliptic;
        case PotentialIndex::V3:
            return chart == ChartId::Polar || chart == ChartId::Parabolic;
        case PotentialIndex::V4:
            return chart == ChartId::Polar || chart == ChartId::Parabolic ||
                   chart == ChartId::Elliptic;
    }
    return false;
}

namespace detail {

inline double dii_prefactor(const SpaceSpec& s, double u) {
    if (!(u > 0.0)) throw DomainViolation("DII requires u > 0");
    const double den = s.b * u * u - s.a;
    if (!(den > 0.0))
        throw SingularDenominator("metric factor b*u^2 - a must be positive");
    return u * u / den;
}

// Native (u,v)-chart values.  Domain: u > 0 for both spaces; potentials with
// a centrifugal barrier additionally exclude its singular locus unless the
// barrier coefficient vanishes identically.
inline double native_uv(const PotentialSpec& spec, const SpaceSpec& s,
                        double u, double v) {
    const Couplings& c = spec.c;
    const double h2_2m = c.hbar * c.hbar / (2.0 * c.mass);
    if (spec.space == Space::DI) {
        if (!(u > 0.0)) throw DomainViolation("DI requires u > 0");
        const double pre = 1.0 / (2.0 * u);
        switch (spec.index) {
            case PotentialIndex::V1: {
                const double cf = c.lambda * c.lambda - 0.25;
                double bracket = 0.5 * c.mass * c.omega * c.omega *
                                     (4.0 * u * u + v * v) +
                                 c.kappa;
                if (cf != 0.0) {
                    if (v == 0.0)
                        throw DomainViolation("DI V1 is singular on v = 0");
                    bracket += h2_2m * cf / (v * v);
                }
                return pre * bracket;
            }
            case PotentialIndex::V2:
                return pre * (0.5 * c.mass * c.omega * c.omega * (u * u + v * v) +
                              c.kappa1 + c.kappa2 * v);
            case PotentialIndex::V3:
                return pre * h2_2m * c.v0 * c.v0;
            default:
                throw ConfigError("(DI, V4) is out of scope");
        }
    }
    const double pre = dii_prefactor(s, u);
    switch (spec.index) {
        case PotentialIndex::V1: {
            const double cf = c.k2 * c.k2 - 0.25;
            return pre * (0.5 * c.mass * c.omega * c.omega *
                              (u * u + 4.0 * v * v) +
                          c.k1 * v + h2_2m * cf / (u * u));
        }
        case PotentialIndex::V2: {
            const double cf1 = c.k1 * c.k1 - 0.25;
            const double cf2 = c.k2 * c.k2 - 0.25;
            double bracket =
                0.5 * c.mass * c.omega * c.omega * (u * u + v * v) +
                h2_2m * cf1 / (u * u);
            if (cf2 != 0.0) {
                if (v == 0.0)
                    throw DomainViolation("DII V2 is singular on v = 0");
                bracket += h2_2m * cf2 / (v * v);
            }
            return pre * bracket;
        }
        case PotentialIndex::V3: {
            const double rho = std::hypot(u, v);
            const double cf1 = c.k1 * c.k1 - 0.25;
            const double cf2 = c.k2 * c.k2 - 0.25;
            double bracket = -0.5 * c.alpha / rho;
            // (rho + v) and (rho - v) are positive whenever u > 0.
            bracket += 0.5 * h2_2m *
                       (cf1 / (rho * (rho + v)) + cf2 / (rho * (rho - v)));
            return pre * bracket;
        }
        case PotentialIndex::V4:
            return pre * h2_2m * c.v0 * c.v0;
    }
    throw ConfigError("unreachable potential index");
}

} // namespace detail

// Chart-independent evaluation.  For the UV chart the native form is used;
// for every other supported chart the explicit closed form in the chart
// variables is evaluated (and agrees with the pullback of the native form).
inline double evaluate(const PotentialSpec& spec, const SpaceSpec& s,
                       const ChartPoint& p) {
    spec.validate();
    s.validate();
    if (!chart_belongs_to(s.space, p.chart) || spec.space != s.space)
        throw ChartSpaceMismatch("potential, space and chart must agree");
    if (!evaluation_chart_supported(spec, p.chart))
        throw UnsupportedChart(std::string("no closed form for potential ") +
                               potential_name(spec.index) + " in chart '" +
                               chart_name(p.chart) + "'");
    const Couplings& c = spec.c;
    const double h2_2m = c.hbar * c.hbar / (2.0 * c.mass);

    if (p.chart == ChartId::UV)
        return detail::native_uv(spec, s, p.c1, p.c2);

    if (spec.space == Space::DI) {
        switch (p.chart) {
            case ChartId::RotatedRQ: {
                const double t = p.param, r = p.c1, q = p.c2;
                if (t < 0.0 || t > M_PI)
                    throw DomainViolation("rotation angle must lie in [0, pi]");
                const double u = r * std::cos(t) + q * std::sin(t);
                if (!(u > 0.0))
                    throw DomainViolation("rotated chart point lies outside u > 0");
                if (spec.index == PotentialIndex::V2)
                    return (0.5 * c.mass * c.omega * c.omega * (r * r + q * q) +
                            c.kappa1 +
                            c.kappa2 * (q * std::cos(t) - r * std::sin(t))) /
                           (2.0 * (r * std::cos(t) + q * std::sin(t)));
                // V3
                return h2_2m * c.v0 * c.v0 /
                       (2.0 * (r * std::cos(t) + q * std::sin(t)));
            }
            case ChartId::DisplacedParabolic: {
                const double cc = p.param, xi = p.c1, eta = p.c2;
                if (!(cc > 0.0))
                    throw DomainViolation("displacement c must be > 0");
                if (!(eta > 0.0))
                    throw DomainViolation("parabolic chart requires eta > 0");
                const double s2 = xi * xi + eta * eta;
                const double twou = xi * xi - eta * eta + 2.0 * cc;
                if (!(twou > 0.0))
                    throw DomainViolation("parabolic point lies outside u > 0");
                if (spec.index == PotentialIndex::V3)
                    return h2_2m * c.v0 * c.v0 / twou;
                // V1
                const double cf = c.lambda * c.lambda - 0.25;
                const double mw2 = c.mass * c.omega * c.omega;
                double bracket =
                    0.5 * mw2 *
                        (std::pow(xi, 6) + std::pow(eta, 6)) +
                    2.0 * mw2 * cc * (std::pow(xi, 4) - std::pow(eta, 4)) +
                    (2.0 * mw2 * cc * cc + c.kappa) * s2;
                if (cf != 0.0) {
                    if (xi == 0.0)
                        throw DomainViolation("DI V1 is singular on v = 0");
                    bracket += h2_2m * cf *
                               (1.0 / (xi * xi) + 1.0 / (eta * eta));
                }
                return bracket / (twou * s2);
            }
            default:
                throw UnsupportedChart("unhandled DI chart");
        }
    }

    switch (p.chart) {
        case ChartId::Parabolic: {
            const double xi = p.c1, eta = p.c2;
            if (!(xi > 0.0) || !(eta > 0.0))
                throw DomainViolation("parabolic chart requires xi, eta > 0");
            const double s2 = xi * xi + eta * eta;
            const double u = xi * eta;
            const double pre = detail::dii_prefactor(s, u);
            if (spec.index == PotentialIndex::V1) {
                const double cf = c.k2 * c.k2 - 0.25;
                const double mw2 = c.mass * c.omega * c.omega;
                return pre / s2 *
                       (0.5 * mw2 * (std::pow(xi, 6) + std::pow(eta, 6)) +
                        0.5 * c.k1 * (std::pow(xi, 4) - std::pow(eta, 4)) +
                        h2_2m * cf * (1.0 / (xi * xi) + 1.0 / (eta * eta)));
            }
            if (spec.index == PotentialIndex::V3) {
                const double cf1 = c.k1 * c.k1 - 0.25;
                const double cf2 = c.k2 * c.k2 - 0.25;
                return pre / s2 *
                       (-c.alpha + h2_2m * (cf1 / (xi * xi) + cf2 / (eta * eta)));
            }
            // V4
            return pre * h2_2m * c.v0 * c.v0;
        }
        case ChartId::Polar: {
            const double rho = p.c1, t = p.c2;
            if (!(rho > 0.0))
                throw DomainViolation("polar chart requires rho > 0");
            if (!(t > -M_PI / 2 && t < M_PI / 2))
                throw DomainViolation("polar angle must lie in (-pi/2, pi/2)");
            const double u = rho * std::cos(t);
            const double pre = detail::dii_prefactor(s, u);
            if (spec.index == PotentialIndex::V2) {
                const double cf1 = c.k1 * c.k1 - 0.25;
                const double cf2 = c.k2 * c.k2 - 0.25;
                double bracket = 0.5 * c.mass * c.omega * c.omega * rho * rho +
                                 h2_2m / (rho * rho) * cf1 /
                                     (std::cos(t) * std::cos(t));
                if (cf2 != 0.0) {
                    if (t == 0.0)
                        throw DomainViolation("DII V2 is singular on v = 0");
                    bracket += h2_2m / (rho * rho) * cf2 /
                               (std::sin(t) * std::sin(t));
                }
                return pre * bracket;
            }
            if (spec.index == PotentialIndex::V3) {
                const double cf1 = c.k1 * c.k1 - 0.25;
                const double cf2 = c.k2 * c.k2 - 0.25;
                // Half-angle slots: 1 +- sin t = 2 cos^2/sin^2 (pi/4 -+ t/2).
                return pre *
                       (-0.5 * c.alpha / rho +
                        0.5 * h2_2m / (rho * rho) *
                            (cf1 / (1.0 + std::sin(t)) +
                             cf2 / (1.0 - std::sin(t))));
            }
            // V4
            return pre * h2_2m * c.v0 * c.v0;
        }
        case ChartId::Elliptic: {
            const double d = p.param, w = p.c1, phi = p.c2;
            if (!(d > 0.0))
                throw DomainViolation("ellipse scale d must be > 0");
            const double u = d * std::cosh(w) * std::cos(phi);
            if (!(u > 0.0))
                throw DomainViolation("elliptic point lies outside u > 0");
            const double pre = detail::dii_prefactor(s, u);
            if (spec.index == PotentialIndex::V4)
                return pre * h2_2m * c.v0 * c.v0;
            // V2
            const double ch = std::cosh(w), sh = std::sinh(w);
            const double sp = std::sin(phi), cp = std::cos(phi);
            const double cf1 = c.k1 * c.k1 - 0.25;
            const double cf2 = c.k2 * c.k2 - 0.25;
            if (cf2 != 0.0 && (sh == 0.0 || sp == 0.0))
                throw DomainViolation("DII V2 is singular on v = 0");
            const double sep = ch * ch - cp * cp; // = sinh^2 w + sin^2 phi > 0
            if (!(sep > 0.0))
                throw DomainViolation("elliptic chart is singular at its foci");
            double bracket = 0.5 * c.mass * c.omega * c.omega * d * d *
                             (ch * ch * sh * sh + sp * sp * cp * cp);
            bracket += h2_2m / (d * d) * cf1 * (1.0 / (cp * cp) - 1.0 / (ch * ch));
            if (cf2 != 0.0)
                bracket += h2_2m / (d * d) * cf2 *
                           (1.0 / (sp * sp) + 1.0 / (sh * sh));
            return pre * bracket / sep;
        }
        default:
            throw UnsupportedChart("unhandled DII chart");
    }
}

} // namespace darboux
