#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "darboux/errors.hpp"
#include "darboux/potentials.hpp"

// Separation of variables for the in-scope potentials.
//
// In the conformal chart the stationary equation
//   -(hbar^2/2m) Lap psi + [bracket - g E] psi = 0
// splits, for the separable (potential, chart) pairs, into two ordinary
// problems of the form
//   -(hbar^2/2m) y'' + V_eff(x) y = mu y.
// separate() returns the two problems with V_eff bound at the energy E (and
// channel level n) passed in, keeping only x-dependent terms; purely additive
// channel constants belong to the coupling rule, which states how the two
// channel eigenvalues combine with E.
//
// Variable labels follow the chart: U/V for conformal coordinates (the
// transverse coordinate of the rotated chart is labeled V as well), RHO/THETA
// for polar, R/PHI for the half-angle radial frame of the DII Coulomb-like
// potential, XI/ETA for parabolic.

namespace darboux {

struct SeparatedProblem {
    enum class Var { U, V, Rho, Theta, R, Phi, Xi, Eta };
    enum class Boundary {
        HalfLineDirichlet, // half line (wall, inf), Dirichlet at the wall
        WholeLine,
        RadialRegular,     // (0, inf) with the regular solution selected at 0
        AngularInterval
    };

    Var variable{};
    Boundary boundary{};
    double wall = 0.0; // left endpoint when boundary == HalfLineDirichlet
    std::string weight;
    std::function<double(double)> effective_potential;
};

struct SeparationResult {
    SeparatedProblem first;  // the channel solved first (transverse / angular)
    SeparatedProblem second; // the channel carrying the quantization condition
    std::string rule;        // how the channel constants couple to E
    // Separation constant of the first channel at level n and energy E, in
    // the convention the coupling rule uses.  Null when the first channel is
    // continuous.
    std::function<double(double E, int n)> first_constant;
    // Energy-dependent centrifugal index entering the second channel, when
    // the route has one (throws NegativeRadicand when it turns imaginary).
    std::function<double(double E)> second_index;
};

// Energy-dependent centrifugal index lambda(E) = sqrt(k^2 + 2 m a E / hbar^2)
// shared by the DII routes.
inline double dii_energy_index(double k, double a, double E, double hbar,
                               double mass) {
    const double rad = k * k + 2.0 * mass * a * E / (hbar * hbar);
    if (rad < 0.0)
        throw NegativeRadicand("centrifugal index becomes imaginary");
    return std::sqrt(rad);
}

inline bool separation_supported(const PotentialSpec& spec, ChartId chart) {
    if (spec.space == Space::DI) {
        switch (spec.index) {
            case PotentialIndex::V1: return chart == ChartId::UV;
            case PotentialIndex::V2:
            case PotentialIndex::V3:
                return chart == ChartId::UV || chart == ChartId::RotatedRQ;
            default: return false;
        }
    }
    switch (spec.index) {
        case PotentialIndex::V1: return chart == ChartId::UV;
        case PotentialIndex::V2:
            return chart == ChartId::UV || chart == ChartId::Polar;
        case PotentialIndex::V3:
            return chart == ChartId::Polar || chart == ChartId::Parabolic;
        case PotentialIndex::V4: return true;
    }
    return false;
}

// chart_param carries the rotation angle (rotated chart) or the ellipse
// scale d (elliptic chart); it is ignored elsewhere.
inline SeparationResult separate(const PotentialSpec& spec, const SpaceSpec& s,
                                 ChartId chart, double E = 0.0, int n = 0,
                                 double chart_param = 0.0) {
    spec.validate();
    s.validate();
    if (!chart_belongs_to(s.space, chart) || spec.space != s.space)
        throw ChartSpaceMismatch("potential, space and chart must agree");

    const Couplings& c = spec.c;
    const double h2_2m = c.hbar * c.hbar / (2.0 * c.mass);
    const double m = c.mass, w = c.omega, hb = c.hbar;

    if (!separation_supported(spec, chart)) {
        if (!evaluation_chart_supported(spec, chart))
            throw UnsupportedChart(std::string("potential ") +
                                   potential_name(spec.index) +
                                   " has no closed form in chart '" +
                                   chart_name(chart) + "'");
        if (spec.space == Space::DI) {
            if (spec.index == PotentialIndex::V1)
                throw NotSeparableHere(
                    "parabolic route produces quartic/sextic anharmonic "
                    "channels; no closed solution");
            throw NotSeparableHere(
                "parabolic route produces quartic anharmonic channels; "
                "no closed solution");
        }
        if (spec.index == PotentialIndex::V1)
            throw NotSeparableHere(
                "parabolic route produces quartic/sextic anharmonic "
                "channels; no closed solution");
        if (spec.index == PotentialIndex::V2)
            throw NotSeparableHere(
                "elliptic route produces coupled quartic trigonometric/"
                "hyperbolic channels; no closed solution");
        throw NotSeparableHere(
            "the Coulomb-like term couples u and v in the conformal chart");
    }

    SeparationResult out;

    if (spec.space == Space::DI) {
        const double umin = s.u_min;
        switch (spec.index) {
            case PotentialIndex::V1: {
                const double lam = c.lambda;
                out.first = {SeparatedProblem::Var::V,
                             SeparatedProblem::Boundary::RadialRegular, 0.0,
                             "dv on (0, inf)",
                             [=](double x) {
                                 return 0.5 * m * w * w * x * x +
                                        h2_2m * (lam * lam - 0.25) / (x * x);
                             }};
                out.second = {SeparatedProblem::Var::U,
                              SeparatedProblem::Boundary::HalfLineDirichlet,
                              umin, "du on (u_min, inf)",
                              [=](double x) {
                                  return 2.0 * m * w * w * x * x - 2.0 * E * x;
                              }};
                out.first_constant = [=](double /*E*/, int nn) {
                    return hb * w * (2.0 * nn + lam + 1.0);
                };
                out.rule =
                    "v-channel eigenvalue L = hbar*omega*(2n+lambda+1); the "
                    "u-channel (shifted oscillator, frequency 2*omega, center "
                    "E/(2*m*omega^2)) must have eigenvalue -(kappa + L), i.e. "
                    "centered pseudo-energy E^2/(2*m*omega^2) - kappa - L";
                return out;
            }
            case PotentialIndex::V2: {
                const double k2c = c.kappa2;
                if (chart == ChartId::UV) {
                    out.first = {SeparatedProblem::Var::V,
                                 SeparatedProblem::Boundary::WholeLine, 0.0,
                                 "dv on R",
                                 [=](double x) {
                                     return 0.5 * m * w * w * x * x + k2c * x;
                                 }};
                    out.second = {SeparatedProblem::Var::U,
                                  SeparatedProblem::Boundary::HalfLineDirichlet,
                                  umin, "du on (u_min, inf)",
                                  [=](double x) {
                                      return 0.5 * m * w * w * x * x -
                                             2.0 * E * x;
                                  }};
                    out.first_constant = [=](double /*E*/, int nn) {
                        return hb * w * (nn + 0.5) -
                               k2c * k2c / (2.0 * m * w * w);
                    };
                    out.rule =
                        "v-channel eigenvalue L = hbar*omega*(n+1/2) - "
                        "kappa2^2/(2*m*omega^2); the u-channel (shifted "
                        "oscillator, frequency omega, center 2E/(m*omega^2)) "
                        "must have eigenvalue -(kappa1 + L), i.e. centered "
                        "pseudo-energy 2E^2/(m*omega^2) - kappa1 - L";
                    return out;
                }
                // Rotated chart, angle t: both channels are shifted
                // oscillators; the wall u > u_min is an r-condition only at
                // t = 0.
                const double t = chart_param;
                const double ct = std::cos(t), st = std::sin(t);
                out.first = {SeparatedProblem::Var::V,
                             SeparatedProblem::Boundary::WholeLine, 0.0,
                             "dq on R",
                             [=](double x) {
                                 return 0.5 * m * w * w * x * x +
                                        (k2c * ct - 2.0 * E * st) * x;
                             }};
                out.second = {SeparatedProblem::Var::R,
                              t == 0.0
                                  ? SeparatedProblem::Boundary::HalfLineDirichlet
                                  : SeparatedProblem::Boundary::WholeLine,
                              t == 0.0 ? umin : 0.0, "dr",
                              [=](double x) {
                                  return 0.5 * m * w * w * x * x -
                                         (2.0 * E * ct + k2c * st) * x;
                              }};
                out.first_constant = [=](double EE, int nn) {
                    const double shift = 2.0 * EE * st - k2c * ct;
                    return hb * w * (nn + 0.5) -
                           shift * shift / (2.0 * m * w * w);
                };
                out.rule =
                    "q-channel eigenvalue L (shifted oscillator); the "
                    "r-channel must have eigenvalue -(kappa1 + L); at angle 0 "
                    "this is the conformal-chart condition with r = u";
                return out;
            }
            case PotentialIndex::V3: {
                const double vv0 = c.v0;
                if (chart == ChartId::UV) {
                    out.first = {SeparatedProblem::Var::V,
                                 SeparatedProblem::Boundary::WholeLine, 0.0,
                                 "dv on R", [](double) { return 0.0; }};
                    out.second = {SeparatedProblem::Var::U,
                                  SeparatedProblem::Boundary::HalfLineDirichlet,
                                  umin, "du on (u_min, inf)",
                                  [=](double x) { return -2.0 * E * x; }};
                    out.rule =
                        "v-channel plane wave with constant hbar^2*k^2/(2m); "
                        "the linear u-channel (Airy) must have eigenvalue "
                        "-hbar^2*(v0^2+k^2)/(2m)";
                    (void)vv0;
                    return out;
                }
                const double t = chart_param;
                const double ct = std::cos(t), st = std::sin(t);
                out.first = {SeparatedProblem::Var::V,
                             SeparatedProblem::Boundary::WholeLine, 0.0,
                             "dq on R",
                             [=](double x) { return -2.0 * E * st * x; }};
                out.second = {SeparatedProblem::Var::R,
                              t == 0.0
                                  ? SeparatedProblem::Boundary::HalfLineDirichlet
                                  : SeparatedProblem::Boundary::WholeLine,
                              t == 0.0 ? umin : 0.0, "dr",
                              [=](double x) { return -2.0 * E * ct * x; }};
                out.rule =
                    "two linear channels; their constants sum to "
                    "-hbar^2*v0^2/(2m)";
                return out;
            }
            default:
                throw ConfigError("(DI, V4) is out of scope");
        }
    }

    // DII routes.
    const double a = s.a, b = s.b;
    switch (spec.index) {
        case PotentialIndex::V1: {
            const double k1c = c.k1, k2i = c.k2;
            out.first = {SeparatedProblem::Var::V,
                         SeparatedProblem::Boundary::WholeLine, 0.0, "dv on R",
                         [=](double x) {
                             return 2.0 * m * w * w * x * x + k1c * x;
                         }};
            out.second = {SeparatedProblem::Var::U,
                          SeparatedProblem::Boundary::RadialRegular, 0.0,
                          "du on (0, inf)",
                          [=](double x) {
                              const double lam2 =
                                  k2i * k2i + 2.0 * m * a * E / (hb * hb);
                              return 0.5 * m * w * w * x * x +
                                     h2_2m * (lam2 - 0.25) / (x * x);
                          }};
            out.first_constant = [=](double /*E*/, int nn) {
                return hb * w * (nn + 0.5) +
                       k1c * k1c / (8.0 * m * w * w);
            };
            out.second_index = [=](double EE) {
                return dii_energy_index(k2i, a, EE, hb, m);
            };
            out.rule =
                "u-channel eigenvalue hbar*omega*(2l+lambda(E)+1) plus the "
                "v-channel constant hbar*omega*(n+1/2) + k1^2/(8*m*omega^2) "
                "must equal b*E; lambda(E)^2 = k2^2 + 2*m*a*E/hbar^2";
            return out;
        }
        case PotentialIndex::V2: {
            const double k1i = c.k1, k2i = c.k2;
            if (chart == ChartId::UV) {
                out.first = {SeparatedProblem::Var::V,
                             SeparatedProblem::Boundary::RadialRegular, 0.0,
                             "dv on (0, inf)",
                             [=](double x) {
                                 return 0.5 * m * w * w * x * x +
                                        h2_2m * (k2i * k2i - 0.25) / (x * x);
                             }};
                out.second = {SeparatedProblem::Var::U,
                              SeparatedProblem::Boundary::RadialRegular, 0.0,
                              "du on (0, inf)",
                              [=](double x) {
                                  const double lam2 =
                                      k1i * k1i + 2.0 * m * a * E / (hb * hb);
                                  return 0.5 * m * w * w * x * x +
                                         h2_2m * (lam2 - 0.25) / (x * x);
                              }};
                out.first_constant = [=](double /*E*/, int nn) {
                    return hb * w * (2.0 * nn + std::abs(k2i) + 1.0);
                };
                out.second_index = [=](double EE) {
                    return dii_energy_index(k1i, a, EE, hb, m);
                };
                out.rule =
                    "hbar*omega*(2l+lambda1(E)+1) + hbar*omega*(2n+|k2|+1) = "
                    "b*E; lambda1(E)^2 = k1^2 + 2*m*a*E/hbar^2";
                return out;
            }
            // Polar route: angular Poeschl-Teller in theta, radial oscillator
            // in rho with index lambda2 = 2n + 1 + lambda1(E) + |k2|.
            out.first = {SeparatedProblem::Var::Theta,
                         SeparatedProblem::Boundary::AngularInterval, 0.0,
                         "dtheta on (0, pi/2)",
                         [=](double x) {
                             const double lam12 =
                                 k1i * k1i + 2.0 * m * a * E / (hb * hb);
                             const double cs = std::cos(x), sn = std::sin(x);
                             return h2_2m * ((lam12 - 0.25) / (cs * cs) +
                                             (k2i * k2i - 0.25) / (sn * sn));
                         }};
            out.second = {SeparatedProblem::Var::Rho,
                          SeparatedProblem::Boundary::RadialRegular, 0.0,
                          "drho on (0, inf)",
                          [=](double x) {
                              const double lam1 =
                                  dii_energy_index(k1i, a, E, hb, m);
                              const double lam2 =
                                  2.0 * n + 1.0 + lam1 + std::abs(k2i);
                              return 0.5 * m * w * w * x * x +
                                     h2_2m * (lam2 * lam2 - 0.25) / (x * x);
                          }};
            out.first_constant = [=](double EE, int nn) {
                const double lam1 = dii_energy_index(k1i, a, EE, hb, m);
                const double lam2 = 2.0 * nn + 1.0 + lam1 + std::abs(k2i);
                return h2_2m * lam2 * lam2;
            };
            out.second_index = [=](double EE) {
                return dii_energy_index(k1i, a, EE, hb, m);
            };
            out.rule =
                "angular constant hbar^2*lambda2^2/(2m) with lambda2 = "
                "2n+1+lambda1(E)+|k2|; radial eigenvalue "
                "hbar*omega*(2l+lambda2+1) = b*E";
            return out;
        }
        case PotentialIndex::V3: {
            const double k1i = c.k1, k2i = c.k2, al = c.alpha;
            // omega~^2 = -2 b E / m; negative for scattering energies, kept
            // as written.
            const double w2t = -2.0 * b * E / m;
            if (chart == ChartId::Polar) {
                out.first = {SeparatedProblem::Var::Phi,
                             SeparatedProblem::Boundary::AngularInterval, 0.0,
                             "dphi on (0, pi/2)",
                             [=](double x) {
                                 const double l1 =
                                     k1i * k1i + 2.0 * m * a * E / (hb * hb);
                                 const double l2 =
                                     k2i * k2i + 2.0 * m * a * E / (hb * hb);
                                 const double cs = std::cos(x),
                                              sn = std::sin(x);
                                 return h2_2m * ((l1 - 0.25) / (cs * cs) +
                                                 (l2 - 0.25) / (sn * sn));
                             }};
                out.second = {SeparatedProblem::Var::R,
                              SeparatedProblem::Boundary::RadialRegular, 0.0,
                              "dr on (0, inf)",
                              [=](double x) {
                                  const double l1 =
                                      dii_energy_index(k1i, a, E, hb, m);
                                  const double l2 =
                                      dii_energy_index(k2i, a, E, hb, m);
                                  const double L =
                                      2.0 * n + l1 + l2 + 1.0;
                                  return 0.5 * m * w2t * x * x +
                                         h2_2m * (L * L - 0.25) / (x * x);
                              }};
                out.first_constant = [=](double EE, int nn) {
                    const double l1 = dii_energy_index(k1i, a, EE, hb, m);
                    const double l2 = dii_energy_index(k2i, a, EE, hb, m);
                    const double L = 2.0 * nn + l1 + l2 + 1.0;
                    return h2_2m * L * L;
                };
                out.rule =
                    "angular constant hbar^2*Lambda^2/(2m) with Lambda = "
                    "2n+lambda1(E)+lambda2(E)+1; radial eigenvalue "
                    "hbar*omega~*(2l+Lambda+1) = alpha, omega~^2 = -2*b*E/m";
                (void)al;
                return out;
            }
            // Parabolic route: two radial oscillators with indices
            // lambda1(E), lambda2(E) and frequency omega~.
            out.first = {SeparatedProblem::Var::Xi,
                         SeparatedProblem::Boundary::RadialRegular, 0.0,
                         "dxi on (0, inf)",
                         [=](double x) {
                             const double l1 =
                                 dii_energy_index(k1i, a, E, hb, m);
                             return 0.5 * m * w2t * x * x +
                                    h2_2m * (l1 * l1 - 0.25) / (x * x);
                         }};
            out.second = {SeparatedProblem::Var::Eta,
                          SeparatedProblem::Boundary::RadialRegular, 0.0,
                          "deta on (0, inf)",
                          [=](double x) {
                              const double l2 =
                                  dii_energy_index(k2i, a, E, hb, m);
                              return 0.5 * m * w2t * x * x +
                                     h2_2m * (l2 * l2 - 0.25) / (x * x);
                          }};
            out.first_constant = [=](double EE, int nn) {
                const double l1 = dii_energy_index(k1i, a, EE, hb, m);
                return hb * std::sqrt(-2.0 * b * EE / m) *
                       (2.0 * nn + l1 + 1.0);
            };
            out.rule =
                "channel constants hbar*omega~*(2n_xi+lambda1+1) and "
                "hbar*omega~*(2n_eta+lambda2+1) sum to alpha";
            return out;
        }
        case PotentialIndex::V4: {
            const double vv0 = c.v0;
            switch (chart) {
                case ChartId::UV:
                    out.first = {SeparatedProblem::Var::V,
                                 SeparatedProblem::Boundary::WholeLine, 0.0,
                                 "dv on R", [](double) { return 0.0; }};
                    out.second = {SeparatedProblem::Var::U,
                                  SeparatedProblem::Boundary::RadialRegular,
                                  0.0, "du on (0, inf)",
                                  [=](double x) { return a * E / (x * x); }};
                    out.rule =
                        "v-channel plane wave, constant hbar^2*k^2/(2m); "
                        "u-channel centrifugal strength a*E (index "
                        "lambda^2 - 1/4 = 2*m*a*E/hbar^2) with eigenvalue "
                        "b*E - hbar^2*(k^2+v0^2)/(2m)";
                    (void)vv0;
                    return out;
                case ChartId::Polar:
                    out.first = {SeparatedProblem::Var::Theta,
                                 SeparatedProblem::Boundary::AngularInterval,
                                 0.0, "dtheta on (-pi/2, pi/2)",
                                 [=](double x) {
                                     const double cs = std::cos(x);
                                     return a * E / (cs * cs);
                                 }};
                    out.second = {SeparatedProblem::Var::Rho,
                                  SeparatedProblem::Boundary::RadialRegular,
                                  0.0, "drho on (0, inf)",
                                  [=](double x) {
                                      return -h2_2m * 0.25 / (x * x);
                                  }};
                    out.rule =
                        "angular constant sigma from the theta channel; the "
                        "radial centrifugal coefficient is sigma - "
                        "hbar^2/(8m), with eigenvalue b*E - "
                        "hbar^2*v0^2/(2m)";
                    return out;
                case ChartId::Parabolic:
                    out.first = {SeparatedProblem::Var::Xi,
                                 SeparatedProblem::Boundary::RadialRegular,
                                 0.0, "dxi on (0, inf)",
                                 [=](double x) {
                                     return (h2_2m * vv0 * vv0 - b * E) * x *
                                                x +
                                            a * E / (x * x);
                                 }};
                    out.second = {SeparatedProblem::Var::Eta,
                                  SeparatedProblem::Boundary::RadialRegular,
                                  0.0, "deta on (0, inf)",
                                  [=](double x) {
                                      return (h2_2m * vv0 * vv0 - b * E) * x *
                                                 x +
                                             a * E / (x * x);
                                  }};
                    out.rule =
                        "the two channel constants sum to zero (continuous "
                        "spectrum)";
                    return out;
                case ChartId::Elliptic: {
                    const double d = chart_param > 0.0 ? chart_param : 1.0;
                    out.first = {SeparatedProblem::Var::Phi,
                                 SeparatedProblem::Boundary::AngularInterval,
                                 0.0, "dphi on (-pi/2, pi/2)",
                                 [=](double x) {
                                     const double sn = std::sin(x),
                                                  cs = std::cos(x);
                                     return (h2_2m * vv0 * vv0 - b * E) * d *
                                                d * sn * sn +
                                            a * E / (cs * cs);
                                 }};
                    out.second = {SeparatedProblem::Var::Rho,
                                  SeparatedProblem::Boundary::RadialRegular,
                                  0.0, "dw on (0, inf)",
                                  [=](double x) {
                                      const double sh = std::sinh(x),
                                                   ch = std::cosh(x);
                                      return (h2_2m * vv0 * vv0 - b * E) * d *
                                                 d * sh * sh -
                                             a * E / (ch * ch);
                                  }};
                    out.rule =
                        "the two channel constants sum to zero (continuous "
                        "spectrum)";
                    return out;
                }
                default: break;
            }
            throw UnsupportedChart("unhandled DII V4 chart");
        }
    }
    throw ConfigError("unreachable potential index");
}

} // namespace darboux
