#pragma once

#include <cmath>
#include <stdexcept>

#include "darboux/errors.hpp"
#include "darboux/xmath.hpp"

// Classical orthogonal polynomials by three-term recurrence, and the
// normalized one-dimensional oscillator eigenfunctions built from them.

namespace darboux {

inline double laguerre(int n, double lambda, double z) {
    if (n < 0) throw DomainViolation("laguerre: n must be >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + lambda - z;
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 + lambda - z) * l - (k + lambda) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

inline double hermite(int n, double z) {
    if (n < 0) throw DomainViolation("hermite: n must be >= 0");
    if (n == 0) return 1.0;
    double hm1 = 1.0;
    double h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const double hp1 = 2.0 * z * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

inline double jacobi(int n, double alpha, double beta, double x) {
    if (n < 0) throw DomainViolation("jacobi: n must be >= 0");
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double ab = 2.0 * k + alpha + beta;
        const double a1 = 2.0 * k * (k + alpha + beta) * (ab - 2.0);
        const double a2 = (ab - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (ab - 2.0) * (ab - 1.0) * ab;
        const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * ab;
        const double pp1 = ((a2 + a3 * x) * p - a4 * pm1) / a1;
        pm1 = p;
        p = pp1;
    }
    return p;
}

// Linear oscillator eigenfunction, unit norm in dx over the real line.
// s = m*omega/hbar sets the length scale.
inline double psi_HO(int n, double x, double s) {
    if (n < 0) throw DomainViolation("psi_HO: n must be >= 0");
    if (s <= 0.0) throw DomainViolation("psi_HO: m*omega/hbar must be positive");
    const double y = std::sqrt(s) * x;
    const double log_norm =
        0.25 * std::log(s / M_PI) - 0.5 * (n * std::log(2.0) + log_gamma(n + 1.0));
    return std::exp(log_norm - 0.5 * y * y) * hermite(n, y);
}

// Radial oscillator eigenfunction, unit norm in dr on (0, inf):
//   psi(r) = N r^(lambda+1/2) exp(-s r^2/2) L_n^(lambda)(s r^2),
//   N^2 = 2 s^(lambda+1) n! / Gamma(n+lambda+1).
inline double psi_RHO(int n, double lambda, double r, double s) {
    if (n < 0) throw DomainViolation("psi_RHO: n must be >= 0");
    if (s <= 0.0) throw DomainViolation("psi_RHO: m*omega/hbar must be positive");
    if (r < 0.0) throw DomainViolation("psi_RHO: r must be >= 0");
    if (lambda <= -1.0) throw DomainViolation("psi_RHO: lambda must exceed -1");
    if (r == 0.0) return 0.0;
    const double z = s * r * r;
    const double log_norm = 0.5 * (std::log(2.0) + (lambda + 1.0) * std::log(s) +
                                   log_gamma(n + 1.0) - log_gamma(n + lambda + 1.0));
    const double log_mag = log_norm + (lambda + 0.5) * std::log(r) - 0.5 * z;
    return std::exp(log_mag) * laguerre(n, lambda, z);
}

// Trigonometric (Poeschl-Teller) eigenfunction on (0, pi/2), unit norm in dx:
//   phi_n(x) = N (sin x)^(alpha+1/2) (cos x)^(beta+1/2) P_n^(alpha,beta)(cos 2x),
//   N^2 = 2 (2n+alpha+beta+1) n! Gamma(n+alpha+beta+1)
//         / (Gamma(n+alpha+1) Gamma(n+beta+1)).
inline double psi_PT(int n, double alpha, double beta, double x) {
    if (n < 0) throw DomainViolation("psi_PT: n must be >= 0");
    if (x <= 0.0 || x >= M_PI / 2.0)
        throw DomainViolation("psi_PT: x must lie in (0, pi/2)");
    const double log_n2 = std::log(2.0 * (2.0 * n + alpha + beta + 1.0)) +
                          log_gamma(n + 1.0) + log_gamma(n + alpha + beta + 1.0) -
                          log_gamma(n + alpha + 1.0) - log_gamma(n + beta + 1.0);
    const double log_mag = 0.5 * log_n2 + (alpha + 0.5) * std::log(std::sin(x)) +
                           (beta + 0.5) * std::log(std::cos(x));
    return std::exp(log_mag) * jacobi(n, alpha, beta, std::cos(2.0 * x));
}

} // namespace darboux
