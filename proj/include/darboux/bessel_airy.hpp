#pragma once

#include <cmath>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/xmath.hpp"

// Modified Bessel functions (real and imaginary order) and the Airy function.
// K is evaluated from its cosh-kernel integral representation with a
// trapezoidal sum, which converges exponentially for these even analytic
// integrands; I from its ascending series (all terms positive).

namespace darboux {

namespace detail {
inline double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

// cutoff T with z*cosh(T) - |nu|*T > 760 so the tail is below underflow
inline double bessel_tail_cutoff(double nu, double z) {
    double t = 5.0;
    for (int i = 0; i < 4; ++i) {
        const double arg = (760.0 + std::abs(nu) * t) / z;
        t = std::acosh(std::max(arg, 1.0 + 1e-12)) + 0.5;
    }
    return t;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, summed in log space.
inline SignedLog bessel_K_log(double nu, double z) {
    const double t_max = bessel_tail_cutoff(nu, z);
    auto log_term = [&](double t) { return -z * std::cosh(t) + log_cosh(nu * t); };
    double h = 0.25;
    auto sum_at = [&](double hh) {
        std::vector<double> terms;
        terms.push_back(log_term(0.0) - std::log(2.0));
        for (double t = hh; t <= t_max; t += hh) terms.push_back(log_term(t));
        double M = -std::numeric_limits<double>::infinity();
        for (double x : terms) M = std::max(M, x);
        double S = 0.0;
        for (double x : terms) S += std::exp(x - M);
        return M + std::log(S) + std::log(hh);
    };
    double prev = sum_at(h);
    double cur = prev;
    for (int level = 1; level <= 8; ++level) {
        h *= 0.5;
        cur = sum_at(h);
        if (level >= 2 && std::abs(cur - prev) < 1e-14 * std::max(1.0, std::abs(cur)))
            break;
        prev = cur;
    }
    return SignedLog::from_log(1, cur);
}
} // namespace detail

inline FnEvalResult bessel_K(double nu, double z) {
    if (z <= 0.0) throw DomainViolation("bessel_K: z must be positive");
    if (z < 1e-8 || z > 600.0 || std::abs(nu) > 200.0)
        throw OutOfSupportedRange("bessel_K: (nu, z) outside supported range");
    const SignedLog lk = detail::bessel_K_log(std::abs(nu), z);
    const double v = lk.value();
    return {v, 1e-13 * std::abs(v) + 1e-300};
}

// K of purely imaginary order ip: int_0^inf exp(-z cosh t) cos(p t) dt.
inline FnEvalResult bessel_K_imag_order(double p, double z) {
    if (z <= 0.0) throw DomainViolation("bessel_K_imag_order: z must be positive");
    if (z < 1e-8 || z > 600.0 || std::abs(p) > 200.0)
        throw OutOfSupportedRange("bessel_K_imag_order: (p, z) outside supported range");
    const double t_max = detail::bessel_tail_cutoff(0.0, z);
    auto f = [&](double t) { return std::exp(-z * std::cosh(t)) * std::cos(p * t); };
    FnEvalResult r = trapezoid_even_halfline(f, t_max, 1e-14);
    return {r.value, std::max(r.abs_err_estimate, 1e-14 * (1.0 + std::abs(r.value)))};
}

inline FnEvalResult bessel_I(double nu, double z) {
    if (z < 0.0) throw DomainViolation("bessel_I: z must be >= 0");
    if (nu <= -1.0 || nu > 200.0 || z > 600.0)
        throw OutOfSupportedRange("bessel_I: (nu, z) outside supported range");
    if (z == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};
    // (z/2)^nu / Gamma(nu+1) * sum_k (z^2/4)^k / (k! (nu+1)_k)
    const double log_pref = nu * std::log(0.5 * z) - log_gamma(nu + 1.0);
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 2000; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (term < 1e-17 * sum && k > z) break;
    }
    const double log_val = log_pref + std::log(sum);
    if (log_val > 709.0) throw Overflow("bessel_I overflows double range");
    const double v = std::exp(log_val);
    return {v, 1e-14 * std::abs(v) + 1e-300};
}

// Airy Ai on z >= 0.  Maclaurin series while the c1 f - c2 g cancellation is
// harmless (z < 1.2); beyond that the damped-cosine representation
//   Ai(z) = (exp(-zeta)/pi) int_0^inf exp(-sqrt(z) t^2) cos(t^3/3) dt,
//   zeta = (2/3) z^(3/2),
// whose integrand is even and analytic, so the trapezoidal sum converges
// exponentially.
inline FnEvalResult airy_Ai(double z) {
    if (z < 0.0) throw OutOfSupportedRange("airy_Ai: negative argument not supported");
    if (z > 100.0) throw OutOfSupportedRange("airy_Ai: argument too large");
    if (z < 1.2) {
        // Ai(z) = c1 f(z) - c2 g(z),
        // f = sum z^{3k} (1/3)_k 3^k / (3k)!,  g = sum z^{3k+1} (2/3)_k 3^k / (3k+1)!
        const double c1 = std::pow(3.0, -2.0 / 3.0) / gamma_fn(2.0 / 3.0);
        const double c2 = std::pow(3.0, -1.0 / 3.0) / gamma_fn(1.0 / 3.0);
        double tf = 1.0, f = 1.0;
        double tg = z, g = z;
        const double z3 = z * z * z;
        for (int k = 1; k <= 60; ++k) {
            tf *= z3 / ((3.0 * k) * (3.0 * k - 1.0));
            f += tf;
            tg *= z3 / ((3.0 * k + 1.0) * (3.0 * k));
            g += tg;
            if (std::abs(tf) < 1e-18 * std::abs(f) && std::abs(tg) < 1e-18 * std::max(1e-300, std::abs(g)))
                break;
        }
        const double v = c1 * f - c2 * g;
        return {v, 1e-15 * (std::abs(c1 * f) + std::abs(c2 * g)) + 1e-300};
    }
    const double sq = std::sqrt(z);
    const double zeta = (2.0 / 3.0) * z * sq;
    const double t_max = std::sqrt(42.0 / sq) + 0.5;
    auto f = [&](double t) { return std::exp(-sq * t * t) * std::cos(t * t * t / 3.0); };
    const FnEvalResult q = trapezoid_even_halfline(f, t_max, 1e-15);
    // halve: the helper integrates the even extension's half line with the
    // t=0 term already weighted 1/2, i.e. exactly int_0^inf f dt
    const double v = std::exp(-zeta) / M_PI * q.value;
    const double err = std::exp(-zeta) / M_PI * q.abs_err_estimate + 5e-15 * std::abs(v);
    return {v, err + 1e-300};
}

} // namespace darboux
