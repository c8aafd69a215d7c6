#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "darboux/errors.hpp"

// Shared numeric kernels: sign/log-magnitude arithmetic (for quantities such
// as parabolic cylinder values whose magnitude can cross double range inside
// a root scan), Lanczos log-gamma, double-exponential quadrature, and the
// Kummer confluent series.

namespace darboux {

struct FnEvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
};

// ---------------------------------------------------------------------------
// Signed log-magnitude representation: x = sign * exp(log_abs).
// ---------------------------------------------------------------------------
struct SignedLog {
    int sign = 0;          // -1, 0, +1
    double log_abs = -std::numeric_limits<double>::infinity();

    static SignedLog from_value(double x) {
        if (x == 0.0) return {};
        return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
    }
    static SignedLog from_log(int sign, double log_abs) {
        if (sign == 0) return {};
        return {sign, log_abs};
    }
    double value() const {
        if (sign == 0) return 0.0;
        if (log_abs > 709.0) throw Overflow("magnitude exceeds double range");
        return sign * std::exp(log_abs);
    }
    bool is_zero() const { return sign == 0; }
};

inline SignedLog operator*(const SignedLog& x, const SignedLog& y) {
    if (x.sign == 0 || y.sign == 0) return {};
    return {x.sign * y.sign, x.log_abs + y.log_abs};
}

inline SignedLog operator+(const SignedLog& x, const SignedLog& y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    const SignedLog& big = (x.log_abs >= y.log_abs) ? x : y;
    const SignedLog& small = (x.log_abs >= y.log_abs) ? y : x;
    const double d = small.log_abs - big.log_abs; // <= 0
    const double inner = (x.sign == y.sign) ? 1.0 + std::exp(d)
                                            : 1.0 - std::exp(d);
    if (inner <= 0.0) {
        if (inner == 0.0) return {};
        return {}; // exact cancellation to rounding
    }
    return {big.sign, big.log_abs + std::log(inner)};
}

inline SignedLog operator-(const SignedLog& x, const SignedLog& y) {
    return x + SignedLog{-y.sign, y.log_abs};
}

// ---------------------------------------------------------------------------
// Log-gamma (Lanczos, g = 7, 9 terms) with reflection; thread-safe.
// ---------------------------------------------------------------------------
namespace detail {
inline double lanczos_sum(double x) {
    static const double c[9] = {
        0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
        771.32342877765313,    -176.61502916214059, 12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    double s = c[0];
    for (int k = 1; k < 9; ++k) s += c[k] / (x + k - 1.0);
    return s;
}
} // namespace detail

// log |Gamma(x)| and the sign of Gamma(x); poles reported as +inf log.
inline SignedLog log_gamma_signed(double x) {
    if (x == std::floor(x) && x <= 0.0)
        return {0, std::numeric_limits<double>::infinity()}; // pole marker
    if (x < 0.5) {
        // Gamma(x) = pi / (sin(pi x) Gamma(1-x))
        const double s = std::sin(M_PI * x);
        SignedLog rest = log_gamma_signed(1.0 - x);
        return {s > 0 ? rest.sign : -rest.sign,
                std::log(M_PI / std::abs(s)) - rest.log_abs};
    }
    const double xm = x - 1.0;
    const double t = xm + 7.5;
    const double lg = 0.5 * std::log(2.0 * M_PI) + (xm + 0.5) * std::log(t) - t +
                      std::log(detail::lanczos_sum(xm + 1.0));
    return {1, lg};
}

inline double log_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw DomainViolation("log_gamma at a pole");
    return log_gamma_signed(x).log_abs;
}

inline double gamma_fn(double x) {
    auto g = log_gamma_signed(x);
    if (g.sign == 0) throw DomainViolation("gamma at a pole");
    return g.value();
}

// ---------------------------------------------------------------------------
// Quadrature.
// ---------------------------------------------------------------------------
struct LogQuadResult {
    double log_value;  // log of the (positive) integral
    double rel_err;    // estimated relative error
};

// Integral over (0, inf) of exp(phi(t)) dt for smooth phi with integrable
// behavior at both ends, via the exp-sinh transform t = scale*exp(pi/2 sinh s).
// Summation is carried out relative to the running maximum exponent so that
// integrands peaking at exp(+-1000) are handled without overflow.
template <class Phi>
LogQuadResult integrate_exp_halfline(Phi&& phi, double scale, double tol = 1e-13) {
    // wide enough that an endpoint power as weak as t^(-1/2) is truncated
    // below 1e-20
    const double smax = 4.8;
    auto log_term = [&](double s) {
        const double e = (M_PI / 2.0) * std::sinh(s);
        if (e > 700.0) return -std::numeric_limits<double>::infinity();
        const double t = scale * std::exp(e);
        const double jac = std::log(t * (M_PI / 2.0) * std::cosh(s));
        const double p = phi(t);
        if (!std::isfinite(p)) return -std::numeric_limits<double>::infinity();
        return p + jac;
    };

    double h = 0.6;
    // level 0
    std::vector<double> terms;
    for (double s = -smax; s <= smax + 1e-12; s += h) terms.push_back(log_term(s));
    auto scaled_sum = [](const std::vector<double>& v, double& M) {
        M = -std::numeric_limits<double>::infinity();
        for (double x : v) M = std::max(M, x);
        if (!std::isfinite(M)) return 0.0;
        double S = 0.0;
        for (double x : v) S += std::exp(x - M);
        return S;
    };
    double M_prev;
    double S_prev = scaled_sum(terms, M_prev);
    double log_prev = M_prev + std::log(S_prev) + std::log(h);

    double log_cur = log_prev;
    double rel = 1.0;
    for (int level = 1; level <= 9; ++level) {
        h *= 0.5;
        // add the midpoints of the previous grid
        for (double s = -smax + h; s <= smax + 1e-12; s += 2.0 * h)
            terms.push_back(log_term(s));
        double M_cur;
        double S_cur = scaled_sum(terms, M_cur);
        log_cur = M_cur + std::log(S_cur) + std::log(h);
        rel = std::abs(std::expm1(log_prev - log_cur));
        if (level >= 3 && rel < tol) break;
        log_prev = log_cur;
    }
    return {log_cur, std::max(rel, 1e-15)};
}

// Trapezoidal sum of an even analytic integrand over [0, inf): converges
// exponentially in 1/h (sinc quadrature). Used for the Bessel-K integral
// representations. Returns the plain (unscaled) value.
template <class F>
FnEvalResult trapezoid_even_halfline(F&& f, double t_max, double tol = 1e-13) {
    double h = 0.25;
    auto sum_at = [&](double hh) {
        double s = 0.5 * f(0.0);
        for (double t = hh; t <= t_max; t += hh) s += f(t);
        return s * hh;
    };
    double prev = sum_at(h);
    double cur = prev;
    double err = 1.0;
    for (int level = 1; level <= 8; ++level) {
        h *= 0.5;
        cur = sum_at(h);
        err = std::abs(cur - prev);
        if (level >= 2 && err <= tol * std::max(1.0, std::abs(cur))) break;
        prev = cur;
    }
    return {cur, std::max(err, 1e-16 * std::abs(cur))};
}

// Adaptive Simpson on a finite interval (wave-function norms, orthogonality).
namespace detail {
template <class F>
double simpson_rec(F&& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}
} // namespace detail

template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-11) {
    // fixed initial partition so symmetric integrands cannot fool the
    // error probe with coincidental zeros
    const int n0 = 16;
    const double h = (b - a) / n0;
    double total = 0.0;
    for (int i = 0; i < n0; ++i) {
        const double x0 = a + i * h, x1 = (i == n0 - 1) ? b : a + (i + 1) * h;
        const double fa = f(x0), fb = f(x1), fm = f(0.5 * (x0 + x1));
        const double whole = (x1 - x0) / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::simpson_rec(f, x0, x1, fa, fm, fb, whole, tol / n0, 44);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Kummer confluent hypergeometric series M(a, b, z) = 1F1(a; b; z).
// ---------------------------------------------------------------------------
inline FnEvalResult kummer_M(double a, double b, double z, int max_terms = 4000) {
    if (b <= 0.0 && b == std::floor(b)) {
        // series pole unless the a-series terminates first
        const bool terminates = (a <= 0.0 && a == std::floor(a) && a > b);
        if (!terminates) throw PoleOfM("Kummer M at non-positive integer b");
    }
    double term = 1.0, sum = 1.0, max_abs = 1.0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        sum += term;
        max_abs = std::max(max_abs, std::abs(sum));
        if (term == 0.0) break; // polynomial case terminated
        if (std::abs(term) < 1e-17 * std::abs(sum) && k > std::abs(z)) break;
    }
    if (!std::isfinite(sum)) throw Overflow("Kummer series overflow");
    // cancellation-aware error estimate
    const double err = 1e-16 * max_abs + 1e-16 * std::abs(sum);
    return {sum, err};
}

// ---------------------------------------------------------------------------
// Root bracketing and bisection on a sign-valued function.  The callable
// returns the *sign* of f (as +-1) or 0 to mark "outside supported range /
// skip".  Used where f itself may overflow double range.
// ---------------------------------------------------------------------------
struct BracketRoot {
    double lo, hi;
};

template <class SignF>
std::vector<BracketRoot> scan_sign_changes(SignF&& sgn, double lo, double hi, int n) {
    std::vector<BracketRoot> out;
    if (!(hi > lo) || n < 2) return out;
    const double h = (hi - lo) / n;
    int prev_sign = 0;
    double prev_x = lo;
    for (int i = 0; i <= n; ++i) {
        const double x = lo + i * h;
        const int s = sgn(x);
        if (s != 0 && prev_sign != 0 && s != prev_sign) out.push_back({prev_x, x});
        if (s != 0) {
            prev_sign = s;
            prev_x = x;
        }
    }
    return out;
}

template <class SignF>
double bisect_sign(SignF&& sgn, double lo, double hi, int max_iter = 200) {
    int slo = sgn(lo);
    int shi = sgn(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw NoRootsInWindow("bisection endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const int sm = sgn(mid);
        if (sm == 0) break;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                           std::max(1.0, std::abs(mid)))
            break;
    }
    return 0.5 * (lo + hi);
}

// Richardson extrapolation order estimate from three mesh levels: computes
// the observed convergence order p from values at h, h/2, h/4.
inline double observed_order(double f_h, double f_h2, double f_h4) {
    const double num = f_h - f_h2;
    const double den = f_h2 - f_h4;
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::log2(std::abs(num / den));
}

} // namespace darboux
