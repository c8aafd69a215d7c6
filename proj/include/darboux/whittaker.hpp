#pragma once

#include <cmath>

#include "darboux/errors.hpp"
#include "darboux/xmath.hpp"

// Whittaker functions of real parameters:
//   M_{mu,nu}(z) = exp(-z/2) z^(nu+1/2) M(nu - mu + 1/2, 1 + 2 nu, z)
//   W_{mu,nu}(z) = exp(-z/2) z^(nu+1/2) U(nu - mu + 1/2, 1 + 2 nu, z)
// with M the Kummer series and U evaluated from its Laplace integral for
// a >= 1/2 and reached by the (stable) downward recurrence in a otherwise.

namespace darboux {

namespace detail {

// U(a, b, z) for a >= 1/2, z > 0, via
//   U(a,b,z) = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt
inline SignedLog kummer_U_integral(double a, double b, double z, double* rel_err) {
    const double scale = (std::max(a - 1.0, 0.0) + 1.0) / z;
    auto phi = [&](double t) {
        return -z * t + (a - 1.0) * std::log(t) + (b - a - 1.0) * std::log1p(t);
    };
    const LogQuadResult q = integrate_exp_halfline(phi, scale, 3e-14);
    *rel_err = q.rel_err + 1e-14;
    return SignedLog::from_log(1, q.log_value - log_gamma(a));
}

struct UScaled {
    SignedLog val;
    double rel_err;
    double log_envelope;
};

inline UScaled kummer_U(double a, double b, double z) {
    if (a >= 0.5) {
        double rel;
        SignedLog v = kummer_U_integral(a, b, z, &rel);
        return {v, rel, v.log_abs};
    }
    const int k = static_cast<int>(std::ceil(0.5 - a)); // down-steps, >= 1
    const double a0 = a + k;                            // in [0.5, 1.5)
    double rel0, rel1;
    SignedLog u_hi = kummer_U_integral(a0 + 1.0, b, z, &rel1); // U(a0+1)
    SignedLog u_lo = kummer_U_integral(a0, b, z, &rel0);       // U(a0)
    double log_env = std::max(u_hi.log_abs, u_lo.log_abs);
    // U(j-1) = (2j - b + z) U(j) - j (j - b + 1) U(j+1)
    for (int i = 0; i < k; ++i) {
        const double j = a0 - i;
        const SignedLog next = SignedLog::from_value(2.0 * j - b + z) * u_lo -
                               SignedLog::from_value(j * (j - b + 1.0)) * u_hi;
        u_hi = u_lo;
        u_lo = next;
        if (u_lo.sign != 0) log_env = std::max(log_env, u_lo.log_abs);
    }
    return {u_lo, rel0 + rel1 + 5e-15 * k, log_env};
}

} // namespace detail

inline FnEvalResult whittaker_M(double mu, double nu, double z) {
    if (z <= 0.0) throw DomainViolation("whittaker_M: z must be positive");
    if (z > 600.0 || std::abs(mu) > 200.0 || std::abs(nu) > 200.0)
        throw OutOfSupportedRange("whittaker_M: parameters outside supported range");
    const double two_nu = 2.0 * nu;
    if (two_nu < 0.0 && two_nu == std::floor(two_nu))
        throw PoleOfM("whittaker_M: 2 nu is a negative integer");
    const double a = nu - mu + 0.5;
    const double b = 1.0 + 2.0 * nu;
    const FnEvalResult m = kummer_M(a, b, z);
    const double log_pref = -0.5 * z + (nu + 0.5) * std::log(z);
    const SignedLog res = SignedLog::from_log(1, log_pref) * SignedLog::from_value(m.value);
    const double v = res.value();
    const double err = std::exp(log_pref) * m.abs_err_estimate + 1e-15 * std::abs(v);
    return {v, err + 1e-300};
}

inline FnEvalResult whittaker_W(double mu, double nu, double z) {
    if (z <= 0.0) throw DomainViolation("whittaker_W: z must be positive");
    if (z > 600.0 || std::abs(mu) > 200.0 || std::abs(nu) > 200.0)
        throw OutOfSupportedRange("whittaker_W: parameters outside supported range");
    const double nn = std::abs(nu); // W is symmetric in nu
    const double a = nn - mu + 0.5;
    const double b = 1.0 + 2.0 * nn;
    const detail::UScaled u = detail::kummer_U(a, b, z);
    const double log_pref = -0.5 * z + (nn + 0.5) * std::log(z);
    const SignedLog res = SignedLog::from_log(1, log_pref) * u.val;
    const double v = res.value();
    const double env = (u.log_envelope + log_pref > 709.0)
                           ? std::numeric_limits<double>::infinity()
                           : std::exp(u.log_envelope + log_pref);
    const double err = u.rel_err * std::abs(v) + 1e-15 * env + 1e-300;
    return {v, err};
}

} // namespace darboux
