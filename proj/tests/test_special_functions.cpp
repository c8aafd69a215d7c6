#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>

#include "darboux/special_functions.hpp"

using namespace darboux;

namespace {

// Independent oracle: D_nu(z) from the two-Kummer representation
//   D_nu(z) = 2^{nu/2} e^{-z^2/4} sqrt(pi) [ M(-nu/2, 1/2, z^2/2)/Gamma((1-nu)/2)
//             - sqrt(2) z M((1-nu)/2, 3/2, z^2/2)/Gamma(-nu/2) ]
// summed in long double.  Only used at small |z| where the series is benign.
long double kummer_series_ld(long double a, long double b, long double z) {
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 500; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum)) break;
    }
    return sum;
}

long double pcf_D_oracle(long double nu, long double z) {
    const long double h = z * z / 2.0L;
    const long double t1 =
        kummer_series_ld(-nu / 2.0L, 0.5L, h) / std::tgammal((1.0L - nu) / 2.0L);
    const long double t2 = std::sqrt(2.0L) * z *
                           kummer_series_ld((1.0L - nu) / 2.0L, 1.5L, h) /
                           std::tgammal(-nu / 2.0L);
    return std::pow(2.0L, nu / 2.0L) * std::exp(-z * z / 4.0L) *
           std::sqrt((long double)M_PI) * (t1 - t2);
}

// Independent oracle for Whittaker M in long double.
long double whittaker_M_oracle(long double mu, long double nu, long double z) {
    return std::exp(-z / 2.0L) * std::pow(z, nu + 0.5L) *
           kummer_series_ld(nu - mu + 0.5L, 1.0L + 2.0L * nu, z);
}

double fd_second(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
           (12 * h * h);
}

double fd_first(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

} // namespace

TEST_CASE("parabolic cylinder: closed-form anchors") {
    // D_0(z) = exp(-z^2/4)
    auto r = parabolic_cylinder_D(0.0, 1.0);
    CHECK(r.value == Catch::Approx(std::exp(-0.25)).epsilon(1e-12));
    CHECK(r.abs_err_estimate <= 1e-10 * (1.0 + std::abs(r.value)));

    // D_1(z) = z exp(-z^2/4)
    auto r10 = parabolic_cylinder_D(1.0, 0.0);
    CHECK(std::abs(r10.value) <= 1e-12);
    auto r1 = parabolic_cylinder_D(1.0, 0.7);
    CHECK(r1.value == Catch::Approx(0.7 * std::exp(-0.49 / 4.0)).epsilon(1e-12));

    // D_{-1}(z) = exp(z^2/4) sqrt(pi/2) erfc(z/sqrt(2))
    for (double z : {-2.0, -0.3, 0.0, 1.1, 3.5}) {
        auto rm = parabolic_cylinder_D(-1.0, z);
        const double ref =
            std::exp(z * z / 4.0) * std::sqrt(M_PI / 2.0) * std::erfc(z / std::sqrt(2.0));
        CHECK(rm.value == Catch::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("parabolic cylinder: integer orders against Hermite reduction") {
    // D_n(z) = 2^{-n/2} exp(-z^2/4) H_n(z/sqrt(2))
    for (int n = 0; n <= 6; ++n) {
        for (double z : {-3.0, -1.0, 0.4, 2.0, 5.0}) {
            auto r = parabolic_cylinder_D(n, z);
            const double ref = std::pow(2.0, -0.5 * n) * std::exp(-z * z / 4.0) *
                               hermite(n, z / std::sqrt(2.0));
            CHECK(r.value == Catch::Approx(ref).margin(1e-11 * (1.0 + std::abs(ref))));
        }
    }
}

TEST_CASE("parabolic cylinder: fractional order against series oracle") {
    auto r = parabolic_cylinder_D(2.5, 1.3);
    const double ref = (double)pcf_D_oracle(2.5L, 1.3L);
    CHECK(r.value == Catch::Approx(ref).epsilon(1e-11));
    CHECK(r.abs_err_estimate <= 1e-10 * (1.0 + std::abs(r.value)));

    // a few more fractional orders, both signs of z
    for (double nu : {-1.7, -0.5, 0.25, 3.75, 6.5}) {
        for (double z : {-2.2, -0.6, 0.9, 2.8}) {
            auto rr = parabolic_cylinder_D(nu, z);
            const double rref = (double)pcf_D_oracle((long double)nu, (long double)z);
            CHECK(rr.value == Catch::Approx(rref).margin(1e-10 * (1.0 + std::abs(rref))));
        }
    }
}

TEST_CASE("parabolic cylinder: error estimate honest at anchors") {
    for (double nu : {-1.3, 0.0, 1.0, 2.5, 7.25}) {
        for (double z : {-1.5, 0.3, 2.0}) {
            auto r = parabolic_cylinder_D(nu, z);
            const double ref = (double)pcf_D_oracle((long double)nu, (long double)z);
            CHECK(std::abs(r.value - ref) <=
                  std::max(r.abs_err_estimate, 1e-13 * (1.0 + std::abs(ref))));
            CHECK(r.abs_err_estimate <= 1e-10 * (1.0 + std::abs(r.value)));
        }
    }
}

TEST_CASE("parabolic cylinder: recurrence identity at 500 random points") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist_nu(-199.0, 199.0);
    std::uniform_real_distribution<double> dist_z(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double nu = dist_nu(rng);
        const double z = dist_z(rng);
        const SignedLog dm = parabolic_cylinder_D_scaled(nu - 1.0, z);
        const SignedLog d0 = parabolic_cylinder_D_scaled(nu, z);
        const SignedLog dp = parabolic_cylinder_D_scaled(nu + 1.0, z);
        const SignedLog res =
            dp - SignedLog::from_value(z) * d0 + SignedLog::from_value(nu) * dm;
        double mx = -std::numeric_limits<double>::infinity();
        for (const SignedLog* t : {&dm, &d0, &dp})
            if (t->sign != 0) mx = std::max(mx, t->log_abs);
        if (res.sign == 0) continue; // exact cancellation
        const double rel = std::exp(res.log_abs - mx);
        INFO("nu=" << nu << " z=" << z << " rel=" << rel);
        CHECK(rel <= 1e-9);
    }
}

TEST_CASE("parabolic cylinder: supported range enforced") {
    CHECK_THROWS_AS(parabolic_cylinder_D(201.0, 1.0), OutOfSupportedRange);
    CHECK_THROWS_AS(parabolic_cylinder_D(1.0, 50.5), OutOfSupportedRange);
}

TEST_CASE("whittaker: trivial reductions") {
    // M_{nu+1/2, nu}(z) = z^{nu+1/2} e^{-z/2}
    for (double nu : {0.0, 0.3, 1.5}) {
        for (double z : {0.1, 1.0, 4.0}) {
            auto m = whittaker_M(nu + 0.5, nu, z);
            const double ref = std::pow(z, nu + 0.5) * std::exp(-z / 2.0);
            CHECK(m.value == Catch::Approx(ref).epsilon(1e-12));
        }
    }
    // W_{0,1/2}(z) = e^{-z/2}
    for (double z : {0.4, 1.0, 3.0, 12.0}) {
        auto w = whittaker_W(0.0, 0.5, z);
        CHECK(w.value == Catch::Approx(std::exp(-z / 2.0)).epsilon(1e-11));
    }
}

TEST_CASE("whittaker: M against extended-precision Kummer oracle") {
    auto m = whittaker_M(1.2, 0.7, 0.9);
    const double ref = (double)whittaker_M_oracle(1.2L, 0.7L, 0.9L);
    CHECK(m.value == Catch::Approx(ref).epsilon(1e-12));
    CHECK(std::abs(m.value - ref) <= std::max(m.abs_err_estimate, 1e-13 * std::abs(ref)));
}

TEST_CASE("whittaker: M pole and domain errors") {
    CHECK_THROWS_AS(whittaker_M(0.2, -0.5, 1.0), PoleOfM);
    CHECK_THROWS_AS(whittaker_M(0.2, -1.0, 1.0), PoleOfM);
    CHECK_THROWS_AS(whittaker_M(0.2, 0.5, -1.0), DomainViolation);
    CHECK_THROWS_AS(whittaker_W(0.2, 0.5, 0.0), DomainViolation);
}

TEST_CASE("whittaker: ODE residual under finite differences") {
    // W'' = (1/4 - mu/z + (nu^2 - 1/4)/z^2) W, same for M
    std::mt19937 rng(901);
    std::uniform_real_distribution<double> dist_mu(-2.0, 3.0);
    std::uniform_real_distribution<double> dist_nu(0.1, 2.5);
    std::uniform_real_distribution<double> dist_z(0.8, 15.0);
    for (int i = 0; i < 60; ++i) {
        const double mu = dist_mu(rng);
        const double nu = dist_nu(rng);
        const double z = dist_z(rng);
        const double q = 0.25 - mu / z + (nu * nu - 0.25) / (z * z);
        const double h = 3e-3 * std::max(1.0, z / 4.0);

        auto fm = [&](double x) { return whittaker_M(mu, nu, x).value; };
        const double m0 = fm(z);
        const double rm = fd_second(fm, z, h) - q * m0;
        CHECK(std::abs(rm) <= 1e-8 * (1.0 + std::abs(q * m0)));

        auto fw = [&](double x) { return whittaker_W(mu, nu, x).value; };
        const double w0 = fw(z);
        const double rw = fd_second(fw, z, h) - q * w0;
        CHECK(std::abs(rw) <= 1e-8 * (1.0 + std::abs(q * w0)));
    }
}

TEST_CASE("whittaker: bound-state Laguerre collapse") {
    // M_{n+mu+1/2, mu}(z) = n! Gamma(2mu+1)/Gamma(n+2mu+1) e^{-z/2} z^{mu+1/2} L_n^{(2mu)}(z)
    // W_{n+mu+1/2, mu}(z) = (-1)^n n! e^{-z/2} z^{mu+1/2} L_n^{(2mu)}(z)
    for (int n = 0; n <= 3; ++n) {
        for (double mu : {0.35, 0.7, 1.25}) {
            for (double z : {0.5, 2.0, 7.0}) {
                const double lag = laguerre(n, 2.0 * mu, z);
                const double base = std::exp(-z / 2.0) * std::pow(z, mu + 0.5) * lag;
                const double fac_m = std::exp(log_gamma(n + 1.0) + log_gamma(2.0 * mu + 1.0) -
                                              log_gamma(n + 2.0 * mu + 1.0));
                const double ref_m = fac_m * base;
                const double ref_w = ((n % 2) ? -1.0 : 1.0) * std::exp(log_gamma(n + 1.0)) * base;
                auto m = whittaker_M(n + mu + 0.5, mu, z);
                auto w = whittaker_W(n + mu + 0.5, mu, z);
                CHECK(m.value == Catch::Approx(ref_m).margin(1e-8 * (1.0 + std::abs(ref_m))));
                CHECK(w.value == Catch::Approx(ref_w).margin(1e-8 * (1.0 + std::abs(ref_w))));
            }
        }
    }
}

TEST_CASE("polynomials: anchors") {
    CHECK(laguerre(0, 0.7, 2.3) == 1.0);
    CHECK(laguerre(1, 0.5, 2.0) == Catch::Approx(-0.5).epsilon(1e-14));
    CHECK(hermite(2, 1.0) == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(jacobi(1, 0.0, 0.0, 0.5) == Catch::Approx(0.5).epsilon(1e-14));
    // P_2^{(0,0)} = Legendre: (3x^2-1)/2
    CHECK(jacobi(2, 0.0, 0.0, 0.3) == Catch::Approx(0.5 * (3 * 0.09 - 1)).epsilon(1e-13));
}

TEST_CASE("polynomials: Laguerre orthogonality by quadrature") {
    for (double lambda : {0.5, 2.0}) {
        for (int m = 0; m <= 8; ++m) {
            for (int n = m; n <= 8; ++n) {
                auto f = [&](double z) {
                    return std::exp(-z) * std::pow(z, lambda) * laguerre(m, lambda, z) *
                           laguerre(n, lambda, z);
                };
                const double I = integrate_adaptive(f, 1e-12, 120.0, 1e-12);
                const double hm = std::exp(log_gamma(m + lambda + 1.0) - log_gamma(m + 1.0));
                const double hn = std::exp(log_gamma(n + lambda + 1.0) - log_gamma(n + 1.0));
                if (m == n)
                    CHECK(I == Catch::Approx(hn).epsilon(1e-8));
                else
                    CHECK(std::abs(I) / std::sqrt(hm * hn) <= 1e-8);
            }
        }
    }
}

TEST_CASE("bessel and airy: anchors") {
    auto ai0 = airy_Ai(0.0);
    CHECK(ai0.value == Catch::Approx(0.355028053887817).epsilon(1e-12));

    auto i_half = bessel_I(0.5, 1.0);
    CHECK(i_half.value == Catch::Approx(std::sqrt(2.0 / M_PI) * std::sinh(1.0)).epsilon(1e-12));

    // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
    for (double z : {0.3, 1.0, 5.0, 20.0}) {
        auto k = bessel_K(0.5, z);
        CHECK(k.value == Catch::Approx(std::sqrt(M_PI / (2.0 * z)) * std::exp(-z)).epsilon(1e-11));
    }

    // I_{1/2} closed form across a range
    for (double z : {0.2, 2.0, 8.0}) {
        auto i = bessel_I(0.5, z);
        CHECK(i.value == Catch::Approx(std::sqrt(2.0 / (M_PI * z)) * std::sinh(z)).epsilon(1e-11));
    }
}

TEST_CASE("bessel K vs airy identity") {
    // K_{1/3}(z) = pi sqrt(3/zt) Ai(zt), zt = (3z/2)^{2/3}
    for (int i = 0; i <= 30; ++i) {
        const double z = 0.1 * std::pow(100.0, i / 30.0); // log-spaced on [0.1, 10]
        const double zt = std::pow(1.5 * z, 2.0 / 3.0);
        const double k = bessel_K(1.0 / 3.0, z).value;
        const double ref = M_PI * std::sqrt(3.0 / zt) * airy_Ai(zt).value;
        INFO("z=" << z);
        CHECK(k == Catch::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("bessel: imaginary order basics") {
    // K_{i0} coincides with K_0
    for (double z : {0.5, 2.0, 7.0}) {
        const double k0 = bessel_K(0.0, z).value;
        const double ki = bessel_K_imag_order(0.0, z).value;
        CHECK(ki == Catch::Approx(k0).epsilon(1e-11));
    }
    // even in p
    CHECK(bessel_K_imag_order(1.3, 2.0).value ==
          Catch::Approx(bessel_K_imag_order(-1.3, 2.0).value).epsilon(1e-13));
    // K_{ip}(z) solves z^2 f'' + z f' - (z^2 - p^2) f = 0
    for (double p : {0.7, 2.2}) {
        for (double z : {1.0, 3.0}) {
            auto f = [&](double x) { return bessel_K_imag_order(p, x).value; };
            const double h = 1e-2; // wide enough that quadrature noise / h^2 stays small
            const double d2 = fd_second(f, z, h);
            const double d1 = fd_first(f, z, h);
            const double resid = z * z * d2 + z * d1 - (z * z - p * p) * f(z);
            CHECK(std::abs(resid) <= 1e-7 * (1.0 + std::abs(z * z * f(z))));
        }
    }
}

TEST_CASE("bessel/airy: domain errors") {
    CHECK_THROWS_AS(bessel_K(0.5, -1.0), DomainViolation);
    CHECK_THROWS_AS(bessel_K_imag_order(1.0, 0.0), DomainViolation);
    CHECK_THROWS_AS(airy_Ai(-0.5), OutOfSupportedRange);
    CHECK_THROWS_AS(bessel_I(0.5, -2.0), DomainViolation);
}

TEST_CASE("oscillator wavefunctions: anchors and norms") {
    CHECK(psi_HO(0, 0.0, 1.0) == Catch::Approx(std::pow(M_PI, -0.25)).epsilon(1e-12));

    for (int n = 0; n <= 10; ++n) {
        auto f = [&](double x) {
            const double p = psi_HO(n, x, 1.0);
            return p * p;
        };
        const double I = integrate_adaptive(f, -12.0, 12.0, 1e-11);
        INFO("n=" << n);
        CHECK(std::abs(I - 1.0) <= 1e-8);
    }

    for (double lambda : {0.5, 1.0, 2.5}) {
        for (int n = 0; n <= 10; ++n) {
            auto f = [&](double r) {
                const double p = psi_RHO(n, lambda, r, 1.0);
                return p * p;
            };
            const double I = integrate_adaptive(f, 1e-10, 14.0, 1e-11);
            INFO("lambda=" << lambda << " n=" << n);
            CHECK(std::abs(I - 1.0) <= 1e-8);
        }
    }
}

TEST_CASE("oscillator wavefunctions: orthogonality spot checks") {
    auto f01 = [](double x) { return psi_HO(0, x, 1.0) * psi_HO(2, x, 1.0); };
    CHECK(std::abs(integrate_adaptive(f01, -12.0, 12.0, 1e-11)) <= 1e-9);
    auto g12 = [](double r) { return psi_RHO(1, 1.5, r, 1.0) * psi_RHO(2, 1.5, r, 1.0); };
    CHECK(std::abs(integrate_adaptive(g12, 1e-10, 14.0, 1e-11)) <= 1e-9);
}

TEST_CASE("trigonometric eigenfunctions: orthonormal on (0, pi/2)") {
    const double alpha = 1.3, beta = 0.7;
    for (int m = 0; m <= 4; ++m) {
        for (int n = m; n <= 4; ++n) {
            auto f = [&](double x) { return psi_PT(m, alpha, beta, x) * psi_PT(n, alpha, beta, x); };
            const double I = integrate_adaptive(f, 1e-9, M_PI / 2.0 - 1e-9, 1e-11);
            if (m == n)
                CHECK(I == Catch::Approx(1.0).epsilon(1e-8));
            else
                CHECK(std::abs(I) <= 1e-8);
        }
    }
}

TEST_CASE("gamma: reflection and anchors") {
    CHECK(gamma_fn(0.5) == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == Catch::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(-0.5) == Catch::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(gamma_fn(-1.5) == Catch::Approx(4.0 * std::sqrt(M_PI) / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(-2.0), DomainViolation);
}
