#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "darboux/errors.hpp"

// Independent eigenvalue oracles for the separated one-dimensional problems:
// a three-point finite-difference matrix solver (Sturm bisection plus
// Richardson extrapolation over two grids) and a Numerov shooting solver as a
// structurally different cross-check.  A self-consistent driver handles the
// problems whose effective potential depends on the total energy.

namespace darboux {

struct SturmLiouvilleProblem {
    enum class BC { Dirichlet, RegularSingular, DecayAtInfinity };

    std::function<double(double)> effective_potential;
    double x_lo = 0.0;
    double x_hi = 1.0;
    BC bc_lo = BC::Dirichlet;
    BC bc_hi = BC::DecayAtInfinity;
    // Singular indices lambda for psi ~ (x - x_lo)^(lambda + 1/2) at a
    // RegularSingular endpoint (and mirrored at x_hi).
    double index_lo = 0.5;
    double index_hi = 0.5;
    int grid_n = 2000;
    double hbar = 1.0;
    double mass = 1.0;

    void validate() const {
        if (!effective_potential)
            throw ConfigError("effective potential must be set");
        if (!(x_lo < x_hi))
            throw ConfigError("domain must satisfy x_lo < x_hi");
        if (grid_n < 100) throw ConfigError("grid_n must be >= 100");
        if (!(hbar > 0.0) || !(mass > 0.0))
            throw ConfigError("hbar and mass must be > 0");
    }
};

struct OracleSpectrum {
    std::vector<double> eigenvalues;  // sorted ascending
    std::vector<int> node_counts;     // strictly increasing, starting at 0
    double grid_convergence = 0.0;    // Richardson error estimate
};

namespace detail {

// Assembles the symmetric tridiagonal FD Hamiltonian on n subintervals
// (n - 1 interior nodes).  At a RegularSingular endpoint the coefficient of
// the leading 1/x^2 behavior in the first interior node is replaced by the
// value that annihilates the exact power solution x^(lambda+1/2) on the
// stencil, which restores second-order convergence there.
inline void assemble_fd(const SturmLiouvilleProblem& p, int n,
                        std::vector<double>& diag, std::vector<double>& off) {
    const int m = n - 1;
    const double h = (p.x_hi - p.x_lo) / n;
    const double t = p.hbar * p.hbar / (2.0 * p.mass * h * h);
    diag.assign(m, 0.0);
    off.assign(m - 1, -t);
    for (int i = 0; i < m; ++i) {
        const double x = p.x_lo + (i + 1) * h;
        diag[i] = 2.0 * t + p.effective_potential(x);
    }
    if (p.bc_lo == SturmLiouvilleProblem::BC::RegularSingular) {
        const double lam = p.index_lo, s = lam + 0.5;
        diag[0] += t * ((std::pow(2.0, s) - 2.0) - (lam * lam - 0.25));
    }
    if (p.bc_hi == SturmLiouvilleProblem::BC::RegularSingular) {
        const double lam = p.index_hi, s = lam + 0.5;
        diag[m - 1] += t * ((std::pow(2.0, s) - 2.0) - (lam * lam - 0.25));
    }
}

// Number of eigenvalues of the tridiagonal matrix strictly below sigma
// (Sturm sequence via the LDL^T pivots).
inline int count_below(const std::vector<double>& d,
                       const std::vector<double>& e, double sigma) {
    const double tiny = 1e-300;
    int count = 0;
    double piv = d[0] - sigma;
    if (piv == 0.0) piv = -tiny;
    if (piv < 0.0) ++count;
    for (size_t i = 1; i < d.size(); ++i) {
        piv = d[i] - sigma - e[i - 1] * e[i - 1] / piv;
        if (piv == 0.0) piv = -tiny;
        if (piv < 0.0) ++count;
    }
    return count;
}

inline std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                              const std::vector<double>& e,
                                              int k) {
    double lo = d[0], hi = d[0], emax = 0.0;
    for (double x : e) emax = std::max(emax, std::abs(x));
    for (double x : d) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    lo -= 2.0 * emax + 1.0;
    hi += 2.0 * emax + 1.0;
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a) +
                                                      std::abs(b));
             ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(d, e, mid) >= j + 1)
                b = mid;
            else
                a = mid;
        }
        out[j] = 0.5 * (a + b);
    }
    return out;
}

// Inverse iteration for the eigenvector at eigenvalue E (tridiagonal solve
// with partial pivoting).
inline std::vector<double> fd_eigenvector(const std::vector<double>& d,
                                          const std::vector<double>& e,
                                          double E) {
    const int m = static_cast<int>(d.size());
    double scale = 1.0;
    for (double x : d) scale = std::max(scale, std::abs(x));
    const double shift = E + 1e-13 * scale;
    std::vector<double> v(m, 1.0 / std::sqrt(double(m)));
    // Gaussian elimination with partial pivoting on [sub, diag, super, extra].
    for (int iter = 0; iter < 3; ++iter) {
        std::vector<double> a(m), b(m), c(m, 0.0), f(m, 0.0);
        for (int i = 0; i < m; ++i) a[i] = d[i] - shift;
        for (int i = 0; i + 1 < m; ++i) b[i] = e[i];
        std::vector<double> rhs = v;
        for (int i = 0; i + 1 < m; ++i) {
            double sub = e[i];
            if (std::abs(sub) > std::abs(a[i])) {
                std::swap(a[i], sub);
                double t1 = b[i];
                b[i] = a[i + 1];
                a[i + 1] = t1;
                c[i] = b[i + 1];
                b[i + 1] = 0.0;
                std::swap(rhs[i], rhs[i + 1]);
                // note: c[i] only meaningful when i + 2 < m
            }
            if (a[i] == 0.0) a[i] = 1e-300;
            const double l = sub / a[i];
            a[i + 1] -= l * b[i];
            if (i + 2 < m) b[i + 1] -= l * c[i];
            rhs[i + 1] -= l * rhs[i];
            f[i] = l;
        }
        if (a[m - 1] == 0.0) a[m - 1] = 1e-300;
        std::vector<double> x(m);
        x[m - 1] = rhs[m - 1] / a[m - 1];
        if (m > 1)
            x[m - 2] = (rhs[m - 2] - b[m - 2] * x[m - 1]) / a[m - 2];
        for (int i = m - 3; i >= 0; --i)
            x[i] = (rhs[i] - b[i] * x[i + 1] - c[i] * x[i + 2]) / a[i];
        double nrm = 0.0;
        for (double t1 : x) nrm += t1 * t1;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
        for (int i = 0; i < m; ++i) v[i] = x[i] / nrm;
    }
    return v;
}

inline int sign_changes(const std::vector<double>& v) {
    // ignore numerically-dead entries when counting nodes
    double amax = 0.0;
    for (double x : v) amax = std::max(amax, std::abs(x));
    const double floor_ = 1e-9 * amax;
    int count = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) <= floor_) continue;
        if (prev != 0.0 && x * prev < 0.0) ++count;
        prev = x;
    }
    return count;
}

} // namespace detail

inline OracleSpectrum fd_eigen(const SturmLiouvilleProblem& p, int k) {
    p.validate();
    if (k < 1) throw ConfigError("at least one eigenvalue must be requested");

    std::vector<double> d1, e1, d2, e2;
    detail::assemble_fd(p, p.grid_n, d1, e1);
    detail::assemble_fd(p, 2 * p.grid_n, d2, e2);
    const auto coarse = detail::lowest_eigenvalues(d1, e1, k);
    const auto fine = detail::lowest_eigenvalues(d2, e2, k);

    OracleSpectrum out;
    out.eigenvalues.resize(k);
    out.node_counts.resize(k);
    for (int j = 0; j < k; ++j) {
        out.eigenvalues[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
        out.grid_convergence = std::max(out.grid_convergence,
                                        std::abs(fine[j] - coarse[j]) / 3.0);
    }

    const int m = static_cast<int>(d2.size());
    for (int j = 0; j < k; ++j) {
        const auto v = detail::fd_eigenvector(d2, e2, fine[j]);
        out.node_counts[j] = detail::sign_changes(v);
        double tail_lo = 0.0, tail_hi = 0.0, nrm = 0.0;
        for (int i = 0; i < m; ++i) nrm += v[i] * v[i];
        for (int i = 0; i < 3 && i < m; ++i) {
            tail_lo += v[i] * v[i];
            tail_hi += v[m - 1 - i] * v[m - 1 - i];
        }
        if (p.bc_hi == SturmLiouvilleProblem::BC::DecayAtInfinity &&
            tail_hi / nrm > 1e-8)
            throw TruncationTooSmall(
                "eigenfunction mass at the upper truncation exceeds 1e-8");
        if (p.bc_lo == SturmLiouvilleProblem::BC::DecayAtInfinity &&
            tail_lo / nrm > 1e-8)
            throw TruncationTooSmall(
                "eigenfunction mass at the lower truncation exceeds 1e-8");
    }
    return out;
}

namespace detail {

// Numerov sweep at energy E: returns the node count on the open interval,
// which by Sturm oscillation equals the number of eigenvalues below E.
inline int numerov_nodes(const SturmLiouvilleProblem& p, double E) {
    const int n = 2 * p.grid_n;
    const double h = (p.x_hi - p.x_lo) / n;
    const double pref = 2.0 * p.mass / (p.hbar * p.hbar);
    auto f = [&](int i) {
        const double x = p.x_lo + i * h;
        return pref * (p.effective_potential(x) - E);
    };
    double psi0 = 0.0, psi1;
    if (p.bc_lo == SturmLiouvilleProblem::BC::RegularSingular)
        psi1 = std::pow(h, p.index_lo + 0.5);
    else
        psi1 = h;
    int nodes = 0;
    double w0 = psi0 * (1.0 - h * h * 0.0 / 12.0);
    double w1 = psi1 * (1.0 - h * h * f(1) / 12.0);
    double prev_sign = 0.0;
    for (int i = 1; i < n; ++i) {
        const double fi = f(i);
        const double psi = w1 / (1.0 - h * h * fi / 12.0);
        if (psi != 0.0) {
            if (prev_sign != 0.0 && psi * prev_sign < 0.0) ++nodes;
            prev_sign = psi > 0.0 ? 1.0 : -1.0;
        }
        const double w2 = 2.0 * w1 - w0 + h * h * fi * psi;
        w0 = w1;
        w1 = w2;
        if (std::abs(w1) > 1e200) {
            w0 *= 1e-200;
            w1 *= 1e-200;
        }
    }
    return nodes;
}

} // namespace detail

// Shooting cross-check: bisects each eigenvalue on the integer node-count
// predicate of the Numerov sweep.
inline OracleSpectrum numerov_eigen(const SturmLiouvilleProblem& p, int k) {
    p.validate();
    if (k < 1) throw ConfigError("at least one eigenvalue must be requested");

    // locate a window containing at least k eigenvalues
    double vmin = std::numeric_limits<double>::infinity();
    const int n = p.grid_n;
    const double h = (p.x_hi - p.x_lo) / n;
    for (int i = 1; i < n; ++i)
        vmin = std::min(vmin, p.effective_potential(p.x_lo + i * h));
    double lo = vmin - 1.0;
    double span = 10.0;
    while (detail::numerov_nodes(p, lo + span) < k) {
        span *= 2.0;
        if (span > 1e12) throw NonConvergence("no such level below V + 1e12");
    }

    OracleSpectrum out;
    out.eigenvalues.resize(k);
    out.node_counts.resize(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = lo + span;
        for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a) +
                                                      std::abs(b));
             ++it) {
            const double mid = 0.5 * (a + b);
            if (detail::numerov_nodes(p, mid) >= j + 1)
                b = mid;
            else
                a = mid;
        }
        out.eigenvalues[j] = 0.5 * (a + b);
        out.node_counts[j] = j;
    }
    return out;
}

// Root solver for energy-dependent separated problems: finds E in the window
// where quant_rule(mu_level(E), E) = 0, mu_level(E) being the level-th
// FD eigenvalue of family(E).  Window points where the family itself is
// undefined (imaginary index regions) are skipped during the scan.
inline std::vector<double> selfconsistent_eigen(
    const std::function<SturmLiouvilleProblem(double)>& family, int level,
    const std::function<double(double, double)>& quant_rule, double E_lo,
    double E_hi, int scan_n = 64, double tol = 1e-11) {
    if (!(E_lo < E_hi)) throw ConfigError("window must satisfy E_lo < E_hi");
    if (scan_n < 2) throw ConfigError("scan_n must be >= 2");

    auto residual = [&](double E) -> double {
        const auto prob = family(E);
        const auto spec = fd_eigen(prob, level + 1);
        return quant_rule(spec.eigenvalues[level], E);
    };

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> Es(scan_n + 1), rs(scan_n + 1);
    for (int i = 0; i <= scan_n; ++i) {
        Es[i] = E_lo + (E_hi - E_lo) * i / scan_n;
        try {
            rs[i] = residual(Es[i]);
        } catch (const Error&) {
            rs[i] = nan;
        }
    }

    std::vector<double> roots;
    for (int i = 0; i < scan_n; ++i) {
        if (!std::isfinite(rs[i]) || !std::isfinite(rs[i + 1])) continue;
        if (rs[i] == 0.0) {
            roots.push_back(Es[i]);
            continue;
        }
        if (rs[i] * rs[i + 1] > 0.0) continue;
        double a = Es[i], b = Es[i + 1], ra = rs[i];
        try {
            for (int it = 0; it < 200 && b - a > tol * (1.0 + std::abs(a) +
                                                        std::abs(b));
                 ++it) {
                const double mid = 0.5 * (a + b);
                const double rm = residual(mid);
                if (rm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (ra * rm < 0.0)
                    b = mid;
                else {
                    a = mid;
                    ra = rm;
                }
            }
        } catch (const Error&) {
            throw NonConvergence(
                "residual became undefined inside a bracketing interval");
        }
        roots.push_back(0.5 * (a + b));
    }
    if (roots.empty())
        throw NoRootsInWindow("no self-consistent root in the given window");
    return roots;
}

} // namespace darboux
