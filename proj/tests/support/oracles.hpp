#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library; the point is to check it by a different route.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "ojam/model.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

/// Adaptive Simpson quadrature of f over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-14) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

/// Lower incomplete gamma by quadrature after the substitution t = u^(1/a),
/// which removes the t^(a-1) factor: gamma(a, x) = (1/a) int_0^{x^a} exp(-u^(1/a)) du.
inline double lower_gamma(double a, double x) {
    if (x == 0.0) return 0.0;
    const double upper = std::pow(x, a);
    return integrate([a](double u) { return std::exp(-std::pow(u, 1.0 / a)); }, 0.0, upper,
                     1e-15 * upper) / a;
}

/// Gamma(x) for 0 < x < 1 from the reflection formula and a quadrature of Gamma(1 - x + 1).
inline double gamma_by_reflection(double x) {
    // Gamma(1 - x) = Gamma(2 - x) / (1 - x); Gamma(2 - x) has a smooth integrand.
    const double two_minus = 2.0 - x;
    const double g2 = lower_gamma(two_minus, 60.0);
    const double g1mx = g2 / (1.0 - x);
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * g1mx);
}

/// Maximal SINR threshold at Bob without noise: exponent K beta^rho = -ln(1 - sigma).
inline double beta_b_noiseless(double coefficient, double rho, double sigma) {
    return std::pow(-std::log1p(-sigma) / coefficient, 1.0 / rho);
}

/// Plain bisection on an increasing function, independent of the library's.
template <typename F>
double bisect_increasing(F f, double lo, double hi) {
    for (int i = 0; i < 400; ++i) {
        const double m = 0.5 * (lo + hi);
        if (f(m) < 0.0) lo = m;
        else hi = m;
    }
    return 0.5 * (lo + hi);
}

/// Reproducible random parameter draws covering the regimes the library targets.
class ParamDraws {
public:
    explicit ParamDraws(unsigned long long seed) : rng_(seed) {}

    ojam::SystemParams next() {
        const double p_s_dbm = uniform(10.0, 30.0);
        return ojam::SystemParams::make({
            .p_s = ojam::dbm_to_linear(p_s_dbm),
            .p_j = ojam::dbm_to_linear(p_s_dbm + uniform(0.0, 20.0)),
            .n0 = ojam::dbm_to_linear(uniform(-100.0, -60.0)),
            .d = uniform(0.5, 3.0),
            .alpha = uniform(2.5, 4.5),
            .lambda_j = log_uniform(0.01, 1.0),
            .lambda_e = log_uniform(1e-3, 0.1),
            .sigma = uniform(0.02, 0.3),
            .epsilon = uniform(0.005, 0.1),
        });
    }

private:
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    std::mt19937_64 rng_;
};

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    return g;
}

} // namespace oracle
