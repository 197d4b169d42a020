#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "ojam/errors.hpp"

namespace ojam {

struct BisectionResult {
    double root;
    int iterations;
};

/// Bisection on the sign of f over [lo, hi].
///
/// Requires f(lo) * f(hi) <= 0 and lo < hi. Halves the bracket until its width
/// is at most tol or the midpoint no longer separates the endpoints in
/// floating point, then returns the midpoint of the final bracket.
template <typename F>
BisectionResult bisect(F&& f, double lo, double hi, double tol) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::domain_error("bisect: require finite lo < hi");
    }
    if (!(tol > 0.0)) throw std::domain_error("bisect: tolerance must be positive");
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
        throw NumericalError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    }
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        ++iterations;
        if (f_mid == 0.0) return {mid, iterations};
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return {lo + 0.5 * (hi - lo), iterations};
}

template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol) {
    return bisect(std::forward<F>(f), lo, hi, tol).root;
}

struct GoldenResult {
    double argmax;
    double value;
    int iterations;
};

/// Golden-section maximization of a unimodal f on [lo, hi].
template <typename F>
GoldenResult golden_section_max(F&& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::domain_error("golden_section_max: require lo < hi");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    int iterations = 0;
    while (hi - lo > tol && iterations < 1000) {
        ++iterations;
        // Ties keep the left part so flat optima resolve to the smallest argument.
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            if (x1 <= lo || x1 >= x2) break;
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            if (x2 >= hi || x2 <= x1) break;
            f2 = f(x2);
        }
    }
    return f1 >= f2 ? GoldenResult{x1, f1, iterations} : GoldenResult{x2, f2, iterations};
}

} // namespace ojam
