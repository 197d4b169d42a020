#include "ojam/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ojam/errors.hpp"

namespace ojam::specfun {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kRelTol = 1e-15;

// Prefactor x^a e^-x, evaluated in log space to survive large a or x.
double power_exp_factor(double a, double x) {
    return std::exp(a * std::log(x) - x);
}

// gamma(a, x) = x^a e^-x sum_{n>=0} x^n / (a (a+1) ... (a+n))
double series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < kMaxIterations; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kRelTol) {
            return sum * power_exp_factor(a, x);
        }
    }
    throw NumericalError("lower_incomplete_gamma: series did not converge for a=" +
                         std::to_string(a) + ", x=" + std::to_string(x));
}

// Upper incomplete gamma via the modified Lentz continued fraction.
double upper_continued_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kRelTol) {
            return h * power_exp_factor(a, x);
        }
    }
    throw NumericalError("lower_incomplete_gamma: continued fraction did not converge for a=" +
                         std::to_string(a) + ", x=" + std::to_string(x));
}

} // namespace

double gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("gamma: argument must be positive and finite");
    }
    return std::tgamma(x);
}

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("lower_incomplete_gamma: a must be positive and finite");
    }
    if (!(x >= 0.0) || std::isnan(x)) {
        throw std::domain_error("lower_incomplete_gamma: x must be nonnegative");
    }
    if (x == 0.0) return 0.0;
    const double full = gamma(a);
    if (std::isinf(x)) return full;
    if (x < a + 1.0) return series(a, x);
    const double upper = upper_continued_fraction(a, x);
    return full - upper;
}

} // namespace ojam::specfun
