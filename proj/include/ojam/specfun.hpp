#pragma once

namespace ojam::specfun {

/// Complete gamma function for x > 0. Throws std::domain_error otherwise.
double gamma(double x);

/// Lower incomplete gamma function, the integral of t^(a-1) e^(-t) over [0, x].
///
/// Uses the power series when x < a + 1 and the complement of the Lentz
/// continued fraction for the upper function otherwise. Both expansions stop
/// once the relative term size drops below 1e-15; failing to do so within
/// 500 iterations raises ojam::NumericalError.
double lower_incomplete_gamma(double a, double x);

} // namespace ojam::specfun
