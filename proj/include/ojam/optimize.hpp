#pragma once

#include <string_view>

#include "ojam/analytic.hpp"
#include "ojam/model.hpp"
#include "ojam/roots.hpp"

namespace ojam {

enum class OptimizationMethod {
    DerivativeBisection,   ///< sign change of d(R_t - R_e)/d delta located by bisection
    GoldenSectionFallback, ///< derivative unusable; golden section on R_t - R_e
    Boundary,              ///< no interior stationary point; best endpoint returned
};

std::string_view to_string(OptimizationMethod method);

struct OptimizationResult {
    double delta_star;
    DesignPoint design;
    int iterations;
    OptimizationMethod method;
};

/// Default threshold search interval.
inline constexpr double kDefaultSearchLo = 1e-9;
inline constexpr double kDefaultSearchHi = 20.0;

/// Maximizes the secrecy throughput over the selection threshold on
/// [search_lo, search_hi]. Bisection runs on ln(delta) so thresholds spanning
/// many decades are resolved to relative machine precision.
OptimizationResult optimize_delta(const SystemParams& params,
                                  double search_lo = kDefaultSearchLo,
                                  double search_hi = kDefaultSearchHi);

/// Derivative-free maximization of R_t - R_e by golden section on ln(delta).
/// Used as the fallback inside optimize_delta and as a cross-check.
OptimizationResult golden_section_delta(const SystemParams& params,
                                        double search_lo = kDefaultSearchLo,
                                        double search_hi = kDefaultSearchHi);

} // namespace ojam
