#include "ojam/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ojam {

namespace {

// A derivative magnitude at the bisection root above this means the sign
// information was not trustworthy near the root.
constexpr double kStationarityTol = 1e-6;

// The rate gap R_t - R_e can turn back up where it is already negative (large
// delta, infeasible secrecy), so a bare endpoint sign test is not enough to
// bracket the maximum. A log grid this fine separates the two turning points.
constexpr int kScanPoints = 200;

void require_bracket(double lo, double hi) {
    if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(hi)) {
        throw std::domain_error("optimize_delta: require 0 < search_lo < search_hi < inf");
    }
}

double gap(const SystemParams& p, double delta) {
    const DesignPoint dp = throughput(p, delta);
    return dp.r_t - dp.r_e;
}

std::vector<double> log_grid(double lo, double hi) {
    std::vector<double> u(kScanPoints);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < kScanPoints; ++i) {
        u[i] = a + (b - a) * i / (kScanPoints - 1);
    }
    u.front() = a;
    u.back() = b;
    return u;
}

struct Candidate {
    double delta;
    int iterations;
    OptimizationMethod method;
};

// Picks the candidate with the largest throughput; ties go to the smaller
// threshold. If nothing is feasible the lower end of the interval wins.
OptimizationResult pick(const SystemParams& p, const std::vector<Candidate>& candidates,
                        double lo) {
    OptimizationResult best{lo, throughput(p, lo), 0, OptimizationMethod::Boundary};
    bool have = false;
    for (const Candidate& c : candidates) {
        const DesignPoint dp = throughput(p, c.delta);
        const bool better = !have || dp.mu > best.design.mu ||
                            (dp.mu == best.design.mu && c.delta < best.delta_star);
        if (better) {
            best = {c.delta, dp, c.iterations, c.method};
            have = true;
        }
    }
    if (best.design.mu == 0.0) {
        best = {lo, throughput(p, lo), best.iterations, OptimizationMethod::Boundary};
    }
    return best;
}

Candidate golden_between(const SystemParams& p, double u_lo, double u_hi) {
    auto objective = [&](double u) { return gap(p, std::exp(u)); };
    const GoldenResult g = golden_section_max(objective, u_lo, u_hi, 1e-13);
    return {std::exp(g.argmax), g.iterations, OptimizationMethod::GoldenSectionFallback};
}

} // namespace

std::string_view to_string(OptimizationMethod method) {
    switch (method) {
        case OptimizationMethod::DerivativeBisection: return "derivative-bisection";
        case OptimizationMethod::GoldenSectionFallback: return "golden-section-fallback";
        case OptimizationMethod::Boundary: return "boundary";
    }
    return "unknown";
}

OptimizationResult golden_section_delta(const SystemParams& p, double lo, double hi) {
    require_bracket(lo, hi);
    const std::vector<double> u = log_grid(lo, hi);
    int k = 0;
    double best = -INFINITY;
    for (int i = 0; i < kScanPoints; ++i) {
        const double g = gap(p, std::exp(u[i]));
        if (g > best) {
            best = g;
            k = i;
        }
    }
    std::vector<Candidate> candidates{{lo, 0, OptimizationMethod::Boundary},
                                      {hi, 0, OptimizationMethod::Boundary}};
    const int left = k > 0 ? k - 1 : 0;
    const int right = k < kScanPoints - 1 ? k + 1 : kScanPoints - 1;
    candidates.push_back(golden_between(p, u[left], u[right]));
    return pick(p, candidates, lo);
}

OptimizationResult optimize_delta(const SystemParams& p, double lo, double hi) {
    require_bracket(lo, hi);
    auto slope = [&](double u) { return throughput_derivative(p, std::exp(u)); };
    const std::vector<double> u = log_grid(lo, hi);
    std::vector<double> s(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) s[i] = slope(u[i]);

    std::vector<Candidate> candidates;
    if (!(s.front() > 0.0)) candidates.push_back({lo, 0, OptimizationMethod::Boundary});
    if (!(s.back() < 0.0)) candidates.push_back({hi, 0, OptimizationMethod::Boundary});
    for (int i = 0; i + 1 < kScanPoints; ++i) {
        if (!(s[i] > 0.0 && s[i + 1] <= 0.0)) continue;
        if (s[i + 1] == 0.0) {
            candidates.push_back({std::exp(u[i + 1]), 0, OptimizationMethod::DerivativeBisection});
            continue;
        }
        const BisectionResult b = bisect(slope, u[i], u[i + 1], 1e-15);
        const double delta = std::exp(b.root);
        if (std::abs(throughput_derivative(p, delta)) < kStationarityTol) {
            candidates.push_back({delta, b.iterations, OptimizationMethod::DerivativeBisection});
        } else {
            candidates.push_back(golden_between(p, u[i], u[i + 1]));
        }
    }
    if (candidates.empty()) {
        // Only reachable with NaN slopes; fall back to values alone.
        return golden_section_delta(p, lo, hi);
    }
    return pick(p, candidates, lo);
}

} // namespace ojam
