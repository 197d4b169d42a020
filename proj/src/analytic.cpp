#include "ojam/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ojam/errors.hpp"
#include "ojam/roots.hpp"
#include "ojam/specfun.hpp"

namespace ojam {

namespace {

void require_delta(double delta) {
    if (!(delta > 0.0)) throw std::domain_error("selection threshold delta must be positive");
}

void require_rho(double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("rho must lie in (0, 1)");
}

double bits(double linear_gain) { return std::log1p(linear_gain) / std::numbers::ln2; }

// Exponent of the connection outage: b beta + a m beta^rho, where m is the
// active-jammer moment (gamma(rho + 1, delta) for threshold selection).
double connection_exponent(const DerivedConstants& k, const SelectionStats& s, double beta) {
    return k.b * beta + k.a * s.bob_moment * std::pow(beta, k.rho);
}

// Exponent of the secrecy outage at beta_e.
double secrecy_exponent(const SystemParams& p, double rho, const SelectionStats& s, double beta) {
    const double gammas = specfun::gamma(1.0 + rho) * specfun::gamma(1.0 - rho);
    return p.lambda_e() /
           (std::pow(p.p_j() * beta / p.p_s(), rho) * p.lambda_j() * s.retention * gammas);
}

DesignPoint compose(const SystemParams& p, const SelectionStats& s, double delta) {
    DesignPoint dp{};
    dp.delta = delta;
    dp.beta_b = beta_b_star(p, s);
    dp.beta_e = beta_e_star(p, s);
    dp.r_t = bits(dp.beta_b);
    dp.r_e = bits(dp.beta_e);
    const double gap = dp.r_t - dp.r_e;
    dp.mu = gap > 0.0 ? gap * (1.0 - p.sigma()) : 0.0;
    return dp;
}

} // namespace

SelectionStats threshold_selection(double delta, double rho) {
    require_delta(delta);
    require_rho(rho);
    return {specfun::lower_incomplete_gamma(rho + 1.0, delta), selection_probability(delta)};
}

SelectionStats random_selection(double retention, double rho) {
    if (!(retention > 0.0 && retention <= 1.0)) {
        throw std::domain_error("retention must lie in (0, 1]");
    }
    require_rho(rho);
    return {retention * specfun::gamma(1.0 + rho), retention};
}

double selection_probability(double delta) {
    require_delta(delta);
    return -std::expm1(-delta);
}

double selected_intensity(double delta, double lambda_j) {
    if (!(lambda_j > 0.0)) throw std::domain_error("lambda_j must be positive");
    return selection_probability(delta) * lambda_j;
}

double conditional_gain_moment(double delta, double rho) {
    require_delta(delta);
    require_rho(rho);
    return specfun::lower_incomplete_gamma(rho + 1.0, delta) / selection_probability(delta);
}

double connection_outage(const SystemParams& p, const SelectionStats& s, double beta_b) {
    if (!(beta_b >= 0.0)) throw std::domain_error("beta_b must be nonnegative");
    const DerivedConstants k = derive_constants(p);
    return -std::expm1(-connection_exponent(k, s, beta_b));
}

double connection_outage(const SystemParams& p, double delta, double beta_b) {
    return connection_outage(p, threshold_selection(delta, 2.0 / p.alpha()), beta_b);
}

double secrecy_outage(const SystemParams& p, const SelectionStats& s, double beta_e) {
    if (!(beta_e > 0.0)) throw std::domain_error("beta_e must be positive");
    return -std::expm1(-secrecy_exponent(p, 2.0 / p.alpha(), s, beta_e));
}

double secrecy_outage(const SystemParams& p, double delta, double beta_e) {
    return secrecy_outage(p, threshold_selection(delta, 2.0 / p.alpha()), beta_e);
}

double beta_e_star(const SystemParams& p, const SelectionStats& s) {
    const double rho = 2.0 / p.alpha();
    const double gammas = specfun::gamma(1.0 + rho) * specfun::gamma(1.0 - rho);
    const double log_budget = -std::log1p(-p.epsilon());
    const double inner = p.lambda_e() / (std::pow(p.p_j() / p.p_s(), rho) * p.lambda_j() *
                                         s.retention * gammas * log_budget);
    return std::pow(inner, p.alpha() / 2.0);
}

double beta_e_star(const SystemParams& p, double delta) {
    return beta_e_star(p, threshold_selection(delta, 2.0 / p.alpha()));
}

double beta_b_star(const SystemParams& p, const SelectionStats& s) {
    const DerivedConstants k = derive_constants(p);
    // p_co(beta) = sigma  <=>  exponent(beta) = -ln(1 - sigma); same root, no
    // loss of resolution from 1 - exp(-x).
    const double target = -std::log1p(-p.sigma());
    auto excess = [&](double beta) { return connection_exponent(k, s, beta) - target; };
    double hi = 1.0;
    int doublings = 0;
    while (excess(hi) < 0.0) {
        if (++doublings > 200) {
            throw NumericalError("beta_b_star: connection outage budget unreachable");
        }
        hi *= 2.0;
    }
    return bisect_root(excess, 0.0, hi, std::numeric_limits<double>::denorm_min());
}

double beta_b_star(const SystemParams& p, double delta) {
    return beta_b_star(p, threshold_selection(delta, 2.0 / p.alpha()));
}

DesignPoint throughput(const SystemParams& p, double delta) {
    return compose(p, threshold_selection(delta, 2.0 / p.alpha()), delta);
}

DesignPoint random_baseline_throughput(const SystemParams& p, double retention) {
    const SelectionStats s = random_selection(retention, 2.0 / p.alpha());
    const double matched_delta = -std::log1p(-retention);
    return compose(p, s, matched_delta);
}

double throughput_derivative(const SystemParams& p, double delta) {
    require_delta(delta);
    const DerivedConstants k = derive_constants(p);
    const double rho = k.rho;
    const double moment = specfun::lower_incomplete_gamma(rho + 1.0, delta);
    const double bb = beta_b_star(p, delta);
    const double be = beta_e_star(p, delta);

    // d beta_B / d delta = -a delta^rho e^-delta beta^rho / (b + a rho gamma beta^(rho-1)),
    // written with numerator and denominator scaled by beta so beta -> 0 stays finite.
    const double bob_num = k.a * std::pow(delta, rho) * std::exp(-delta) * std::pow(bb, rho);
    const double bob_den = k.b * bb + k.a * rho * moment * std::pow(bb, rho);
    const double d_rt = -(bob_num / bob_den) * (bb / (1.0 + bb));

    // d beta_E / d delta = -beta_E e^-delta / (rho (1 - e^-delta)).
    const double d_re = -(be / (1.0 + be)) / (rho * std::expm1(delta));

    return (d_rt - d_re) / std::numbers::ln2;
}

} // namespace ojam
